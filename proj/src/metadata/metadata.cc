#include "ssnforge/metadata/metadata.h"

#include <algorithm>

#include "ssnforge/errors.h"
#include "ssnforge/ontology/mapping.h"
#include "ssnforge/ontology/mint.h"
#include "ssnforge/ontology/validate.h"

namespace ssnforge::metadata {
namespace {

std::string escape_value(std::string_view v) {
  std::string out;
  out.reserve(v.size());
  for (char c : v) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '=': out += "\\="; break;
      case ':': out += "\\:"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_value(std::string_view v, int line, int first_column) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != '\\') {
      out += v[i];
      continue;
    }
    if (i + 1 == v.size()) {
      throw SyntaxError(line, first_column + static_cast<int>(i),
                        "dangling '\\' at end of value");
    }
    switch (v[++i]) {
      case '\\': out += '\\'; break;
      case '=': out += '='; break;
      case ':': out += ':'; break;
      case 'n': out += '\n'; break;
      default:
        throw SyntaxError(line, first_column + static_cast<int>(i) - 1,
                          std::string("unknown escape '\\") + v[i] + "'");
    }
  }
  return out;
}

}  // namespace

DuplicateKey::DuplicateKey(std::string key, int line)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         "duplicate key '" + key + "'"),
      key_(std::move(key)),
      line_(line) {}

bool MetadataConfig::is_valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

void MetadataConfig::add(std::string key, std::string value) {
  if (!is_valid_key(key)) throw std::invalid_argument("invalid metadata key '" + key + "'");
  if (find(key) != nullptr) throw DuplicateKey(std::move(key), 0);
  entries_.emplace_back(std::move(key), std::move(value));
}

const std::string* MetadataConfig::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

MetadataConfig generate_metadata(const ontology::SensorInstance& instance,
                                 const ontology::SensorType& type,
                                 const ontology::Namespaces& ns) {
  if (instance.type_id != type.id) {
    throw ontology::TypeMismatch("instance '" + instance.id + "' has type '" +
                                 instance.type_id + "', not '" + type.id + "'");
  }
  if (auto v = ontology::validate_instance(instance, type); !v.empty()) {
    throw ontology::InvalidDefinition("sensor instance", std::move(v));
  }
  MetadataConfig c;
  c.add("sensorName", instance.name);
  c.add("sensorType", ontology::type_iri(type, ns).str());
  c.add("sensorIri", ontology::instance_iri(instance, ns).str());
  if (instance.owner) c.add("author", *instance.owner);
  if (instance.description) c.add("description", *instance.description);
  c.add("latitude", instance.latitude.lexical());
  c.add("longitude", instance.longitude.lexical());
  c.add("featureOfInterest",
        ontology::resolve_feature_of_interest(instance.feature_of_interest, ns).str());
  for (const auto& b : instance.bindings) {
    c.add(b.xgsn_field + ".propertyName", b.property.str());
    c.add(b.xgsn_field + ".unit", b.unit.str());
  }
  return c;
}

std::string render(const MetadataConfig& config) {
  std::string out = "# X-GSN stream annotation metadata";
  if (const std::string* iri = config.find("sensorIri")) {
    // Header is a comment; keep it on one line whatever the value holds.
    std::string flat = *iri;
    std::replace(flat.begin(), flat.end(), '\n', ' ');
    out += " for " + flat;
  }
  out += '\n';
  for (const auto& [key, value] : config.entries()) {
    out += key;
    out += '=';
    out += escape_value(value);
    out += '\n';
  }
  return out;
}

MetadataConfig parse_metadata(std::string_view text) {
  MetadataConfig c;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SyntaxError(line_no, 0, "expected key=value");
    }
    std::string key(line.substr(0, eq));
    if (!MetadataConfig::is_valid_key(key)) {
      throw SyntaxError(line_no, 1, "invalid key '" + key + "'");
    }
    std::string value =
        unescape_value(line.substr(eq + 1), line_no, static_cast<int>(eq) + 2);
    if (c.find(key) != nullptr) throw DuplicateKey(key, line_no);
    c.add(std::move(key), std::move(value));
  }
  return c;
}

}  // namespace ssnforge::metadata
