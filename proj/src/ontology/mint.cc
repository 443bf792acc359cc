#include "ssnforge/ontology/mint.h"

#include <cctype>
#include <vector>

namespace ssnforge::ontology {

std::string_view kind_segment(MintKind kind) {
  switch (kind) {
    case MintKind::kType: return "types";
    case MintKind::kInstance: return "sensors";
    case MintKind::kCapability: return "cap";
    case MintKind::kMeasurement: return "m";
    case MintKind::kBinding: return "bind";
    case MintKind::kFoi: return "foi";
  }
  return "";
}

bool is_slug(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) {
      return false;
    }
  }
  return true;
}

rdf::Iri mint_iri(MintKind kind, std::span<const std::string> parts,
                  const Namespaces& ns) {
  std::string out = ns.base.str();
  out += kind_segment(kind);
  for (const auto& part : parts) {
    std::string lower = part;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!is_slug(lower)) throw BadSlug("not a slug: '" + part + "'");
    out += '/';
    out += lower;
  }
  return rdf::Iri(std::move(out));
}

rdf::Iri mint_iri(MintKind kind, std::initializer_list<std::string> parts,
                  const Namespaces& ns) {
  return mint_iri(kind, std::span<const std::string>(parts.begin(), parts.size()), ns);
}

std::string property_slug(const rdf::Iri& property) {
  const std::string& s = property.str();
  std::size_t cut = s.find_last_of("#/");
  std::string_view local = cut == std::string::npos
                               ? std::string_view(s).substr(s.find(':') + 1)
                               : std::string_view(s).substr(cut + 1);
  std::string out;
  bool pending_dash = false;
  for (char ch : local) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      if (pending_dash && !out.empty()) out += '-';
      pending_dash = false;
      out += c;
    } else {
      pending_dash = true;
    }
  }
  return out;
}

rdf::Iri resolve_feature_of_interest(std::string_view value, const Namespaces& ns) {
  if (value.find(':') != std::string_view::npos) {
    if (!rdf::Iri::is_valid(value)) {
      throw BadSlug("feature of interest is not a valid IRI: '" + std::string(value) + "'");
    }
    return rdf::Iri(std::string(value));
  }
  return mint_iri(MintKind::kFoi, {std::string(value)}, ns);
}

}  // namespace ssnforge::ontology
