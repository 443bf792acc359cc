#include "ssnforge/ontology/validate.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ssnforge/ontology/mint.h"

namespace ssnforge::ontology {

InvalidDefinition::InvalidDefinition(std::string kind,
                                     std::vector<Violation> violations)
    : std::runtime_error("invalid " + kind + ": " +
                         (violations.empty() ? std::string("no details")
                                             : violations.front().code + " " +
                                                   violations.front().message)),
      kind_(std::move(kind)),
      violations_(std::move(violations)) {}

const MeasurementCapability* SensorType::capability_for(
    const rdf::Iri& property) const {
  for (const auto& cap : capabilities) {
    if (cap.property == property) return &cap;
  }
  return nullptr;
}

bool is_valid_field_name(std::string_view name) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (name.empty() || !alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<Violation> validate_type(const SensorType& type) {
  std::vector<Violation> out;
  if (!is_slug(type.id)) {
    out.push_back({codes::kBadSlug, "type id '" + type.id + "' must match [a-z0-9-]+"});
  }
  if (type.observes.empty()) {
    out.push_back({codes::kEmptyObserves, "a sensor type must observe at least one property"});
  }

  std::set<rdf::Iri> seen;
  std::map<std::string, rdf::Iri> slugs;
  for (const auto& prop : type.observes) {
    if (!seen.insert(prop.iri).second) {
      out.push_back({codes::kDupProperty, "property " + prop.iri.str() + " is listed twice"});
      continue;
    }
    std::string slug = property_slug(prop.iri);
    if (slug.empty()) {
      out.push_back({codes::kPropertySlug,
                     "property " + prop.iri.str() + " has no usable local name"});
      continue;
    }
    auto [it, fresh] = slugs.emplace(slug, prop.iri);
    if (!fresh) {
      out.push_back({codes::kPropertySlug, "properties " + it->second.str() + " and " +
                                               prop.iri.str() + " share the local name '" +
                                               slug + "'"});
    }
  }

  std::set<rdf::Iri> with_capability;
  for (const auto& cap : type.capabilities) {
    if (!seen.count(cap.property)) {
      out.push_back({codes::kCapUnknownProperty,
                     "capability for " + cap.property.str() + " which is not observed"});
    } else if (!with_capability.insert(cap.property).second) {
      out.push_back({codes::kDupCapability,
                     "more than one capability for " + cap.property.str()});
    }
    if (cap.accuracy && cap.accuracy->value.value() < 0) {
      out.push_back({codes::kNegAccuracy, "accuracy for " + cap.property.str() +
                                              " must be >= 0, got " +
                                              cap.accuracy->value.lexical()});
    }
    if (cap.frequency && !(cap.frequency->value.value() > 0)) {
      out.push_back({codes::kNonposFrequency, "frequency for " + cap.property.str() +
                                                  " must be > 0, got " +
                                                  cap.frequency->value.lexical()});
    }
  }
  return out;
}

std::vector<Violation> validate_instance(const SensorInstance& instance,
                                         const SensorType& type) {
  std::vector<Violation> out;
  if (!is_slug(instance.id)) {
    out.push_back({codes::kBadSlug, "instance id '" + instance.id + "' must match [a-z0-9-]+"});
  }
  double lat = instance.latitude.value();
  if (!(lat >= -90 && lat <= 90)) {
    out.push_back({codes::kLatRange, "latitude " + instance.latitude.lexical() +
                                         " outside [-90, 90]"});
  }
  double lon = instance.longitude.value();
  if (!(lon >= -180 && lon <= 180)) {
    out.push_back({codes::kLonRange, "longitude " + instance.longitude.lexical() +
                                         " outside [-180, 180]"});
  }

  bool foi_ok;
  if (instance.feature_of_interest.find(':') != std::string::npos) {
    foi_ok = rdf::Iri::is_valid(instance.feature_of_interest);
  } else {
    std::string lower = instance.feature_of_interest;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    foi_ok = is_slug(lower);
  }
  if (!foi_ok) {
    out.push_back({codes::kBadFoi, "feature of interest '" + instance.feature_of_interest +
                                       "' is neither an absolute IRI nor a slug"});
  }

  std::set<rdf::Iri> expected;
  for (const auto& p : type.observes) expected.insert(p.iri);
  std::set<rdf::Iri> bound;
  bool duplicate_property = false;
  for (const auto& b : instance.bindings) {
    if (!bound.insert(b.property).second) duplicate_property = true;
  }
  if (duplicate_property || bound != expected) {
    std::string missing;
    for (const auto& p : expected) {
      if (!bound.count(p)) missing += (missing.empty() ? "" : ", ") + p.str();
    }
    std::string extra;
    for (const auto& p : bound) {
      if (!expected.count(p)) extra += (extra.empty() ? "" : ", ") + p.str();
    }
    std::string msg = "bindings must cover exactly the properties of type '" + type.id + "'";
    if (!missing.empty()) msg += "; missing: " + missing;
    if (!extra.empty()) msg += "; not observed by the type: " + extra;
    if (duplicate_property) msg += "; a property is bound more than once";
    out.push_back({codes::kBindingMismatch, msg});
  }

  std::set<std::string> fields;
  for (const auto& b : instance.bindings) {
    if (!is_valid_field_name(b.xgsn_field)) {
      out.push_back({codes::kBadFieldName, "field name '" + b.xgsn_field +
                                               "' must match [a-zA-Z][a-zA-Z0-9_]*"});
    } else if (!fields.insert(b.xgsn_field).second) {
      out.push_back({codes::kDupField, "field name '" + b.xgsn_field + "' used twice"});
    }
  }
  return out;
}

}  // namespace ssnforge::ontology
