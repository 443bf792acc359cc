#ifndef SSNFORGE_ONTOLOGY_MODEL_H_
#define SSNFORGE_ONTOLOGY_MODEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssnforge/ontology/decimal.h"
#include "ssnforge/rdf/term.h"

namespace ssnforge::ontology {

struct ObservedProperty {
  rdf::Iri iri;
  std::optional<std::string> label;

  friend bool operator==(const ObservedProperty&, const ObservedProperty&) = default;
};

// A value with its unit, e.g. accuracy 0.5 DegreeCelsius.
struct Measurement {
  Decimal value;
  rdf::Iri unit;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

struct MeasurementCapability {
  rdf::Iri property;
  std::optional<Measurement> accuracy;
  std::optional<Measurement> frequency;

  friend bool operator==(const MeasurementCapability&,
                         const MeasurementCapability&) = default;
};

struct SensorType {
  std::string id;
  std::string name;
  std::vector<ObservedProperty> observes;
  std::vector<MeasurementCapability> capabilities;

  const MeasurementCapability* capability_for(const rdf::Iri& property) const;

  friend bool operator==(const SensorType&, const SensorType&) = default;
};

struct PropertyBinding {
  rdf::Iri property;
  rdf::Iri unit;
  std::string xgsn_field;

  friend bool operator==(const PropertyBinding&, const PropertyBinding&) = default;
};

struct SensorInstance {
  std::string id;
  std::string name;
  std::string type_id;
  std::optional<std::string> owner;
  std::optional<std::string> description;
  Decimal latitude;
  Decimal longitude;
  // Either an absolute IRI or a slug minted under foi/.
  std::string feature_of_interest;
  std::vector<PropertyBinding> bindings;

  friend bool operator==(const SensorInstance&, const SensorInstance&) = default;
};

namespace codes {
inline constexpr const char* kEmptyObserves = "EMPTY_OBSERVES";
inline constexpr const char* kDupProperty = "DUP_PROPERTY";
inline constexpr const char* kBadSlug = "BAD_SLUG";
inline constexpr const char* kNegAccuracy = "NEG_ACCURACY";
inline constexpr const char* kNonposFrequency = "NONPOS_FREQUENCY";
inline constexpr const char* kCapUnknownProperty = "CAP_UNKNOWN_PROPERTY";
inline constexpr const char* kDupCapability = "DUP_CAPABILITY";
inline constexpr const char* kPropertySlug = "PROPERTY_SLUG";
inline constexpr const char* kLatRange = "LAT_RANGE";
inline constexpr const char* kLonRange = "LON_RANGE";
inline constexpr const char* kBindingMismatch = "BINDING_MISMATCH";
inline constexpr const char* kDupField = "DUP_FIELD";
inline constexpr const char* kBadFieldName = "BAD_FIELD_NAME";
inline constexpr const char* kBadFoi = "BAD_FOI";
}  // namespace codes

struct Violation {
  std::string code;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// A definition failed validation; carries every violation found.
class InvalidDefinition : public std::runtime_error {
 public:
  InvalidDefinition(std::string kind, std::vector<Violation> violations);

  const std::string& kind() const { return kind_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::string kind_;
  std::vector<Violation> violations_;
};

class TypeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadSlug : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_MODEL_H_
