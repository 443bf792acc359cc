#ifndef SSNFORGE_ONTOLOGY_VALIDATE_H_
#define SSNFORGE_ONTOLOGY_VALIDATE_H_

#include <string_view>
#include <vector>

#include "ssnforge/ontology/model.h"

namespace ssnforge::ontology {

// Empty iff every SensorType invariant holds. Violations are reported in a
// fixed order: id, observed properties, then capabilities in list order.
std::vector<Violation> validate_type(const SensorType& type);

// Field-level instance checks against `type`. The typeId link itself is
// checked by the mapping functions (TypeMismatch).
std::vector<Violation> validate_instance(const SensorInstance& instance,
                                         const SensorType& type);

// [a-zA-Z][a-zA-Z0-9_]*
bool is_valid_field_name(std::string_view name);

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_VALIDATE_H_
