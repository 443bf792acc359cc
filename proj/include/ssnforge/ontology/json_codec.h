#ifndef SSNFORGE_ONTOLOGY_JSON_CODEC_H_
#define SSNFORGE_ONTOLOGY_JSON_CODEC_H_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ssnforge/ontology/model.h"

namespace ssnforge::ontology {

// The JSON document does not have the expected shape. `path` is a JSON
// pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

nlohmann::json to_json(const SensorType& type);
nlohmann::json to_json(const SensorInstance& instance);
nlohmann::json to_json(const Violation& violation);

// Unknown members are ignored; absent optional members stay empty.
SensorType sensor_type_from_json(const nlohmann::json& j);
SensorInstance sensor_instance_from_json(const nlohmann::json& j);

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_JSON_CODEC_H_
