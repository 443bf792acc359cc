#ifndef SSNFORGE_METADATA_METADATA_H_
#define SSNFORGE_METADATA_METADATA_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssnforge/ontology/model.h"
#include "ssnforge/ontology/namespaces.h"

namespace ssnforge::metadata {

class DuplicateKey : public std::runtime_error {
 public:
  DuplicateKey(std::string key, int line);

  const std::string& key() const { return key_; }
  // 1-based line in the parsed text; 0 when raised by MetadataConfig::add.
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

// Ordered key=value configuration for the stream annotator.
class MetadataConfig {
 public:
  using Entry = std::pair<std::string, std::string>;

  // Keys must match [A-Za-z0-9_.-]+ (std::invalid_argument otherwise) and be
  // unique (DuplicateKey).
  void add(std::string key, std::string value);
  // nullptr when absent.
  const std::string* find(std::string_view key) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  static bool is_valid_key(std::string_view key);

  friend bool operator==(const MetadataConfig&, const MetadataConfig&) = default;

 private:
  std::vector<Entry> entries_;
};

// sensorName, sensorType, sensorIri, [author], [description], latitude,
// longitude, featureOfInterest, then <field>.propertyName and <field>.unit
// per binding in list order.
// Throws ontology::TypeMismatch or ontology::InvalidDefinition.
MetadataConfig generate_metadata(const ontology::SensorInstance& instance,
                                 const ontology::SensorType& type,
                                 const ontology::Namespaces& ns);

// LF-terminated key=value lines after a '#' comment header naming the
// sensor IRI. Values escape '\', '=', ':' and newline as \\, \=, \:, \n.
std::string render(const MetadataConfig& config);

// Inverse of render(); '#' comment lines and blank lines are skipped and the
// first unescaped '=' separates key from value.
// Throws SyntaxError or DuplicateKey.
MetadataConfig parse_metadata(std::string_view text);

}  // namespace ssnforge::metadata

#endif  // SSNFORGE_METADATA_METADATA_H_
