#ifndef SSNFORGE_REGISTRY_STATE_H_
#define SSNFORGE_REGISTRY_STATE_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ssnforge/ontology/model.h"
#include "ssnforge/ontology/namespaces.h"
#include "ssnforge/rdf/graph.h"

namespace ssnforge::registry {

enum class EntryKind { kType, kInstance };

std::string_view to_string(EntryKind kind);  // "type" / "instance"
std::optional<EntryKind> parse_entry_kind(std::string_view text);

struct RegistryEntry {
  EntryKind kind;
  std::string id;
  rdf::Iri iri;
  rdf::Iri graph_iri;
  std::variant<ontology::SensorType, ontology::SensorInstance> definition;
  rdf::Graph graph;
  std::string registered_at;  // RFC 3339, UTC

  const ontology::SensorType& type() const {
    return std::get<ontology::SensorType>(definition);
  }
  const ontology::SensorInstance& instance() const {
    return std::get<ontology::SensorInstance>(definition);
  }

  friend bool operator==(const RegistryEntry&, const RegistryEntry&) = default;
};

// mint_iri(kind, [id]) + "/graph".
rdf::Iri entry_graph_iri(EntryKind kind, const std::string& id,
                         const ontology::Namespaces& ns);

// Builds the entry for a definition by running the mapper.
RegistryEntry make_type_entry(ontology::SensorType type, std::string registered_at,
                              const ontology::Namespaces& ns);
RegistryEntry make_instance_entry(ontology::SensorInstance instance,
                                  const ontology::SensorType& type,
                                  std::string registered_at,
                                  const ontology::Namespaces& ns);

struct RegistryState {
  using Key = std::pair<EntryKind, std::string>;

  std::map<Key, RegistryEntry> entries;
  // One named graph per entry, keyed by its graph IRI.
  rdf::Dataset dataset;

  const RegistryEntry* find(EntryKind kind, std::string_view id) const;
  std::vector<const RegistryEntry*> list(EntryKind kind) const;
  std::size_t count(EntryKind kind) const;
  // Instances whose typeId is `type_id`.
  std::vector<const RegistryEntry*> instances_of(std::string_view type_id) const;

  void put(RegistryEntry entry);
  void erase(EntryKind kind, const std::string& id);

  friend bool operator==(const RegistryState&, const RegistryState&) = default;
};

// Describes the first broken invariant (entry/graph correspondence,
// referential integrity, binding coverage), or nullopt when all hold.
std::optional<std::string> check_invariants(const RegistryState& state);

}  // namespace ssnforge::registry

#endif  // SSNFORGE_REGISTRY_STATE_H_
