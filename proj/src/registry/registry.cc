#include "ssnforge/registry/registry.h"

#include <ctime>
#include <set>

#include "ssnforge/ontology/mapping.h"
#include "ssnforge/ontology/mint.h"
#include "ssnforge/ontology/validate.h"

namespace ssnforge::registry {

using ontology::MintKind;
using ontology::SensorInstance;
using ontology::SensorType;

std::string_view to_string(EntryKind kind) {
  return kind == EntryKind::kType ? "type" : "instance";
}

std::optional<EntryKind> parse_entry_kind(std::string_view text) {
  if (text == "type") return EntryKind::kType;
  if (text == "instance") return EntryKind::kInstance;
  return std::nullopt;
}

std::string_view to_string(RegistryError::Code code) {
  switch (code) {
    case RegistryError::Code::kAlreadyExists: return "ALREADY_EXISTS";
    case RegistryError::Code::kNotFound: return "NOT_FOUND";
    case RegistryError::Code::kConflictInUse: return "CONFLICT_IN_USE";
    case RegistryError::Code::kUnknownType: return "UNKNOWN_TYPE";
  }
  return "";
}

std::string utc_now_rfc3339() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

rdf::Iri entry_graph_iri(EntryKind kind, const std::string& id,
                         const ontology::Namespaces& ns) {
  MintKind mk = kind == EntryKind::kType ? MintKind::kType : MintKind::kInstance;
  return rdf::Iri(ontology::mint_iri(mk, {id}, ns).str() + "/graph");
}

RegistryEntry make_type_entry(SensorType type, std::string registered_at,
                              const ontology::Namespaces& ns) {
  rdf::Graph graph = ontology::type_to_graph(type, ns);
  std::string id = type.id;
  return RegistryEntry{EntryKind::kType,
                       id,
                       ontology::type_iri(type, ns),
                       entry_graph_iri(EntryKind::kType, id, ns),
                       std::move(type),
                       std::move(graph),
                       std::move(registered_at)};
}

RegistryEntry make_instance_entry(SensorInstance instance, const SensorType& type,
                                  std::string registered_at,
                                  const ontology::Namespaces& ns) {
  rdf::Graph graph = ontology::instance_to_graph(instance, type, ns);
  std::string id = instance.id;
  return RegistryEntry{EntryKind::kInstance,
                       id,
                       ontology::instance_iri(instance, ns),
                       entry_graph_iri(EntryKind::kInstance, id, ns),
                       std::move(instance),
                       std::move(graph),
                       std::move(registered_at)};
}

const RegistryEntry* RegistryState::find(EntryKind kind, std::string_view id) const {
  auto it = entries.find(Key{kind, std::string(id)});
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<const RegistryEntry*> RegistryState::list(EntryKind kind) const {
  std::vector<const RegistryEntry*> out;
  for (const auto& [key, entry] : entries) {
    if (key.first == kind) out.push_back(&entry);
  }
  return out;
}

std::size_t RegistryState::count(EntryKind kind) const { return list(kind).size(); }

std::vector<const RegistryEntry*> RegistryState::instances_of(
    std::string_view type_id) const {
  std::vector<const RegistryEntry*> out;
  for (const auto* e : list(EntryKind::kInstance)) {
    if (e->instance().type_id == type_id) out.push_back(e);
  }
  return out;
}

void RegistryState::put(RegistryEntry entry) {
  dataset.put(entry.graph_iri, entry.graph);
  Key key{entry.kind, entry.id};
  entries.insert_or_assign(std::move(key), std::move(entry));
}

void RegistryState::erase(EntryKind kind, const std::string& id) {
  auto it = entries.find(Key{kind, id});
  if (it == entries.end()) return;
  dataset.erase(it->second.graph_iri);
  entries.erase(it);
}

std::optional<std::string> check_invariants(const RegistryState& state) {
  if (state.entries.size() != state.dataset.size()) {
    return "registry holds " + std::to_string(state.entries.size()) + " entries but " +
           std::to_string(state.dataset.size()) + " named graphs";
  }
  for (const auto& [key, entry] : state.entries) {
    const rdf::Graph* g = state.dataset.find(entry.graph_iri);
    if (g == nullptr) return "no named graph for " + std::string(to_string(key.first)) + " '" + key.second + "'";
    if (!(*g == entry.graph)) return "named graph of '" + key.second + "' differs from its entry";
    if (key.first != EntryKind::kInstance) continue;
    const auto& inst = entry.instance();
    const RegistryEntry* type = state.find(EntryKind::kType, inst.type_id);
    if (type == nullptr) {
      return "instance '" + inst.id + "' refers to missing type '" + inst.type_id + "'";
    }
    if (auto v = ontology::validate_instance(inst, type->type()); !v.empty()) {
      return "instance '" + inst.id + "': " + v.front().code + " " + v.front().message;
    }
  }
  return std::nullopt;
}

Registry::Registry(Options options) : options_(std::move(options)) {
  if (options_.data_dir) {
    state_ = std::make_shared<const RegistryState>(load(*options_.data_dir, options_.ns));
  } else {
    state_ = std::make_shared<const RegistryState>();
  }
}

std::shared_ptr<const RegistryState> Registry::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return state_;
}

template <typename Fn>
RegistryEntry Registry::mutate(Fn&& fn) {
  std::lock_guard write_lock(write_mu_);
  auto next = std::make_shared<RegistryState>(*snapshot());
  RegistryEntry result = fn(*next);
  if (auto broken = check_invariants(*next)) {
    throw std::logic_error("registry invariant broken: " + *broken);
  }
  if (options_.data_dir) {
    try {
      persist(*next, *options_.data_dir, options_.persist_hook);
    } catch (const StoreIoError& e) {
      if (e.committed()) {
        std::lock_guard lock(snapshot_mu_);
        state_ = std::move(next);
      }
      throw;
    }
  }
  std::lock_guard lock(snapshot_mu_);
  state_ = std::move(next);
  return result;
}

RegistryEntry Registry::register_type(const SensorType& type) {
  return mutate([&](RegistryState& s) {
    if (s.find(EntryKind::kType, type.id)) {
      throw RegistryError(RegistryError::Code::kAlreadyExists,
                          "sensor type '" + type.id + "' already exists");
    }
    RegistryEntry e = make_type_entry(type, options_.clock(), options_.ns);
    s.put(e);
    return e;
  });
}

RegistryEntry Registry::update_type(const SensorType& type) {
  return mutate([&](RegistryState& s) {
    const RegistryEntry* old = s.find(EntryKind::kType, type.id);
    if (old == nullptr) {
      throw RegistryError(RegistryError::Code::kNotFound,
                          "sensor type '" + type.id + "' not found");
    }
    // Validate before the usage check so bad input reports violations.
    RegistryEntry e = make_type_entry(type, options_.clock(), options_.ns);

    std::set<rdf::Iri> before;
    for (const auto& p : old->type().observes) before.insert(p.iri);
    std::set<rdf::Iri> after;
    for (const auto& p : type.observes) after.insert(p.iri);
    auto users = s.instances_of(type.id);
    if (before != after && !users.empty()) {
      std::string removed;
      for (const auto& p : before) {
        if (!after.count(p)) removed += (removed.empty() ? "" : ", ") + p.str();
      }
      throw RegistryError(
          RegistryError::Code::kConflictInUse,
          "sensor type '" + type.id + "' is used by instance '" + users.front()->id +
              "'; its observed properties cannot change" +
              (removed.empty() ? std::string() : " (would remove " + removed + ")"));
    }
    s.put(e);
    return e;
  });
}

RegistryEntry Registry::register_instance(const SensorInstance& instance) {
  return mutate([&](RegistryState& s) {
    const RegistryEntry* type = s.find(EntryKind::kType, instance.type_id);
    if (type == nullptr) {
      throw RegistryError(RegistryError::Code::kUnknownType,
                          "unknown sensor type '" + instance.type_id + "'");
    }
    if (s.find(EntryKind::kInstance, instance.id)) {
      throw RegistryError(RegistryError::Code::kAlreadyExists,
                          "sensor instance '" + instance.id + "' already exists");
    }
    RegistryEntry e =
        make_instance_entry(instance, type->type(), options_.clock(), options_.ns);
    s.put(e);
    return e;
  });
}

void Registry::remove(EntryKind kind, const std::string& id) {
  mutate([&](RegistryState& s) {
    const RegistryEntry* e = s.find(kind, id);
    if (e == nullptr) {
      throw RegistryError(RegistryError::Code::kNotFound,
                          "sensor " + std::string(to_string(kind)) + " '" + id + "' not found");
    }
    if (kind == EntryKind::kType) {
      if (auto users = s.instances_of(id); !users.empty()) {
        throw RegistryError(RegistryError::Code::kConflictInUse,
                            "sensor type '" + id + "' is used by instance '" +
                                users.front()->id + "'");
      }
    }
    RegistryEntry removed = *e;
    s.erase(kind, id);
    return removed;
  });
}

RegistryEntry Registry::get(EntryKind kind, const std::string& id) const {
  auto s = snapshot();
  const RegistryEntry* e = s->find(kind, id);
  if (e == nullptr) {
    throw RegistryError(RegistryError::Code::kNotFound,
                        "sensor " + std::string(to_string(kind)) + " '" + id + "' not found");
  }
  return *e;
}

std::vector<RegistryEntry> Registry::list(EntryKind kind) const {
  auto s = snapshot();
  std::vector<RegistryEntry> out;
  for (const auto* e : s->list(kind)) out.push_back(*e);
  return out;
}

}  // namespace ssnforge::registry
