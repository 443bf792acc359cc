#ifndef SSNFORGE_REGISTRY_REGISTRY_H_
#define SSNFORGE_REGISTRY_REGISTRY_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssnforge/registry/state.h"
#include "ssnforge/registry/store.h"

namespace ssnforge::registry {

class RegistryError : public std::runtime_error {
 public:
  enum class Code { kAlreadyExists, kNotFound, kConflictInUse, kUnknownType };

  RegistryError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

std::string_view to_string(RegistryError::Code code);

// Current UTC time as RFC 3339 with second precision.
std::string utc_now_rfc3339();

// Local stand-in for the linked-data publication service.
//
// Single writer, many readers: mutations are serialized and each one builds
// a new immutable RegistryState, persists it (when a data directory is
// configured) and only then publishes it. Readers hold a snapshot pointer
// and never block on writers beyond the pointer swap. A failed mutation
// leaves both the published state and the files untouched.
class Registry {
 public:
  struct Options {
    ontology::Namespaces ns = ontology::Namespaces::standard();
    // In-memory only when empty.
    std::optional<std::filesystem::path> data_dir;
    std::function<std::string()> clock = utc_now_rfc3339;
    PersistHook persist_hook;
  };

  // Loads the existing snapshot from data_dir. Throws CorruptStore.
  explicit Registry(Options options);

  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  std::shared_ptr<const RegistryState> snapshot() const;
  const ontology::Namespaces& namespaces() const { return options_.ns; }
  const std::optional<std::filesystem::path>& data_dir() const {
    return options_.data_dir;
  }

  // Throw ontology::InvalidDefinition, RegistryError or StoreIoError.
  RegistryEntry register_type(const ontology::SensorType& type);
  RegistryEntry update_type(const ontology::SensorType& type);
  RegistryEntry register_instance(const ontology::SensorInstance& instance);
  void remove(EntryKind kind, const std::string& id);

  RegistryEntry get(EntryKind kind, const std::string& id) const;
  std::vector<RegistryEntry> list(EntryKind kind) const;

 private:
  template <typename Fn>
  RegistryEntry mutate(Fn&& fn);

  Options options_;
  std::mutex write_mu_;
  mutable std::mutex snapshot_mu_;
  std::shared_ptr<const RegistryState> state_;
};

}  // namespace ssnforge::registry

#endif  // SSNFORGE_REGISTRY_REGISTRY_H_
