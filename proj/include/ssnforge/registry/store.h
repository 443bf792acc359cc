#ifndef SSNFORGE_REGISTRY_STORE_H_
#define SSNFORGE_REGISTRY_STORE_H_

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ssnforge/registry/state.h"

namespace ssnforge::registry {

inline constexpr std::string_view kStoreFile = "store.nq";
inline constexpr std::string_view kIndexFile = "index.json";

class CorruptStore : public std::runtime_error {
 public:
  // `line` is 1-based; 0 when the problem is not tied to a line.
  CorruptStore(std::string file, int line, const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

class StoreIoError : public std::runtime_error {
 public:
  explicit StoreIoError(const std::string& message, bool committed = false)
      : std::runtime_error(message), committed_(committed) {}

  // The new store.nq was already in place: the snapshot is durable and the
  // next load completes the commit.
  bool committed() const { return committed_; }

 private:
  bool committed_;
};

// Test seam: called with "write-store", "write-index", "rename-store" and
// "rename-index" before each step of persist(); throwing aborts the commit.
using PersistHook = std::function<void(std::string_view stage)>;

// Snapshot files for a state, as persist() writes them.
std::string render_store(const RegistryState& state);
std::string render_index(const RegistryState& state);

// Writes store.nq and index.json into `dir` (created if missing). Both are
// written to temporary files first and then renamed into place, so an
// interrupted persist leaves the previous snapshot loadable.
void persist(const RegistryState& state, const std::filesystem::path& dir,
             const PersistHook& hook = nullptr);

// Rebuilds the state from `dir` and re-checks every invariant, including
// that each stored graph equals the mapper output. A missing or empty
// directory yields an empty state. Throws CorruptStore.
RegistryState load(const std::filesystem::path& dir, const ontology::Namespaces& ns);

}  // namespace ssnforge::registry

#endif  // SSNFORGE_REGISTRY_STORE_H_
