#include "ssnforge/registry/store.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ssnforge/ontology/json_codec.h"
#include "ssnforge/rdf/ntriples.h"

namespace ssnforge::registry {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string tmp_name(std::string_view file) { return std::string(file) + ".tmp"; }

void write_file_synced(const fs::path& path, const std::string& content) {
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw StoreIoError("cannot open " + path.string() + ": " + std::strerror(errno));
  }
  std::size_t done = 0;
  while (done < content.size()) {
    ssize_t n = ::write(fd, content.data() + done, content.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      throw StoreIoError("cannot write " + path.string() + ": " + std::strerror(err));
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    throw StoreIoError("cannot sync " + path.string() + ": " + std::strerror(errno));
  }
}

void sync_dir(const fs::path& dir) {
  int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
}

void rename_into_place(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  fs::rename(from, to, ec);
  if (ec) throw StoreIoError("cannot rename " + from.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptStore(path.filename().string(), 0, "cannot be read");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Finishes or discards a persist() that was interrupted.
void recover(const fs::path& dir) {
  fs::path store_tmp = dir / tmp_name(kStoreFile);
  fs::path index_tmp = dir / tmp_name(kIndexFile);
  bool has_store_tmp = fs::exists(store_tmp);
  bool has_index_tmp = fs::exists(index_tmp);
  if (has_index_tmp && !has_store_tmp) {
    // store.nq was already replaced; index.json.tmp is complete.
    rename_into_place(index_tmp, dir / kIndexFile);
    sync_dir(dir);
    return;
  }
  std::error_code ec;
  if (has_store_tmp) fs::remove(store_tmp, ec);
  if (has_index_tmp) fs::remove(index_tmp, ec);
}

json entry_json(const RegistryEntry& e) {
  json def = e.kind == EntryKind::kType ? ontology::to_json(e.type())
                                        : ontology::to_json(e.instance());
  return json{{"kind", to_string(e.kind)},   {"id", e.id},
              {"iri", e.iri.str()},          {"graphIri", e.graph_iri.str()},
              {"registeredAt", e.registered_at}, {"definition", std::move(def)}};
}

struct IndexRecord {
  EntryKind kind;
  std::string id;
  std::string iri;
  std::string graph_iri;
  std::string registered_at;
  json definition;
};

IndexRecord read_record(const json& j, std::size_t n) {
  auto bad = [&](const std::string& msg) {
    return CorruptStore(std::string(kIndexFile), 0, "entry " + std::to_string(n) + ": " + msg);
  };
  if (!j.is_object()) throw bad("expected an object");
  auto str = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw bad(std::string("missing string '") + key + "'");
    return it->get<std::string>();
  };
  auto kind = parse_entry_kind(str("kind"));
  if (!kind) throw bad("unknown kind");
  auto def = j.find("definition");
  if (def == j.end() || !def->is_object()) throw bad("missing definition object");
  return IndexRecord{*kind, str("id"), str("iri"), str("graphIri"), str("registeredAt"), *def};
}

}  // namespace

CorruptStore::CorruptStore(std::string file, int line, const std::string& message)
    : std::runtime_error("corrupt store: " + file +
                         (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      file_(std::move(file)),
      line_(line) {}

std::string render_store(const RegistryState& state) {
  return rdf::serialize_nquads(state.dataset);
}

std::string render_index(const RegistryState& state) {
  json arr = json::array();
  // Types first so that a reader can resolve instance types in one pass.
  for (EntryKind kind : {EntryKind::kType, EntryKind::kInstance}) {
    for (const auto* e : state.list(kind)) arr.push_back(entry_json(*e));
  }
  return arr.dump(2) + "\n";
}

void persist(const RegistryState& state, const fs::path& dir, const PersistHook& hook) {
  auto stage = [&](std::string_view name) {
    if (hook) hook(name);
  };
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw StoreIoError("cannot create " + dir.string() + ": " + ec.message());

  fs::path store_tmp = dir / tmp_name(kStoreFile);
  fs::path index_tmp = dir / tmp_name(kIndexFile);
  try {
    stage("write-store");
    write_file_synced(store_tmp, render_store(state));
    stage("write-index");
    write_file_synced(index_tmp, render_index(state));
  } catch (...) {
    fs::remove(store_tmp, ec);
    fs::remove(index_tmp, ec);
    throw;
  }
  // From here on the new snapshot is complete on disk; recover() finishes
  // the commit if we stop between the two renames.
  stage("rename-store");
  rename_into_place(store_tmp, dir / kStoreFile);
  try {
    stage("rename-index");
    rename_into_place(index_tmp, dir / kIndexFile);
    sync_dir(dir);
  } catch (const std::exception& e) {
    throw StoreIoError(e.what(), /*committed=*/true);
  }
}

RegistryState load(const fs::path& dir, const ontology::Namespaces& ns) {
  RegistryState state;
  if (!fs::exists(dir)) return state;
  recover(dir);

  fs::path store_path = dir / kStoreFile;
  fs::path index_path = dir / kIndexFile;
  bool has_store = fs::exists(store_path);
  bool has_index = fs::exists(index_path);
  if (!has_store && !has_index) return state;
  if (!has_index) throw CorruptStore(std::string(kIndexFile), 0, "missing");
  if (!has_store) throw CorruptStore(std::string(kStoreFile), 0, "missing");

  // Index: definitions are the source of truth; graphs are re-derived.
  const std::string index_text = read_file(index_path);
  json index;
  try {
    index = json::parse(index_text);
  } catch (const json::parse_error& e) {
    throw CorruptStore(std::string(kIndexFile), line_of_offset(index_text, e.byte), e.what());
  }
  if (!index.is_array()) throw CorruptStore(std::string(kIndexFile), 1, "expected a JSON array");

  std::vector<IndexRecord> records;
  for (std::size_t n = 0; n < index.size(); ++n) records.push_back(read_record(index[n], n));
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.kind == EntryKind::kType && b.kind != EntryKind::kType;
  });
  for (std::size_t n = 0; n < records.size(); ++n) {
    const IndexRecord& r = records[n];
    auto bad = [&](const std::string& msg) {
      return CorruptStore(std::string(kIndexFile), 0,
                          std::string(to_string(r.kind)) + " '" + r.id + "': " + msg);
    };
    if (state.find(r.kind, r.id)) throw bad("listed twice");
    RegistryEntry entry = [&] {
      try {
        if (r.kind == EntryKind::kType) {
          return make_type_entry(ontology::sensor_type_from_json(r.definition),
                                 r.registered_at, ns);
        }
        auto inst = ontology::sensor_instance_from_json(r.definition);
        const RegistryEntry* type = state.find(EntryKind::kType, inst.type_id);
        if (type == nullptr) throw bad("refers to missing type '" + inst.type_id + "'");
        return make_instance_entry(std::move(inst), type->type(), r.registered_at, ns);
      } catch (const CorruptStore&) {
        throw;
      } catch (const std::exception& e) {
        throw bad(e.what());
      }
    }();
    if (entry.id != r.id) throw bad("id does not match definition id '" + entry.id + "'");
    if (entry.iri.str() != r.iri || entry.graph_iri.str() != r.graph_iri) {
      throw bad("stored IRIs differ from the minted ones (was the base IRI changed?)");
    }
    state.put(std::move(entry));
  }

  // Store: every statement must belong to the expected graphs and every
  // expected statement must be present.
  const std::string store_text = read_file(store_path);
  std::size_t matched = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start < store_text.size()) {
    ++line_no;
    std::size_t end = store_text.find('\n', start);
    if (end == std::string::npos) end = store_text.size();
    std::string_view line(store_text.data() + start, end - start);
    start = end + 1;
    rdf::Dataset one;
    try {
      one = rdf::parse_nquads(line);
    } catch (const SyntaxError& e) {
      throw CorruptStore(std::string(kStoreFile), line_no, e.message());
    } catch (const std::exception& e) {
      throw CorruptStore(std::string(kStoreFile), line_no, e.what());
    }
    for (const auto& [graph_name, g] : one.graphs()) {
      const rdf::Graph* expected = state.dataset.find(graph_name);
      for (const auto& t : g.triples()) {
        if (expected == nullptr || !expected->contains(t)) {
          throw CorruptStore(std::string(kStoreFile), line_no,
                             "statement does not match the indexed definitions");
        }
        ++matched;
      }
    }
  }
  if (matched > state.dataset.quad_count()) {
    throw CorruptStore(std::string(kStoreFile), 0, "store repeats statements");
  }
  if (matched < state.dataset.quad_count()) {
    throw CorruptStore(std::string(kStoreFile), line_no + 1,
                       "store ends early: " +
                           std::to_string(state.dataset.quad_count() - matched) +
                           " statements missing");
  }
  if (auto broken = check_invariants(state)) {
    throw CorruptStore(std::string(kIndexFile), 0, *broken);
  }
  return state;
}

}  // namespace ssnforge::registry
