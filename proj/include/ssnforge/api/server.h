#ifndef SSNFORGE_API_SERVER_H_
#define SSNFORGE_API_SERVER_H_

#include <exception>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssnforge/ontology/model.h"
#include "ssnforge/registry/registry.h"

namespace httplib {
class Server;
}

namespace ssnforge::api {

// Uniform error body: {"httpStatus", "code", "message", "details"?}.
struct ApiError {
  int http_status;
  std::string code;
  std::string message;
  std::vector<ontology::Violation> details;

  nlohmann::json to_json() const;
};

// Maps an exception raised while serving a request to its API error.
ApiError to_api_error(std::exception_ptr error);

enum class MediaFormat { kJson, kTurtle };

// Picks a representation for an Accept header; nullopt when nothing offered
// is acceptable. An empty header means JSON.
std::optional<MediaFormat> negotiate(const std::string& accept);

// Definition JSON with iri, graphIri, registeredAt and tripleCount added.
nlohmann::json entry_to_json(const registry::RegistryEntry& entry);

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0 picks a free port
  // Served at "/" when set (the web editor bundle).
  std::optional<std::filesystem::path> static_dir;
};

// HTTP front end of the registry:
//
//   POST   /api/types                 register a sensor type
//   PUT    /api/types/:id             replace a sensor type
//   DELETE /api/types/:id
//   GET    /api/types[/:id]           JSON or Turtle (Accept)
//   POST   /api/instances
//   DELETE /api/instances/:id
//   GET    /api/instances[/:id]
//   GET    /api/instances/:id/metadata
//   POST   /api/preview/type, /api/preview/instance
//   POST   /api/query                 text/plain query, JSON bindings
//   GET    /health
class ApiServer {
 public:
  ApiServer(registry::Registry& registry, ServerOptions options);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds the listening socket and returns the port. Throws
  // std::runtime_error if the address is unavailable.
  int bind();
  // Serves until stop(); call bind() first.
  void listen();
  void stop();
  bool is_running() const;
  void wait_until_ready() const;

 private:
  void install_routes();

  registry::Registry& registry_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace ssnforge::api

#endif  // SSNFORGE_API_SERVER_H_
