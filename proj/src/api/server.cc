#include "ssnforge/api/server.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "httplib.h"
#include "ssnforge/metadata/metadata.h"
#include "ssnforge/ontology/json_codec.h"
#include "ssnforge/ontology/mapping.h"
#include "ssnforge/query/results_json.h"
#include "ssnforge/rdf/turtle.h"

namespace ssnforge::api {
namespace {

using nlohmann::json;
using registry::EntryKind;
using registry::RegistryError;

constexpr const char* kJsonType = "application/json";
constexpr const char* kTurtleType = "text/turtle; charset=utf-8";
constexpr const char* kTextType = "text/plain; charset=utf-8";

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Media type without parameters, lower-cased.
std::string media_type(const std::string& header) {
  return lower(trim(header.substr(0, header.find(';'))));
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void send_error(httplib::Response& res, const ApiError& err) {
  send_json(res, err.http_status, err.to_json());
}

bool require_content_type(const httplib::Request& req, httplib::Response& res,
                          std::initializer_list<const char*> accepted) {
  std::string type = media_type(req.get_header_value("Content-Type"));
  for (const char* a : accepted) {
    if (type == a) return true;
  }
  std::string list;
  for (const char* a : accepted) list += (list.empty() ? "" : ", ") + std::string(a);
  send_error(res, {415, "UNSUPPORTED_MEDIA_TYPE",
                   "Content-Type must be " + list + ", got '" +
                       req.get_header_value("Content-Type") + "'",
                   {}});
  return false;
}

// Runs a handler and turns any exception into an ApiError response.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (...) {
      send_error(res, to_api_error(std::current_exception()));
    }
  };
}

json created_body(const registry::RegistryEntry& e) {
  return json{{"id", e.id},
              {"iri", e.iri.str()},
              {"graphIri", e.graph_iri.str()},
              {"tripleCount", e.graph.size()}};
}

}  // namespace

json ApiError::to_json() const {
  json j{{"httpStatus", http_status}, {"code", code}, {"message", message}};
  if (!details.empty()) {
    json d = json::array();
    for (const auto& v : details) d.push_back(ontology::to_json(v));
    j["details"] = std::move(d);
  }
  return j;
}

ApiError to_api_error(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const json::parse_error& e) {
    return {400, "MALFORMED_JSON", e.what(), {}};
  } catch (const ontology::SchemaError& e) {
    return {422, "SCHEMA_ERROR", e.what(), {}};
  } catch (const ontology::InvalidDefinition& e) {
    const auto& v = e.violations();
    return {422, v.empty() ? "INVALID_DEFINITION" : v.front().code, e.what(), v};
  } catch (const ontology::TypeMismatch& e) {
    return {422, "TYPE_MISMATCH", e.what(), {}};
  } catch (const RegistryError& e) {
    int status = 500;
    switch (e.code()) {
      case RegistryError::Code::kAlreadyExists: status = 409; break;
      case RegistryError::Code::kConflictInUse: status = 409; break;
      case RegistryError::Code::kNotFound: status = 404; break;
      case RegistryError::Code::kUnknownType: status = 422; break;
    }
    return {status, std::string(registry::to_string(e.code())), e.what(), {}};
  } catch (const SyntaxError& e) {
    return {400, "SYNTAX_ERROR", e.what(), {}};
  } catch (const UndefinedPrefixError& e) {
    return {400, "UNDEFINED_PREFIX", e.what(), {}};
  } catch (const query::QueryValidationError& e) {
    return {400, "INVALID_QUERY", e.what(), {}};
  } catch (const registry::StoreIoError& e) {
    return {500, "STORE_IO", e.what(), {}};
  } catch (const std::exception& e) {
    return {500, "INTERNAL", e.what(), {}};
  } catch (...) {
    return {500, "INTERNAL", "unknown error", {}};
  }
}

std::optional<MediaFormat> negotiate(const std::string& accept) {
  if (trim(accept).empty()) return MediaFormat::kJson;
  struct Range {
    std::string type;
    double q;
  };
  std::vector<Range> ranges;
  std::stringstream ss(accept);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Range r{media_type(item), 1.0};
    std::size_t qpos = item.find(";q=");
    if (qpos == std::string::npos) qpos = item.find("; q=");
    if (qpos != std::string::npos) {
      try {
        r.q = std::stod(item.substr(item.find('=', qpos) + 1));
      } catch (const std::exception&) {
        r.q = 0;
      }
    }
    if (!r.type.empty() && r.q > 0) ranges.push_back(r);
  }
  std::stable_sort(ranges.begin(), ranges.end(),
                   [](const Range& a, const Range& b) { return a.q > b.q; });
  for (const auto& r : ranges) {
    if (r.type == "application/json" || r.type == "application/*" || r.type == "*/*") {
      return MediaFormat::kJson;
    }
    if (r.type == "text/turtle" || r.type == "text/*") return MediaFormat::kTurtle;
  }
  return std::nullopt;
}

json entry_to_json(const registry::RegistryEntry& e) {
  json j = e.kind == EntryKind::kType ? ontology::to_json(e.type())
                                      : ontology::to_json(e.instance());
  j["iri"] = e.iri.str();
  j["graphIri"] = e.graph_iri.str();
  j["registeredAt"] = e.registered_at;
  j["tripleCount"] = e.graph.size();
  return j;
}

ApiServer::ApiServer(registry::Registry& registry, ServerOptions options)
    : registry_(registry),
      options_(std::move(options)),
      http_(std::make_unique<httplib::Server>()) {
  install_routes();
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind() {
  int port = options_.port == 0 ? http_->bind_to_any_port(options_.host)
                                : (http_->bind_to_port(options_.host, options_.port)
                                       ? options_.port
                                       : -1);
  if (port < 0) {
    throw std::runtime_error("cannot listen on " + options_.host + ":" +
                             std::to_string(options_.port));
  }
  return port;
}

void ApiServer::listen() { http_->listen_after_bind(); }
void ApiServer::stop() {
  if (http_) http_->stop();
}
bool ApiServer::is_running() const { return http_->is_running(); }
void ApiServer::wait_until_ready() const { http_->wait_until_ready(); }

void ApiServer::install_routes() {
  auto& http = *http_;
  auto& reg = registry_;
  const auto ns = reg.namespaces();

  if (options_.static_dir) {
    if (!http.set_mount_point("/", options_.static_dir->string())) {
      throw std::runtime_error("static directory not found: " +
                               options_.static_dir->string());
    }
  }

  // Fill in a JSON body for errors raised by httplib itself (unknown route,
  // bad request line...).
  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    std::string code = res.status == 404 ? "NOT_FOUND" : "HTTP_" + std::to_string(res.status);
    send_error(res, {res.status, code, httplib::status_message(res.status), {}});
    return httplib::Server::HandlerResponse::Handled;
  });

  auto list_handler = [&reg](EntryKind kind) {
    return guarded([&reg, kind](const httplib::Request& req, httplib::Response& res) {
      auto format = negotiate(req.get_header_value("Accept"));
      if (!format) {
        send_error(res, {415, "UNSUPPORTED_MEDIA_TYPE",
                         "cannot produce any of: " + req.get_header_value("Accept"), {}});
        return;
      }
      auto snap = reg.snapshot();
      if (*format == MediaFormat::kTurtle) {
        rdf::Graph all;
        for (const auto* e : snap->list(kind)) all.merge(e->graph);
        res.set_content(rdf::serialize_turtle(all), kTurtleType);
        return;
      }
      json arr = json::array();
      for (const auto* e : snap->list(kind)) arr.push_back(entry_to_json(*e));
      send_json(res, 200, arr);
    });
  };

  auto get_handler = [&reg](EntryKind kind) {
    return guarded([&reg, kind](const httplib::Request& req, httplib::Response& res) {
      auto format = negotiate(req.get_header_value("Accept"));
      registry::RegistryEntry e = reg.get(kind, req.path_params.at("id"));
      if (!format) {
        send_error(res, {415, "UNSUPPORTED_MEDIA_TYPE",
                         "cannot produce any of: " + req.get_header_value("Accept"), {}});
        return;
      }
      if (*format == MediaFormat::kTurtle) {
        res.set_content(rdf::serialize_turtle(e.graph), kTurtleType);
      } else {
        send_json(res, 200, entry_to_json(e));
      }
    });
  };

  auto delete_handler = [&reg](EntryKind kind) {
    return guarded([&reg, kind](const httplib::Request& req, httplib::Response& res) {
      reg.remove(kind, req.path_params.at("id"));
      res.status = 204;
    });
  };

  http.Post("/api/types", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
    if (!require_content_type(req, res, {"application/json"})) return;
    auto type = ontology::sensor_type_from_json(json::parse(req.body));
    send_json(res, 201, created_body(reg.register_type(type)));
  }));

  http.Put("/api/types/:id", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
    if (!require_content_type(req, res, {"application/json"})) return;
    json body = json::parse(req.body);
    const std::string& id = req.path_params.at("id");
    if (body.is_object() && !body.contains("id")) body["id"] = id;
    auto type = ontology::sensor_type_from_json(body);
    if (type.id != id) {
      send_error(res, {422, "ID_MISMATCH",
                       "body id '" + type.id + "' does not match path id '" + id + "'", {}});
      return;
    }
    send_json(res, 200, created_body(reg.update_type(type)));
  }));

  http.Get("/api/types", list_handler(EntryKind::kType));
  http.Get("/api/types/:id", get_handler(EntryKind::kType));
  http.Delete("/api/types/:id", delete_handler(EntryKind::kType));

  http.Post("/api/instances", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
    if (!require_content_type(req, res, {"application/json"})) return;
    auto inst = ontology::sensor_instance_from_json(json::parse(req.body));
    send_json(res, 201, created_body(reg.register_instance(inst)));
  }));

  http.Get("/api/instances", list_handler(EntryKind::kInstance));
  http.Get("/api/instances/:id", get_handler(EntryKind::kInstance));
  http.Delete("/api/instances/:id", delete_handler(EntryKind::kInstance));

  http.Get("/api/instances/:id/metadata",
           guarded([&reg, ns](const httplib::Request& req, httplib::Response& res) {
             auto snap = reg.snapshot();
             const std::string& id = req.path_params.at("id");
             const auto* inst = snap->find(EntryKind::kInstance, id);
             if (inst == nullptr) {
               throw RegistryError(RegistryError::Code::kNotFound,
                                   "sensor instance '" + id + "' not found");
             }
             const auto* type = snap->find(EntryKind::kType, inst->instance().type_id);
             auto config = metadata::generate_metadata(inst->instance(), type->type(), ns);
             res.set_content(metadata::render(config), kTextType);
           }));

  http.Post("/api/preview/type",
            guarded([ns](const httplib::Request& req, httplib::Response& res) {
              if (!require_content_type(req, res, {"application/json"})) return;
              auto type = ontology::sensor_type_from_json(json::parse(req.body));
              res.set_content(rdf::serialize_turtle(ontology::type_to_graph(type, ns)),
                              kTurtleType);
            }));

  http.Post("/api/preview/instance",
            guarded([&reg, ns](const httplib::Request& req, httplib::Response& res) {
              if (!require_content_type(req, res, {"application/json"})) return;
              auto inst = ontology::sensor_instance_from_json(json::parse(req.body));
              auto snap = reg.snapshot();
              const auto* type = snap->find(EntryKind::kType, inst.type_id);
              if (type == nullptr) {
                throw RegistryError(RegistryError::Code::kUnknownType,
                                    "unknown sensor type '" + inst.type_id + "'");
              }
              res.set_content(
                  rdf::serialize_turtle(ontology::instance_to_graph(inst, type->type(), ns)),
                  kTurtleType);
            }));

  http.Post("/api/query", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
    if (!require_content_type(req, res, {"text/plain", "application/sparql-query"})) return;
    query::Query q = query::parse_query(req.body);
    auto snap = reg.snapshot();
    send_json(res, 200, query::to_json(query::evaluate(q, snap->dataset)));
  }));

  http.Get("/health", guarded([&reg](const httplib::Request&, httplib::Response& res) {
    auto snap = reg.snapshot();
    send_json(res, 200,
              json{{"status", "ok"},
                   {"types", snap->count(EntryKind::kType)},
                   {"instances", snap->count(EntryKind::kInstance)}});
  }));
}

}  // namespace ssnforge::api
