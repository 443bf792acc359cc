#include "ssnforge/cli/cli.h"

#include <signal.h>

#include <atomic>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ssnforge/api/server.h"
#include "ssnforge/metadata/metadata.h"
#include "ssnforge/ontology/json_codec.h"
#include "ssnforge/query/results_json.h"
#include "ssnforge/rdf/ntriples.h"
#include "ssnforge/rdf/turtle.h"

namespace ssnforge::cli {
namespace {

using nlohmann::json;
using registry::EntryKind;
using registry::RegistryError;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw IoFailure("cannot write " + path);
}

int report(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const ontology::InvalidDefinition& e) {
    err << "error: invalid " << e.kind() << "\n";
    for (const auto& v : e.violations()) err << v.code << ": " << v.message << "\n";
    return kInvalid;
  } catch (const RegistryError& e) {
    err << "error: " << registry::to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case RegistryError::Code::kAlreadyExists:
      case RegistryError::Code::kConflictInUse: return kConflict;
      case RegistryError::Code::kNotFound: return kNotFound;
      case RegistryError::Code::kUnknownType: return kInvalid;
    }
    return kInvalid;
  } catch (const json::parse_error& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInvalid;
  } catch (const ontology::SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ontology::TypeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const SyntaxError& e) {
    err << "error: syntax error at " << e.what() << "\n";
    return kInvalid;
  } catch (const UndefinedPrefixError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const query::QueryValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidTerm& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const registry::CorruptStore& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

registry::Registry::Options registry_options(const CliConfig& cfg) {
  registry::Registry::Options opts;
  opts.ns = ontology::Namespaces::standard(cfg.base_iri);
  opts.data_dir = cfg.data_dir;
  return opts;
}

void print_entry(const registry::RegistryEntry& e, std::ostream& out) {
  out << e.id << " " << e.iri.str() << " " << e.graph.size() << " triples\n";
}

void show_entry(const registry::RegistryEntry& e, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kTurtle: out << rdf::serialize_turtle(e.graph); break;
    case OutputFormat::kNTriples: out << rdf::serialize_ntriples(e.graph); break;
    case OutputFormat::kJson: out << api::entry_to_json(e).dump(2) << "\n"; break;
  }
}

int serve(const CliConfig& cfg, api::ServerOptions server_opts, std::ostream& err) {
  registry::Registry reg(registry_options(cfg));
  api::ApiServer server(reg, std::move(server_opts));

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  int port = server.bind();
  err << "ssnforge: serving " << cfg.data_dir.string() << " on port " << port << "\n";
  err.flush();

  std::atomic<bool> done{false};
  std::thread waiter([&] {
    timespec tick{0, 200 * 1000 * 1000};
    while (!done) {
      if (sigtimedwait(&signals, nullptr, &tick) > 0) {
        server.stop();
        return;
      }
    }
  });
  server.listen();
  done = true;
  waiter.join();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Sensor schema registry: SSN sensor types and instances as linked data",
               "ssnforge"};
  app.require_subcommand(1);
  app.add_option("--data-dir", cfg.data_dir, "Registry data directory")
      ->envname("SSNFORGE_DATA_DIR");
  app.add_option("--base-iri", cfg.base_iri, "Base IRI for minted resources")
      ->envname("SSNFORGE_BASE_IRI");

  const std::map<std::string, OutputFormat> formats{{"turtle", OutputFormat::kTurtle},
                                                    {"ntriples", OutputFormat::kNTriples},
                                                    {"json", OutputFormat::kJson}};

  std::string def_file;
  std::string entry_id;

  auto* type_cmd = app.add_subcommand("type", "Manage sensor types")->require_subcommand(1);
  auto* type_add = type_cmd->add_subcommand("add", "Register a sensor type from JSON");
  type_add->add_option("-f,--file", def_file, "Definition JSON")->required();
  auto* type_update = type_cmd->add_subcommand("update", "Replace a sensor type from JSON");
  type_update->add_option("-f,--file", def_file, "Definition JSON")->required();
  auto* type_get = type_cmd->add_subcommand("get", "Show a registered sensor type");
  type_get->add_option("id", entry_id)->required();
  type_get->add_option("--format", cfg.output_format)
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* inst_cmd = app.add_subcommand("instance", "Manage sensor instances")->require_subcommand(1);
  auto* inst_add = inst_cmd->add_subcommand("add", "Register a sensor instance from JSON");
  inst_add->add_option("-f,--file", def_file, "Definition JSON")->required();
  auto* inst_get = inst_cmd->add_subcommand("get", "Show a registered sensor instance");
  inst_get->add_option("id", entry_id)->required();
  inst_get->add_option("--format", cfg.output_format)
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string export_format = "turtle";
  std::string output_file;
  auto* export_cmd = app.add_subcommand("export", "Export the registry as RDF");
  export_cmd->add_option("--format", export_format, "turtle, ntriples or nquads")
      ->check(CLI::IsMember({"turtle", "ntriples", "nquads"}));
  export_cmd->add_option("-o,--output", output_file, "Output file (default stdout)");

  std::string query_file;
  auto* query_cmd = app.add_subcommand("query", "Run a query file against the registry");
  query_cmd->add_option("-f,--file", query_file, "Query file")->required();

  auto* meta_cmd = app.add_subcommand("metadata", "Write the stream metadata file of an instance");
  meta_cmd->add_option("id", entry_id, "Instance id")->required();
  meta_cmd->add_option("-o,--output", output_file, "Output file (default stdout)");

  api::ServerOptions server_opts;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", server_opts.port, "Listen port")
      ->envname("SSNFORGE_PORT")
      ->capture_default_str();
  serve_cmd->add_option("--host", server_opts.host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--static-dir", static_dir, "Web editor assets served at /");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (type_add->parsed() || type_update->parsed() || inst_add->parsed()) {
      std::string text = read_text(def_file);
      json body = json::parse(text);
      registry::Registry reg(registry_options(cfg));
      if (type_add->parsed()) {
        print_entry(reg.register_type(ontology::sensor_type_from_json(body)), out);
      } else if (type_update->parsed()) {
        print_entry(reg.update_type(ontology::sensor_type_from_json(body)), out);
      } else {
        print_entry(reg.register_instance(ontology::sensor_instance_from_json(body)), out);
      }
      return kOk;
    }
    if (type_get->parsed() || inst_get->parsed()) {
      registry::Registry reg(registry_options(cfg));
      EntryKind kind = type_get->parsed() ? EntryKind::kType : EntryKind::kInstance;
      show_entry(reg.get(kind, entry_id), cfg.output_format, out);
      return kOk;
    }
    if (export_cmd->parsed()) {
      registry::Registry reg(registry_options(cfg));
      const rdf::Dataset& ds = reg.snapshot()->dataset;
      std::string text;
      if (export_format == "nquads") {
        text = rdf::serialize_nquads(ds);
      } else if (export_format == "ntriples") {
        text = rdf::serialize_ntriples(ds.union_graph());
      } else {
        text = rdf::serialize_turtle(ds.union_graph());
      }
      write_output(output_file, text, out);
      return kOk;
    }
    if (query_cmd->parsed()) {
      std::string text = read_text(query_file);
      query::Query q = query::parse_query(text);
      registry::Registry reg(registry_options(cfg));
      out << query::to_json(query::evaluate(q, reg.snapshot()->dataset)).dump(2) << "\n";
      return kOk;
    }
    if (meta_cmd->parsed()) {
      registry::Registry reg(registry_options(cfg));
      auto snap = reg.snapshot();
      const auto* inst = snap->find(EntryKind::kInstance, entry_id);
      if (inst == nullptr) {
        throw RegistryError(RegistryError::Code::kNotFound,
                            "sensor instance '" + entry_id + "' not found");
      }
      const auto* type = snap->find(EntryKind::kType, inst->instance().type_id);
      auto config = metadata::generate_metadata(inst->instance(), type->type(), reg.namespaces());
      write_output(output_file, metadata::render(config), out);
      return kOk;
    }
    if (serve_cmd->parsed()) {
      if (!static_dir.empty()) server_opts.static_dir = static_dir;
      return serve(cfg, std::move(server_opts), err);
    }
  } catch (...) {
    return report(std::current_exception(), err);
  }
  return kInvalid;
}

}  // namespace ssnforge::cli
