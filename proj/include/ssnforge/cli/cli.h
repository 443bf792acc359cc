#ifndef SSNFORGE_CLI_CLI_H_
#define SSNFORGE_CLI_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssnforge::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalid = 2,   // validation, syntax, malformed input, usage
  kConflict = 3,  // already exists, in use
  kNotFound = 4,
};

enum class OutputFormat { kTurtle, kNTriples, kJson };

struct CliConfig {
  std::filesystem::path data_dir = "./data";
  std::string base_iri = "http://example.org/oi/";
  OutputFormat output_format = OutputFormat::kJson;
};

// Runs `ssnforge` with argv-style arguments (args[0] is the program name).
// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssnforge::cli

#endif  // SSNFORGE_CLI_CLI_H_
