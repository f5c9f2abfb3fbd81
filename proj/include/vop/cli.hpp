#ifndef VOP_CLI_HPP
#define VOP_CLI_HPP

#include <optional>
#include <string>
#include <vector>

namespace vop {
namespace cli {

/// Parsed invocation.  Exactly one spec source (catalog name or spec file)
/// is allowed; everything is flag-driven, no environment variables.
struct RunConfig {
  std::string subcommand;
  std::string catalog_name;
  std::vector<std::string> param_overrides;  // key=value
  std::string spec_file;
  std::optional<int> max_n;
  std::string format = "json";
  std::string out_path;     // empty = stdout
  std::string checks = "all";
  int jobs = 1;
  int holdout = 3;
  std::string show_name;    // catalog show target
  bool list_mode = false;   // catalog list
};

/// Exit codes: 0 pass, 1 verification failure, 2 usage/spec error,
/// 3 internal arithmetic error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace cli
}  // namespace vop

#endif
