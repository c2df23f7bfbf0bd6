// kzrat: exact Laurent series, rational reconstruction and ODE verification
// for KZ-type Fuchsian systems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kzrat/commands.hpp"
#include "kzrat/config.hpp"
#include "kzrat/errors.hpp"
#include "kzrat/kz_model.hpp"

namespace {

struct Args {
  std::string config_path;
  std::string json_path;
  bool golden = false;
  bool golden_dual = false;
  std::optional<std::size_t> order;
  std::optional<std::size_t> center;
  std::optional<std::string> convention;
};

void add_common(CLI::App* sub, Args& args) {
  sub->add_option("--config", args.config_path, "JSON system description")->required();
  sub->add_option("--json", args.json_path, "write the full report to this path");
  sub->add_option("--order", args.order, "series / expansion order N");
  sub->add_option("--center", args.center, "1-based index of the expansion point");
  sub->add_option("--convention", args.convention, "derived-taylor | literal-paper");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kzrat - exact Frobenius series and rational solutions of KZ-type systems"};
  app.require_subcommand(1);
  Args args;
  CLI::App* series = app.add_subcommand("series", "compute Laurent coefficients b_rho..b_{rho+N}");
  add_common(series, args);
  series->add_flag("--golden", args.golden, "compare against the built-in S3 fixtures");
  series->add_flag("--golden-dual", args.golden_dual, "accept a fixture match up to d -> -d");
  CLI::App* verify = app.add_subcommand("verify", "series -> rational reconstruction -> exact ODE check");
  add_common(verify, args);
  CLI::App* expand = app.add_subcommand("expand", "local expansion coefficients a_{-1}, a_0..a_N");
  add_common(expand, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kzrat::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  kzrat::SystemConfig config;
  try {
    std::ifstream in(args.config_path);
    if (!in) throw kzrat::ConfigError("--config", "cannot read " + args.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    config = kzrat::parse_config(buf.str());
    if (args.order) config.order = *args.order;
    if (args.center) {
      if (*args.center < 1 || *args.center > config.points.size()) throw kzrat::ConfigError("--center", "out of range");
      config.center = *args.center;
    }
    if (args.convention) config.convention = kzrat::parse_convention(*args.convention);
  } catch (const kzrat::Error& e) {
    std::cerr << "kzrat: " << e.what() << "\n";
    return kzrat::kExitUsage;
  }

  const kzrat::CommandResult result =
      kzrat::run_command(command, config, kzrat::CommandOptions{args.golden, args.golden_dual});
  std::cout << result.text;
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out) {
      std::cerr << "kzrat: cannot write " << args.json_path << "\n";
      return kzrat::kExitUsage;
    }
    out << kzrat::serialize_report(result.report);
  }
  return result.exit_code;
}
