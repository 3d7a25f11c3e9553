#include "li/cli/app.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "li/cli/commands.hpp"
#include "li/cli/config.hpp"
#include "li/cli/output.hpp"
#include "li/error.hpp"

namespace li::cli {

namespace {

struct ParseOutcome {
  RunConfig config;
  bool help = false;
  std::string help_text;
};

ParseOutcome parse(const std::vector<std::string>& args) {
  CLI::App app{"Li coefficients lambda_n via Stieltjes constants", "li"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");

  ParseOutcome outcome;
  RunConfig& config = outcome.config;
  std::string profile = "desk";
  int n_max = 0;
  int digits = 0;
  int guard = 0;
  std::string cache;
  std::string zeros;
  std::string format = "csv";
  std::string convention = "classical";
  std::string out_dir = ".";

  app.add_option("--profile", profile, "desk (n_max 100, 160 digits) or paper (n_max 2000, 800 digits)")
      ->check(CLI::IsMember({"desk", "paper"}));
  auto* n_opt = app.add_option("--n-max", n_max, "highest index n");
  auto* digits_opt = app.add_option("--digits", digits, "target decimal digits");
  auto* guard_opt = app.add_option("--guard", guard, "guard digits (default ceil(0.35 n_max) + 20)");
  auto* cache_opt = app.add_option("--cache", cache, "gamma cache file (default $LI_CACHE_DIR/gamma-bl.cache)");
  app.add_flag("--no-cache", "neither read nor write the gamma cache");
  auto* zeros_opt = app.add_option("--zeros", zeros, "zeta zero ordinate table for the zero-sum check");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* gamma_cmd = app.add_subcommand("gamma", "compute or load the Stieltjes constants");
  gamma_cmd->add_option("--convention", convention, "classical or bl")
      ->check(CLI::IsMember({"classical", "bl", "bombieri_lagarias"}));
  app.add_subcommand("lambda", "print n, trend, oscillation, lambda, est_digits");
  app.add_subcommand("verify", "run all cross-checks");
  auto* plot_cmd = app.add_subcommand("plot", "write trend/oscillation series files");
  plot_cmd->add_option("--out-dir", out_dir, "output directory");
  plot_cmd->add_option("--from", config.plot_from, "first index in the plot range");
  plot_cmd->add_flag("--svg", config.svg, "also write SVG line charts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.help = true;
    outcome.help_text = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.help = true;
    outcome.help_text = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::validation, "cli", e.what());
  }

  const std::map<std::string, Command> commands{
      {"gamma", Command::gamma}, {"lambda", Command::lambda}, {"verify", Command::verify}, {"plot", Command::plot}};
  for (auto* sub : app.get_subcommands()) config.command = commands.at(sub->get_name());

  config.profile = profile == "paper" ? Profile::paper : Profile::desk;
  const auto defaults = profile_defaults(config.profile);
  config.n_max = n_opt->count() > 0 ? n_max : defaults.n_max;
  config.digits = digits_opt->count() > 0 ? digits : defaults.digits;
  if (guard_opt->count() > 0) config.guard = guard;
  config.use_cache = app.count("--no-cache") == 0;
  config.cache_path = cache_opt->count() > 0 ? std::filesystem::path(cache) : default_cache_path();
  if (zeros_opt->count() > 0) config.zeros_path = zeros;
  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  config.convention = *stieltjes::parse_convention(convention);
  config.out_dir = out_dir;
  return outcome;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto outcome = parse(args);
    if (outcome.help) {
      out << outcome.help_text;
      return 0;
    }
    const RunConfig& config = outcome.config;
    validate(config);
    switch (config.command) {
      case Command::gamma: return cmd_gamma(config, out, err);
      case Command::lambda: return cmd_lambda(config, out, err);
      case Command::verify: return cmd_verify(config, out, err);
      case Command::plot: return cmd_plot(config, out, err);
    }
    return 0;
  } catch (const Error& e) {
    err << diagnostic(e) << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "li-error: internal: cli: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace li::cli
