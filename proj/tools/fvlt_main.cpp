#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fvlt/errors.hpp"
#include "fvlt/fixtures.hpp"
#include "fvlt/occupation.hpp"
#include "fvlt/profile.hpp"
#include "fvlt/serialization.hpp"
#include "fvlt/verification.hpp"
#include "fvlt/version.hpp"

namespace {

constexpr int kExitFailure = 1;   // at least one identity check failed
constexpr int kExitBadInput = 2;  // malformed input or I/O failure

std::string read_file(const std::string& name) {
  std::ifstream in(name, std::ios::binary);
  if (!in) throw fvlt::InvalidDocument("cannot open '" + name + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& name, const std::string& content) {
  if (name == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(name, std::ios::binary);
  if (!out) throw fvlt::InvalidDocument("cannot open '" + name + "' for writing");
  out << content;
  if (!out) throw fvlt::InvalidDocument("write to '" + name + "' failed");
}

std::map<std::string, double> parse_params(const std::vector<std::string>& entries) {
  std::map<std::string, double> params;
  for (const std::string& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fvlt::InvalidParameter("--param: expected key=value, got '" + entry + "'");
    }
    const std::string key = entry.substr(0, eq);
    try {
      std::size_t used = 0;
      const double value = std::stod(entry.substr(eq + 1), &used);
      if (used != entry.size() - eq - 1) throw std::invalid_argument("trailing");
      params[key] = value;
    } catch (const std::exception&) {
      throw fvlt::InvalidParameter("--param " + key + ": not a number");
    }
  }
  return params;
}

fvlt::FvPath load_from_file(const std::string& name) {
  return fvlt::load_path(fvlt::parse_document(read_file(name)));
}

}  // namespace

namespace {

int run_main(int argc, char** argv) {
  CLI::App app{"Local times, crossing counts and occupation measures for piecewise-polynomial "
               "cadlag paths of finite variation"};
  app.set_version_flag("--version", fvlt::kToolVersion);
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a path document");
  std::string fixture_name;
  bool use_random = false;
  std::uint64_t seed = 0;
  std::vector<std::string> param_entries;
  std::string out_file = "-";
  auto* fixture_opt = generate->add_option("--fixture", fixture_name, "Fixture name");
  auto* random_opt = generate->add_flag("--random", use_random, "Seeded random path");
  generate->add_option("--seed", seed, "Random path seed")->needs(random_opt);
  generate->add_option("--param,--params", param_entries, "key=value parameter (repeatable)");
  generate->add_option("-o,--output", out_file, "Output file ('-' for stdout)");
  fixture_opt->excludes(random_opt);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full identity suite on a path document");
  std::string verify_file;
  double tol_scale = 1.0;
  int levels = 50;
  std::string report_file;
  verify->add_option("file", verify_file, "Path document")->required();
  verify->add_option("--tol", tol_scale, "Tolerance scale factor")->check(CLI::PositiveNumber);
  verify->add_option("--levels", levels, "Sampled simple levels for the indicator identities")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--report", report_file, "Write the JSON report here");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "Emit the local-time profile as CSV");
  std::string profile_file, csv_file;
  double profile_t = 0.0;
  profile_cmd->add_option("file", profile_file, "Path document")->required();
  profile_cmd->add_option("-t", profile_t, "Horizon")->required();
  profile_cmd->add_option("--csv", csv_file, "CSV output file ('-' for stdout)")->required();

  // occupation
  auto* occupation_cmd = app.add_subcommand("occupation", "Print occupation masses of a window");
  std::string occupation_file;
  double occupation_t = 0.0, from = 0.0, to = 0.0;
  occupation_cmd->add_option("file", occupation_file, "Path document")->required();
  occupation_cmd->add_option("-t", occupation_t, "Horizon")->required();
  occupation_cmd->add_option("--from", from, "Window lower end")->required();
  occupation_cmd->add_option("--to", to, "Window upper end")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (generate->parsed()) {
      if (!use_random && fixture_name.empty()) {
        std::cerr << "generate: need --fixture NAME or --random\n";
        return kExitBadInput;
      }
      const auto params = parse_params(param_entries);
      std::map<std::string, std::string> metadata;
      fvlt::FvPath path = [&] {
        if (use_random) {
          fvlt::RandomPathParams rp;
          rp.seed = seed;
          if (auto it = params.find("max_breakpoints"); it != params.end())
            rp.max_breakpoints = static_cast<int>(it->second);
          if (auto it = params.find("max_degree"); it != params.end())
            rp.max_degree = static_cast<int>(it->second);
          if (auto it = params.find("jump_probability"); it != params.end())
            rp.jump_probability = it->second;
          if (auto it = params.find("value_scale"); it != params.end())
            rp.value_scale = it->second;
          metadata["source"] = "random seed=" + std::to_string(seed);
          return fvlt::random_path(rp);
        }
        metadata["source"] = "fixture " + fixture_name;
        return fvlt::make_fixture(fvlt::FixtureSpec{fixture_name, params});
      }();
      write_file(out_file, fvlt::document_to_json_text(fvlt::make_document(path, metadata)));
      return 0;
    }

    if (verify->parsed()) {
      const fvlt::FvPath path = load_from_file(verify_file);
      fvlt::VerifyOptions options;
      options.tolerance_scale = tol_scale;
      options.tanaka_levels = levels;
      const fvlt::VerificationReport report = fvlt::run_verification(path, options);
      if (!report_file.empty()) {
        write_file(report_file, fvlt::report_to_json_text(report));
      }
      std::cout << fvlt::report_summary_text(report);
      return report.all_passed() ? 0 : kExitFailure;
    }

    if (profile_cmd->parsed()) {
      const fvlt::FvPath path = load_from_file(profile_file);
      write_file(csv_file, fvlt::profile_to_csv(fvlt::build_profile(path, profile_t)));
      return 0;
    }

    if (occupation_cmd->parsed()) {
      const fvlt::FvPath path = load_from_file(occupation_file);
      const fvlt::OccupationMass mass = fvlt::occupation_mass(path, occupation_t, from, to);
      char line[96];
      std::snprintf(line, sizeof(line), "theta=%.17g vartheta=%.17g\n", mass.theta,
                    mass.vartheta);
      std::cout << line;
      return 0;
    }
  } catch (const fvlt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
