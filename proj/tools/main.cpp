// Command-line front door: compute space norms of generated or file-loaded
// polynomials, run a single registered verification check, or run the full
// battery. Exit codes: 0 pass, 1 fail, 2 usage, 3 resolution, 4 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hllab/checks.hpp"

namespace {

using namespace hllab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResolution = 3;
constexpr int kExitInconclusive = 4;

std::optional<CoefficientSeries> load_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::vector<cplx> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream is(line);
    double re = 0.0, im = 0.0;
    if (!(is >> re >> im)) return std::nullopt;
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) return std::nullopt;
  return CoefficientSeries(std::move(coeffs));
}

// monomial:n | cauchy:gamma:N | random:deg:seed | lacunary:N | file:path
std::optional<CoefficientSeries> parse_function_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ':')) parts.push_back(cur);
    return parts;
  };
  try {
    if (head == "file") return load_coeff_file(rest);
    const std::vector<std::string> parts = split(rest);
    if (head == "monomial" && parts.size() == 1) return monomial(std::stoul(parts[0]));
    if (head == "cauchy" && parts.size() == 2)
      return cauchy_power(std::stod(parts[0]), std::stoul(parts[1]));
    if (head == "random" && parts.size() == 2)
      return random_polynomial(std::stoul(parts[0]), std::stoull(parts[1]));
    if (head == "lacunary" && parts.size() == 1)
      return lacunary_series(std::stoul(parts[0]));
  } catch (...) {
    return std::nullopt;
  }
  return std::nullopt;
}

void print_norm(double value) {
  char buf[64];
  if (value != 0.0 && (std::abs(value) < 1e-3 || std::abs(value) >= 1e7))
    std::snprintf(buf, sizeof(buf), "%.12e", value);
  else
    std::snprintf(buf, sizeof(buf), "%.12f", value);
  std::cout << buf << "\n";
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::fail:
      return kExitFail;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

void write_report(const VerificationReport& rep, const std::string& path,
                  const std::string& format) {
  const std::string body = format == "csv" ? rep.to_csv() : rep.to_json();
  if (path.empty())
    std::cout << body;
  else
    atomic_write(path, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy-Lorentz norm and coefficient-multiplier toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::string degrees_text;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--seed", cfg.seed, "base seed for every sampled object");
  app.add_option("--M", cfg.res.M, "circle sample count (0 = auto, power of two)");
  app.add_option("--K", cfg.res.K, "radial quadrature nodes");
  app.add_option("--grade", cfg.res.grade, "radial grid grading exponent");
  app.add_option("--degrees", degrees_text, "comma-separated probe degrees");

  auto* norm_cmd = app.add_subcommand("norm", "print one space norm");
  std::string fn_text, space_text;
  norm_cmd->add_option("--fn", fn_text, "function spec")->required();
  norm_cmd->add_option("--space", space_text, "space spec")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run one registered check");
  std::string check_id, control, out_path, format = "json";
  verify_cmd->add_option("check", check_id, "check id")->required();
  verify_cmd->add_option("--control", control, "run the named fail-by-construction control");
  verify_cmd->add_option("--out", out_path, "report file (default: stdout)");
  verify_cmd->add_option("--format", format, "json | csv");
  std::map<std::string, double> overrides;
  for (const std::string name :
       {"p0", "p", "q", "s", "t", "alpha", "beta", "gamma", "delta"})
    verify_cmd->add_option("--" + name, [&overrides, name](const std::vector<std::string>& v) {
      overrides[name] = v.at(0) == "inf" ? kInf : std::stod(v.at(0));
      return true;
    }, "parameter override");

  auto* suite_cmd = app.add_subcommand("suite", "run the full check battery");
  std::string out_dir = "reports";
  suite_cmd->add_option("--out-dir", out_dir, "directory for reports + summary.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      RunConfig from_file;
      apply_config_file(from_file, config_path);
      // flags override file values: re-apply any flag the user passed
      RunConfig merged = from_file;
      if (app.count("--seed")) merged.seed = cfg.seed;
      if (app.count("--M")) merged.res.M = cfg.res.M;
      if (app.count("--K")) merged.res.K = cfg.res.K;
      if (app.count("--grade")) merged.res.grade = cfg.res.grade;
      cfg = merged;
    }
    if (!degrees_text.empty()) cfg.degrees = parse_degree_list(degrees_text);
    if (verify_cmd->count("--format")) cfg.out_format = format;

    if (norm_cmd->parsed()) {
      const auto f = parse_function_spec(fn_text);
      if (!f) {
        std::cerr << "invalid function spec: " << fn_text << "\n";
        return kExitUsage;
      }
      auto space = parse_space_spec(space_text);
      if (!space) {
        std::cerr << "invalid space spec: " << space_text << "\n";
        return kExitUsage;
      }
      space->res = cfg.res;
      print_norm(space_norm(*f, *space));
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      const CheckDef* def = find_check(check_id);
      if (!def) {
        std::cerr << "unknown check: " << check_id << "\n";
        return kExitUsage;
      }
      const VerificationReport rep = run_check(*def, cfg, overrides, control);
      write_report(rep, out_path, cfg.out_format);
      return exit_code_for(rep.verdict);
    }

    if (suite_cmd->parsed()) {
      const SuiteOutcome outcome = run_suite(cfg, out_dir);
      const std::string summary = suite_summary_json(cfg, outcome);
      if (!out_dir.empty()) atomic_write(out_dir + "/summary.json", summary);
      std::cout << summary;
      if (outcome.all_as_expected) return kExitPass;
      return outcome.any_inconclusive ? kExitInconclusive : kExitFail;
    }
  } catch (const resolution_error& e) {
    std::cerr << e.what() << "\n";
    return kExitResolution;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
