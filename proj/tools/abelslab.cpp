// abelslab: runs verification suites and writes JSON/TSV reports.
//
//   abelslab verify <suite> [--ring R] [--n N] [--type T] [--max-cosets K]
//                   [--max-order K] [--out PATH] [--format json|tsv]
//                   [--seed S] [--check pi1]
//   abelslab export complex --n N --ring R [--family H|U] [--out PATH]
//   abelslab report merge FILE... [--out PATH] [--format json|tsv]
//
// Exit status: 0 no failed check, 1 a check failed, 2 usage error,
// 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelslab/suites.hpp"

namespace {

using namespace abelslab;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool is_usage_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_descriptor:
    case ErrorCode::infinite_ring:
    case ErrorCode::unsupported_kind:
    case ErrorCode::unsupported_label:
    case ErrorCode::unknown_root:
    case ErrorCode::char2_unsupported:
    case ErrorCode::unsupported_pair:
    case ErrorCode::invalid_argument:
    case ErrorCode::parse_error:
    case ErrorCode::budget_exceeded:
      return true;
    default:
      return false;
  }
}

void write_output(std::string const& text, std::string const& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
}

std::string render(Report const& r, std::string const& format) {
  if (format == "tsv") return to_tsv(r);
  return to_json(r).dump(2) + "\n";
}

void print_summary(Report const& r, std::ostream& os) {
  for (auto const& c : r.checks) {
    char line[64];
    std::snprintf(line, sizeof line, "%-12s %10.1f ms  ", to_string(c.status).c_str(), c.elapsed_ms);
    os << line << c.id;
    if (c.status == Status::fail) os << "  [" << c.counterexample << "]";
    os << "\n";
    if (c.details.is_object() && c.details.contains("simply_connected")) {
      os << "    simply connected: " << c.details["simply_connected"].get<std::string>() << "\n";
    }
  }
  os << "pass " << r.count(Status::pass) << ", fail " << r.count(Status::fail) << ", inconclusive "
     << r.count(Status::inconclusive) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Chevalley models, Abels groups and coset complexes"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string ring, type, out, format = "json", family = "H";
  std::size_t n = 0, max_cosets = 0, max_order = 0;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suites));
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", ring, "ring descriptor, e.g. zmod:3 or polyq:2:0,0,1");
    sub->add_option("--n", n, "matrix size")->check(CLI::Range(2, 12));
    sub->add_option("--max-cosets", max_cosets, "Todd-Coxeter budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-order", max_order, "group enumeration budget")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "tsv"}));
  };
  add_common(verify);
  verify->add_option("--type", type, "root system or GL label");
  verify->add_option("--seed", cfg.seed, "seed for randomized identity checks");
  verify->add_option("--check", cfg.check, "extra check")->check(CLI::IsMember({"pi1"}));

  auto* exp = app.add_subcommand("export", "export a coset complex");
  std::string what;
  exp->add_option("what", what, "object to export")->required()->check(CLI::IsMember({"complex"}));
  exp->add_option("--ring", ring, "ring descriptor")->required();
  exp->add_option("--n", n, "matrix size")->required()->check(CLI::Range(4, 8));
  exp->add_option("--family", family, "H (horospherical, in A_n) or U (contracting, in U_n)")->check(CLI::IsMember({"H", "U"}));
  exp->add_option("--max-order", max_order, "group enumeration budget")->check(CLI::PositiveNumber);
  exp->add_option("--out", out, "output path (default stdout)");

  auto* rep = app.add_subcommand("report", "combine reports");
  std::string action;
  std::vector<std::string> inputs;
  rep->add_option("action", action, "report action")->required()->check(CLI::IsMember({"merge"}));
  rep->add_option("inputs", inputs, "JSON reports")->required()->check(CLI::ExistingFile);
  rep->add_option("--out", out, "output path (default stdout)");
  rep->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto budget = env_budget();
    std::size_t const default_cosets = budget.value_or(kDefaultMaxCosets);
    std::size_t const default_order = budget.value_or(kDefaultMaxOrder);

    if (verify->parsed()) {
      if (!ring.empty()) cfg.ring = ring;
      if (n) cfg.n = n;
      if (!type.empty()) cfg.type = type;
      cfg.max_cosets = max_cosets ? max_cosets : default_cosets;
      cfg.max_order = max_order ? max_order : default_order;
      Report r = run_suite(cfg);
      std::ostream& summary = out.empty() ? std::cerr : std::cout;
      print_summary(r, summary);
      write_output(render(r, format), out);
      return r.any_failed() ? kExitFailed : kExitOk;
    }
    if (exp->parsed()) {
      Ring R = make_ring(ring);
      auto ac = abels_complex(n, R, family == "U", max_order ? max_order : default_order);
      write_output(ac.cc.complex.export_text(), out);
      return kExitOk;
    }
    if (rep->parsed()) {
      std::vector<Report> parts;
      for (auto const& path : inputs) {
        std::ifstream in(path);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(in);
        } catch (nlohmann::json::exception const& e) {
          throw Error(ErrorCode::parse_error, path + ": " + e.what());
        }
        parts.push_back(report_from_json(j));
      }
      Report merged = merge_reports(parts);
      write_output(render(merged, format), out);
      return merged.any_failed() ? kExitFailed : kExitOk;
    }
  } catch (Error const& e) {
    std::cerr << "abelslab: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitInternal;
  } catch (std::exception const& e) {
    std::cerr << "abelslab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
