// blowup-verifier: normal Hilbert coefficients, adjoint and chain checks for
// monomial ideals in k[x,y,z], plus cohomology-table tools on P^2.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "blowup/bs_tables.hpp"
#include "blowup/corpus.hpp"
#include "blowup/error.hpp"
#include "blowup/io.hpp"
#include "blowup/report.hpp"

namespace {

using blowup::io::Json;
namespace bs = blowup::bs;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("blowup");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("BLOWUP_VERIFIER_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw blowup::Error(blowup::ErrorKind::ParseError, "not an integer list: \"" + text + "\"");
    }
  }
  return out;
}

bs::Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw blowup::Error(blowup::ErrorKind::ParseError, "window must look like lo..hi");
  try {
    bs::Window w{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    if (w.lo > w.hi) throw std::invalid_argument(text);
    return w;
  } catch (const std::exception&) {
    throw blowup::Error(blowup::ErrorKind::ParseError, "bad window \"" + text + "\"");
  }
}

void emit(const Json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << blowup::io::dump(j);
  } else {
    blowup::io::write_json_file(out_file, j);
  }
}

Json decomposition_json(const bs::H1Decomposition& d) {
  Json coeffs = Json::array();
  for (const auto& a : d.coeffs) coeffs.push_back(blowup::io::format_rational(a));
  return Json{{"r", d.r}, {"coeffs", coeffs}, {"in_cone", d.in_cone}};
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Normal Hilbert coefficients, adjoint chains and cohomology tables for monomial ideals"};
  app.require_subcommand(1);

  // analyze
  std::string ideal_file, reduction_file, csv_file, out_file;
  blowup::AnalyzeOptions opts;
  auto* analyze = app.add_subcommand("analyze", "Analyze one ideal JSON file");
  analyze->add_option("ideal", ideal_file, "Ideal JSON file")->required();
  analyze->add_option("--nmax", opts.n_max, "Largest power checked by the chain verifiers")->capture_default_str();
  analyze->add_option("--reduction", reduction_file, "Three-generated reduction q (ideal JSON)");
  analyze->add_option("--csv", csv_file, "Also write the Hilbert samples as CSV");
  analyze->add_option("--out", out_file, "Write the report here instead of stdout");

  // corpus
  std::uint64_t seed = 1;
  std::int64_t count = 20, max_exp = 4;
  std::string corpus_out = "corpus";
  auto* corpus = app.add_subcommand("corpus", "Generate a seeded instance corpus");
  corpus->add_option("--seed", seed)->capture_default_str();
  corpus->add_option("--count", count)->capture_default_str();
  corpus->add_option("--max-exp", max_exp)->capture_default_str()->check(CLI::Range(2, 64));
  corpus->add_option("--out", corpus_out, "Output directory")->capture_default_str();

  // verify
  std::string corpus_dir, verify_out;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run every verifier over a corpus directory");
  verify->add_option("corpus", corpus_dir, "Directory of instance JSON files")->required();
  verify->add_option("--nmax", opts.n_max)->capture_default_str();
  verify->add_option("--jobs", jobs)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out, "Directory for per-instance reports and summary.json");

  // bs
  auto* bs_cmd = app.add_subcommand("bs", "Cohomology tables on P^2");
  bs_cmd->require_subcommand(1);
  std::string zeros_text, window_text = "-3..6", h1_text, table_file;
  std::int64_t h1_max = 10, r_max = 5;
  auto* supernatural = bs_cmd->add_subcommand("supernatural", "Supernatural table for a zero sequence");
  supernatural->add_option("--zeros", zeros_text, "z1,z2 strictly decreasing")->required();
  supernatural->add_option("--window", window_text, "lo..hi")->capture_default_str();
  auto* decompose = bs_cmd->add_subcommand("decompose", "Decompose an h1 row on twists 1..r");
  decompose->add_option("--h1", h1_text, "Comma-separated h1(1),...,h1(r)")->required();
  auto* classify = bs_cmd->add_subcommand("classify", "Classify a table JSON file by ker psi_2");
  classify->add_option("table", table_file)->required();
  auto* scan = bs_cmd->add_subcommand("scan", "Exhaustive dichotomy scan over integer h1 vectors");
  scan->add_option("--h1max", h1_max)->capture_default_str();
  scan->add_option("--rmax", r_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      const auto ideal = blowup::io::ideal_from_json(blowup::io::read_json_file(ideal_file));
      std::optional<blowup::MonomialIdeal> q;
      if (!reduction_file.empty()) q = blowup::io::ideal_from_json(blowup::io::read_json_file(reduction_file));
      const auto result = blowup::analyze(ideal, q, opts);
      emit(result.report, out_file);
      if (!csv_file.empty()) std::ofstream(csv_file) << blowup::samples_csv(result.report);
      return result.violations.empty() ? kOk : kViolation;
    }
    if (*corpus) {
      const auto instances = blowup::generate_corpus(seed, count, max_exp);
      const auto paths = blowup::write_corpus(instances, corpus_out);
      Json listing = Json::array();
      for (const auto& p : paths) listing.push_back(p.string());
      std::cout << blowup::io::dump(Json{{"seed", seed}, {"count", count}, {"max_exp", max_exp}, {"files", listing}});
      return kOk;
    }
    if (*verify) {
      const auto suite = blowup::verify_suite(corpus_dir, opts, jobs);
      if (!verify_out.empty()) {
        std::filesystem::create_directories(verify_out);
        for (const auto& [name, rep] : suite.reports) {
          blowup::io::write_json_file(std::filesystem::path(verify_out) / (name + ".report.json"), rep);
        }
        blowup::io::write_json_file(std::filesystem::path(verify_out) / "summary.json", suite.summary);
      }
      std::cout << blowup::io::dump(suite.summary);
      return suite.exit_code;
    }
    if (*supernatural) {
      const bs::ZeroSequence z(parse_int_list(zeros_text));
      std::cout << blowup::io::dump(blowup::io::table_to_json(bs::supernatural_table(z, parse_window(window_text))));
      return kOk;
    }
    if (*decompose) {
      std::vector<bs::Rational> h1;
      for (auto v : parse_int_list(h1_text)) {
        if (v < 0) throw blowup::Error(blowup::ErrorKind::ParseError, "h1 values are nonnegative");
        h1.emplace_back(v);
      }
      const auto d = bs::solve_h1(h1);
      Json out = decomposition_json(d);
      if (d.in_cone) {
        const auto table = bs::table_from_h1(h1);
        out["ker_psi2"] = blowup::io::format_rational(bs::ker_psi2(table));
        out["ker_from_coeffs"] = blowup::io::format_rational(bs::ker_from_coefficients(d.coeffs));
      }
      std::cout << blowup::io::dump(out);
      return d.in_cone ? kOk : kViolation;
    }
    if (*classify) {
      const auto table = blowup::io::table_from_json(blowup::io::read_json_file(table_file));
      const auto label = bs::dichotomy_classify(table);
      std::cout << blowup::io::dump(Json{{"ker_psi2", blowup::io::format_rational(bs::ker_psi2(table))},
                                         {"class", std::string(bs::to_string(label))}});
      return kOk;
    }
    if (*scan) {
      const auto s = bs::dichotomy_scan(h1_max, r_max);
      std::cout << blowup::io::dump(Json{{"vectors", s.vectors},
                                         {"in_cone", s.in_cone},
                                         {"ker_zero", s.ker_zero},
                                         {"ker_two", s.ker_two},
                                         {"ker_at_least_three", s.ker_at_least_three},
                                         {"prefix_one_one", s.prefix_one_one},
                                         {"violations", s.violations}});
      return s.violations.empty() ? kOk : kViolation;
    }
  } catch (const blowup::Error& e) {
    std::cout << blowup::io::dump(blowup::error_object(std::string(blowup::to_string(e.kind())), e.what()));
    return e.kind() == blowup::ErrorKind::InvariantViolation ? kViolation : kInputError;
  } catch (const std::exception& e) {
    std::cout << blowup::io::dump(blowup::error_object("IOError", e.what()));
    return kInputError;
  }
  return kOk;
}
