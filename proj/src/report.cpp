#include "blowup/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "blowup/adjoint.hpp"
#include "blowup/corpus.hpp"
#include "blowup/error.hpp"
#include "blowup/hilbert.hpp"
#include "blowup/newton.hpp"
#include "blowup/verifiers.hpp"

namespace blowup {

namespace {

io::Json exponent_json(const ExponentVector& v) {
  io::Json out = io::Json::array();
  for (auto c : v.coords()) out.push_back(c);
  return out;
}

}  // namespace

io::Json error_object(const std::string& kind, const std::string& message) {
  return io::Json{{"error", {{"kind", kind}, {"message", message}}}};
}

Analysis analyze(const MonomialIdeal& ideal, const std::optional<MonomialIdeal>& q, const AnalyzeOptions& opts) {
  if (ideal.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "analysis works in three variables");
  const auto np = newton_polyhedron(ideal);
  Analysis out;
  auto& r = out.report;
  r["ideal"] = io::ideal_to_json(ideal);

  const auto profile = normal_hilbert_profile(ideal, opts.hilbert_n_max, opts.hilbert_cap);
  r["ebar"] = profile.ebar;
  r["postulation"] = profile.postulation;
  io::Json samples = io::Json::array();
  for (const auto& [n, L] : profile.samples) samples.push_back({n, L});
  r["samples"] = std::move(samples);

  const auto volume = multiplicity_volume(ideal);
  r["multiplicity_volume"] = volume;
  if (volume != profile.ebar[0]) out.violations.push_back("ebar0 differs from the Newton covolume");
  if (profile.ebar[3] != 0) out.violations.push_back("ebar3 is nonzero");

  io::Json counts = io::Json::array();
  for (std::int64_t n = 1; n <= opts.n_max; ++n) counts.push_back(integral_closure(np, n).size());
  r["closure_generators"] = std::move(counts);

  const std::int64_t lipman_to = std::max<std::int64_t>(opts.n_max, 3);
  const auto lipman = verify_lipman_chain(ideal, lipman_to);
  io::Json failures = io::Json::array();
  for (const auto& s : lipman.steps) {
    if (!s.pass) {
      failures.push_back({{"n", s.n}, {"witness", s.witness ? exponent_json(*s.witness) : io::Json()}});
      out.violations.push_back("adjoint chain fails at n = " + std::to_string(s.n));
    }
  }
  r["lipman"] = {{"range", {3, lipman_to}}, {"pass", lipman.pass()}, {"failures", std::move(failures)}};

  std::optional<MonomialIdeal> reduction = q;
  std::string source = "given";
  if (!reduction) {
    auto candidate = MonomialIdeal::pure_powers(ideal.pure_power_box());
    if (is_reduction(candidate, ideal)) reduction = std::move(candidate);
    source = "pure_powers";
  }
  if (reduction) {
    const auto d = dichotomy_report(ideal, *reduction, profile, opts.n_max);
    r["reduction"] = io::ideal_to_json(*reduction);
    r["reduction_source"] = source;
    r["k"] = d.e2.k;
    r["quotient_length"] = d.e2.quotient_length;
    r["coarse_k"] = d.coarse_k;
    r["chain"] = {{"pass", d.chain.pass()}, {"upto", d.chain.verified_upto()}, {"forms_agree", d.chain.forms_agree}};
    r["branch"] = d.branch ? io::Json(std::string(to_string(*d.branch))) : io::Json();
    for (const auto& v : d.violations) out.violations.push_back(v);
  } else {
    for (const char* key : {"reduction", "reduction_source", "k", "quotient_length", "coarse_k", "chain", "branch"}) {
      r[key] = nullptr;
    }
  }
  r["violations"] = out.violations;
  return out;
}

std::string samples_csv(const io::Json& report) {
  std::ostringstream os;
  os << "n,L\n";
  for (const auto& s : report.at("samples")) os << s[0].get<std::int64_t>() << ',' << s[1].get<std::int64_t>() << '\n';
  return os.str();
}

SuiteResult verify_suite(const std::filesystem::path& corpus_dir, const AnalyzeOptions& opts, unsigned jobs) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(corpus_dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
  } else {
    throw Error(ErrorKind::ParseError, corpus_dir.string() + " is not a directory");
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    std::optional<Analysis> analysis;
    std::string error_kind;
    std::string error;
  };
  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const auto inst = instance_from_json(io::read_json_file(files[i]));
        std::optional<MonomialIdeal> q;
        if (!inst.reduction.is_zero()) q = inst.reduction;
        outcomes[i].analysis = analyze(inst.ideal, q, opts);
      } catch (const Error& e) {
        outcomes[i].error_kind = std::string(to_string(e.kind()));
        outcomes[i].error = e.what();
      } catch (const std::exception& e) {
        outcomes[i].error_kind = "ParseError";
        outcomes[i].error = e.what();
      }
      spdlog::debug("verified {}", files[i].filename().string());
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(jobs, 1u); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult result;
  io::Json failures = io::Json::array();
  io::Json violations = io::Json::array();
  std::int64_t cm = 0, k3 = 0, none = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string name = files[i].stem().string();
    auto& o = outcomes[i];
    if (!o.analysis) {
      failures.push_back({{"instance", name}, {"kind", o.error_kind}, {"message", o.error}});
      continue;
    }
    const auto& rep = o.analysis->report;
    if (rep["branch"] == "CM") {
      ++cm;
    } else if (rep["branch"] == "k_ge_3") {
      ++k3;
    } else {
      ++none;
    }
    for (const auto& v : o.analysis->violations) violations.push_back({{"instance", name}, {"violation", v}, {"ideal", rep["ideal"]}});
    result.reports.emplace_back(name, rep);
  }
  result.summary = {{"instances", files.size()},
                    {"verified", result.reports.size()},
                    {"branches", {{"CM", cm}, {"k_ge_3", k3}, {"none", none}}},
                    {"input_errors", failures},
                    {"violations", violations}};
  if (!violations.empty()) {
    result.exit_code = 1;
  } else if (!failures.empty()) {
    result.exit_code = 2;
  }
  return result;
}

}  // namespace blowup
