#include "blowup/verifiers.hpp"

#include <algorithm>

#include "blowup/adjoint.hpp"
#include "blowup/error.hpp"
#include "blowup/newton.hpp"

namespace blowup {

bool ItohReport::pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const ItohStep& s) { return s.form_a && s.form_b; });
}

std::int64_t ItohReport::verified_upto() const {
  std::int64_t upto = -1;
  for (const auto& s : steps) {
    if (!(s.form_a && s.form_b)) break;
    upto = s.n;
  }
  return upto;
}

void require_three_generated_reduction(const MonomialIdeal& ideal, const MonomialIdeal& q) {
  if (ideal.dim() != 3 || q.dim() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "chain verifiers work in three variables");
  }
  if (q.size() != 3) {
    throw Error(ErrorKind::NotThreeGenerated,
                "reduction has " + std::to_string(q.size()) + " minimal generators, expected 3");
  }
  bool reduction = false;
  try {
    reduction = is_reduction(q, ideal);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotContained) throw;
  }
  if (!reduction) throw Error(ErrorKind::NotReduction, "q is not a reduction of I");
}

ItohReport verify_itoh_chain(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max) {
  require_three_generated_reduction(ideal, q);
  const auto np = newton_polyhedron(ideal);
  const MonomialIdeal closure2 = integral_closure(np, 2);

  ItohReport report;
  report.n_max = n_max;
  MonomialIdeal q_power = MonomialIdeal::unit(3);
  MonomialIdeal previous = closure2;  // closure(I^{n+1})
  bool all_a = true, all_b = true;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const MonomialIdeal target = n == 0 ? closure2 : integral_closure(np, n + 2);
    const MonomialIdeal via_power = multiply(q_power, closure2);
    ItohStep step{n, target == via_power, true, std::nullopt};
    if (n >= 1) {
      const MonomialIdeal via_step = multiply(q, previous);
      step.form_b = target == via_step;
      if (!step.form_b) step.witness = symmetric_difference_witness(target, via_step);
    }
    if (!step.form_a && !step.witness) step.witness = symmetric_difference_witness(target, via_power);
    all_a = all_a && step.form_a;
    all_b = all_b && step.form_b;
    if (all_a != all_b) report.forms_agree = false;
    report.steps.push_back(std::move(step));
    q_power = multiply(q_power, q);
    previous = target;
  }
  return report;
}

E2Report e2_identity(const MonomialIdeal& ideal, const MonomialIdeal& q, const NormalHilbertProfile& profile,
                     const ItohReport& chain) {
  require_three_generated_reduction(ideal, q);
  const auto np = newton_polyhedron(ideal);
  const MonomialIdeal closure1 = integral_closure(np, 1);
  const MonomialIdeal closure2 = integral_closure(np, 2);

  E2Report r;
  r.ebar = profile.ebar;
  r.quotient_length = quotient_length(closure2, multiply(q, closure1));
  r.k = r.ebar[2] - r.quotient_length;
  r.k_zero = r.k == 0;
  r.chain_pass = chain.pass();
  r.agrees_with_chain = r.k_zero == r.chain_pass;
  return r;
}

E2Report e2_identity(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max) {
  require_three_generated_reduction(ideal, q);
  return e2_identity(ideal, q, normal_hilbert_profile(ideal), verify_itoh_chain(ideal, q, n_max));
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::CohenMacaulay: return "CM";
    case Branch::KAtLeastThree: return "k_ge_3";
  }
  return "unknown";
}

DichotomyReport dichotomy_report(const MonomialIdeal& ideal, const MonomialIdeal& q,
                                 const NormalHilbertProfile& profile, std::int64_t n_max) {
  DichotomyReport r;
  r.chain = verify_itoh_chain(ideal, q, n_max);
  r.e2 = e2_identity(ideal, q, profile, r.chain);

  const auto np = newton_polyhedron(ideal);
  const MonomialIdeal closure1 = integral_closure(np, 1);
  const MonomialIdeal closure2 = integral_closure(np, 2);
  r.coarse_k = r.e2.ebar[2] - quotient_length(closure2, multiply(ideal, closure1));

  if (r.chain.pass()) {
    r.branch = Branch::CohenMacaulay;
  } else if (r.e2.k >= 3) {
    r.branch = Branch::KAtLeastThree;
  } else {
    r.violations.push_back("chain fails but k = " + std::to_string(r.e2.k) + " < 3");
  }
  if (r.e2.k < 0) r.violations.push_back("k = " + std::to_string(r.e2.k) + " is negative");
  if (!r.e2.agrees_with_chain) r.violations.push_back("k = 0 disagrees with the chain condition");
  if (!r.chain.forms_agree) r.violations.push_back("chain forms (a) and (b) disagree");
  if (r.coarse_k < r.e2.k) r.violations.push_back("coarse difference is below k");
  if (profile.ebar[3] != 0) r.violations.push_back("ebar3 = " + std::to_string(profile.ebar[3]) + " is nonzero");
  return r;
}

DichotomyReport dichotomy_report(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max) {
  require_three_generated_reduction(ideal, q);
  return dichotomy_report(ideal, q, normal_hilbert_profile(ideal), n_max);
}

}  // namespace blowup
