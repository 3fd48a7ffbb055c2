#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowup/hilbert.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

/// One index of the chain  closure(I^{n+2}) = q^n closure(I^2).
///   form_a: closure(I^{n+2}) == q^n * closure(I^2)
///   form_b: closure(I^{n+2}) == q * closure(I^{n+1})   (trivially true at n = 0)
struct ItohStep {
  std::int64_t n = 0;
  bool form_a = false;
  bool form_b = false;
  std::optional<ExponentVector> witness;
};

struct ItohReport {
  std::int64_t n_max = 0;
  std::vector<ItohStep> steps;
  /// For every prefix 0..N, "form a holds throughout" equals "form b holds
  /// throughout".
  bool forms_agree = true;

  bool pass() const;
  /// Largest N with the chain verified on 0..N, or -1.
  std::int64_t verified_upto() const;
};

/// Throws NotThreeGenerated or NotReduction when q is not a three-generated
/// reduction of I (d = 3).
void require_three_generated_reduction(const MonomialIdeal& ideal, const MonomialIdeal& q);

ItohReport verify_itoh_chain(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max = 6);

struct E2Report {
  std::array<std::int64_t, 4> ebar{};
  /// length(closure(I^2) / q closure(I)).
  std::int64_t quotient_length = 0;
  /// ebar2 - quotient_length.
  std::int64_t k = 0;
  bool k_zero = false;
  bool chain_pass = false;
  /// (k == 0) == chain_pass.
  bool agrees_with_chain = false;
};

E2Report e2_identity(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max = 6);
E2Report e2_identity(const MonomialIdeal& ideal, const MonomialIdeal& q, const NormalHilbertProfile& profile,
                     const ItohReport& chain);

enum class Branch { CohenMacaulay, KAtLeastThree };

std::string_view to_string(Branch b);

struct DichotomyReport {
  E2Report e2;
  ItohReport chain;
  /// ebar2 - length(closure(I^2) / I closure(I)).
  std::int64_t coarse_k = 0;
  std::optional<Branch> branch;
  /// Theorem-level contradictions found; empty when everything is consistent.
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
};

DichotomyReport dichotomy_report(const MonomialIdeal& ideal, const MonomialIdeal& q, std::int64_t n_max = 6);
DichotomyReport dichotomy_report(const MonomialIdeal& ideal, const MonomialIdeal& q,
                                 const NormalHilbertProfile& profile, std::int64_t n_max);

}  // namespace blowup
