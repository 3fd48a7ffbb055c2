#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/monomial.hpp"
#include "blowup/newton.hpp"

namespace blowup {

/// Adjoint ideal of I^n for a monomial ideal, computed as the monomial
/// multiplier ideal: x^v belongs iff v + (1,...,1) lies in the interior of
/// n * NP(I). This is Howald's theorem (Trans. AMS 353, 2001); the identification
/// with Lipman's adjoint is external to this library.
MonomialIdeal adjoint(const MonomialIdeal& ideal, std::int64_t n);
MonomialIdeal adjoint(const NewtonPolyhedron& np, std::int64_t n);

struct ChainStep {
  std::int64_t n = 0;
  bool pass = false;
  /// Exponent in exactly one of the two compared ideals when pass is false.
  std::optional<ExponentVector> witness;
};

struct LipmanReport {
  std::int64_t from = 3;
  std::int64_t to = 3;
  std::vector<ChainStep> steps;

  bool pass() const;
};

/// Checks adjoint(I, n) == I * adjoint(I, n-1) for 3 <= n <= n_max.
LipmanReport verify_lipman_chain(const MonomialIdeal& ideal, std::int64_t n_max);

/// Some monomial in exactly one of a, b (nullopt when the ideals are equal).
std::optional<ExponentVector> symmetric_difference_witness(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace blowup
