#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "blowup/monomial.hpp"

namespace blowup {

/// (n, length of R / integral closure of I^{n+1}).
using HilbertSample = std::pair<std::int64_t, std::int64_t>;

/// Sampled normal Hilbert function with its exact binomial-basis fit
///   L(n) = e0 C(n+3,3) - e1 C(n+2,2) + e2 C(n+1,1) - e3   for n >= postulation.
struct NormalHilbertProfile {
  std::vector<HilbertSample> samples;
  std::int64_t postulation = 0;
  std::array<std::int64_t, 4> ebar{};

  /// Value of the fitted polynomial at n.
  std::int64_t polynomial(std::int64_t n) const;
};

std::vector<HilbertSample> sample_normal_hilbert(const MonomialIdeal& ideal, std::int64_t n_max);

/// Fits the cubic by integer finite differences. The fourth difference must
/// vanish on at least four trailing positions, otherwise InsufficientSamples.
NormalHilbertProfile fit_ebar(std::vector<HilbertSample> samples);

/// Samples up to n_max and extends the range until the fit is stable or
/// `cap` is reached.
NormalHilbertProfile normal_hilbert_profile(const MonomialIdeal& ideal, std::int64_t n_max = 12,
                                            std::int64_t cap = 40);

/// 3! times the volume of the region between the orthant corner and NP(I),
/// summed as |det| over a fan triangulation of every compact facet.
std::int64_t multiplicity_volume(const MonomialIdeal& ideal);

}  // namespace blowup
