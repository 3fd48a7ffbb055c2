#include "blowup/hilbert.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "blowup/error.hpp"
#include "blowup/newton.hpp"

namespace blowup {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
  return r;
}

void require_dim3(const MonomialIdeal& ideal) {
  if (ideal.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "normal Hilbert coefficients need three variables");
}

using Point2 = std::pair<std::int64_t, std::int64_t>;

__int128 cross(const Point2& o, const Point2& a, const Point2& b) {
  return __int128(a.first - o.first) * (b.second - o.second) - __int128(a.second - o.second) * (b.first - o.first);
}

// Indices of the convex hull vertices of `pts`, counter-clockwise.
std::vector<std::size_t> hull_order(const std::vector<Point2>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    std::size_t i = idx[t];
    while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

__int128 det3(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c) {
  using I = __int128;
  return I(a[0]) * (I(b[1]) * c[2] - I(b[2]) * c[1]) - I(a[1]) * (I(b[0]) * c[2] - I(b[2]) * c[0]) +
         I(a[2]) * (I(b[0]) * c[1] - I(b[1]) * c[0]);
}

}  // namespace

std::int64_t NormalHilbertProfile::polynomial(std::int64_t n) const {
  return ebar[0] * binom(n + 3, 3) - ebar[1] * binom(n + 2, 2) + ebar[2] * binom(n + 1, 1) - ebar[3];
}

std::vector<HilbertSample> sample_normal_hilbert(const MonomialIdeal& ideal, std::int64_t n_max) {
  require_dim3(ideal);
  const auto np = newton_polyhedron(ideal);
  std::vector<HilbertSample> out;
  for (std::int64_t n = 0; n <= n_max; ++n) out.emplace_back(n, colength(integral_closure(np, n + 1)));
  return out;
}

NormalHilbertProfile fit_ebar(std::vector<HilbertSample> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first != static_cast<std::int64_t>(i)) {
      throw Error(ErrorKind::InsufficientSamples, "samples must cover 0..n_max contiguously");
    }
  }
  const auto count = static_cast<std::int64_t>(samples.size());
  auto L = [&](std::int64_t n) { return samples[static_cast<std::size_t>(n)].second; };
  auto delta4 = [&](std::int64_t n) { return L(n + 4) - 4 * L(n + 3) + 6 * L(n + 2) - 4 * L(n + 1) + L(n); };

  // Fourth differences exist for n = 0..count-5.
  std::int64_t postulation = std::max<std::int64_t>(count - 4, 0);
  while (postulation > 0 && delta4(postulation - 1) == 0) --postulation;
  const std::int64_t stable = count - 4 - postulation;
  if (stable < 4) {
    throw Error(ErrorKind::InsufficientSamples,
                "fourth differences vanish on only " + std::to_string(std::max<std::int64_t>(stable, 0)) +
                    " trailing positions; extend n_max");
  }

  const std::int64_t n0 = postulation;
  NormalHilbertProfile p;
  auto& e = p.ebar;
  e[0] = L(n0 + 3) - 3 * L(n0 + 2) + 3 * L(n0 + 1) - L(n0);
  auto Q = [&](std::int64_t n) { return L(n) - e[0] * binom(n + 3, 3); };
  e[1] = -(Q(n0 + 2) - 2 * Q(n0 + 1) + Q(n0));
  auto R = [&](std::int64_t n) { return Q(n) + e[1] * binom(n + 2, 2); };
  e[2] = R(n0 + 1) - R(n0);
  e[3] = e[2] * (n0 + 1) - R(n0);
  p.postulation = n0;
  for (std::int64_t n = n0; n < count; ++n) {
    if (p.polynomial(n) != L(n)) {
      throw Error(ErrorKind::InvariantViolation, "fitted polynomial misses sample n=" + std::to_string(n));
    }
  }
  if (e[0] < 1) throw Error(ErrorKind::InvariantViolation, "multiplicity must be positive");
  p.samples = std::move(samples);
  return p;
}

NormalHilbertProfile normal_hilbert_profile(const MonomialIdeal& ideal, std::int64_t n_max, std::int64_t cap) {
  std::int64_t upto = std::max<std::int64_t>(n_max, 7);
  while (true) {
    try {
      return fit_ebar(sample_normal_hilbert(ideal, upto));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::InsufficientSamples || upto >= cap) throw;
      spdlog::debug("normal Hilbert fit unstable at n_max={}, extending", upto);
      upto = std::min(cap, upto + 4);
    }
  }
}

std::int64_t multiplicity_volume(const MonomialIdeal& ideal) {
  require_dim3(ideal);
  const auto np = newton_polyhedron(ideal);
  __int128 total = 0;
  for (const auto& f : np.facets()) {
    std::vector<ExponentVector> tight;
    for (const auto& g : ideal.generators()) {
      __int128 s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += __int128(f.normal[i]) * g[i];
      if (s == f.rhs) tight.push_back(g);
    }
    // Facet normals of an m-primary ideal are strictly positive, so dropping
    // the last coordinate projects the facet plane injectively.
    std::vector<Point2> flat;
    for (const auto& t : tight) flat.emplace_back(t[0], t[1]);
    const auto order = hull_order(flat);
    for (std::size_t k = 1; k + 1 < order.size(); ++k) {
      __int128 d = det3(tight[order[0]], tight[order[k]], tight[order[k + 1]]);
      total += d < 0 ? -d : d;
    }
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace blowup
