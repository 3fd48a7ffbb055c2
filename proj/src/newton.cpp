#include "blowup/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "blowup/error.hpp"

namespace blowup {

namespace {

using Int = __int128;

Int dot(const std::vector<std::int64_t>& a, std::span<const std::int64_t> v) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Int(a[i]) * v[i];
  return s;
}

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Vector orthogonal to d-1 directions in Z^d (generalized cross product).
std::vector<Int> orthogonal(const std::vector<std::vector<std::int64_t>>& dirs, std::size_t d) {
  std::vector<Int> normal(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<std::vector<Int>> minor;
    for (const auto& row : dirs) {
      std::vector<Int> r;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != col) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    Int det = determinant(std::move(minor));
    normal[col] = (col % 2 == 0) ? det : -det;
  }
  return normal;
}

Int gcd128(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool at_least(Int lhs, std::int64_t rhs, Scale t) { return lhs * t.den >= Int(rhs) * t.num; }
bool strictly_above(Int lhs, std::int64_t rhs, Scale t) { return lhs * t.den > Int(rhs) * t.num; }

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::size_t dim, std::vector<Facet> facets, std::vector<std::int64_t> box)
    : dim_(dim), facets_(std::move(facets)), box_(std::move(box)) {
  std::sort(facets_.begin(), facets_.end());
}

bool NewtonPolyhedron::member(const ExponentVector& v, Scale t) const {
  if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "Newton membership with wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return at_least(dot(f.normal, v.coords()), f.rhs, t); });
}

bool NewtonPolyhedron::interior_member(const ExponentVector& v, Scale t) const {
  if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "Newton membership with wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return strictly_above(dot(f.normal, v.coords()), f.rhs, t); });
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  auto box = ideal.pure_power_box();
  const std::size_t d = ideal.dim();
  if (std::find(box.begin(), box.end(), 0) != box.end()) {
    throw Error(ErrorKind::NotMPrimary, "the unit ideal has no Newton polyhedron boundary");
  }
  const auto& points = ideal.generators();
  const std::size_t npoints = points.size();
  // Items 0..npoints-1 are generator points, the rest are the axis rays.
  const std::size_t nitems = npoints + d;
  auto item = [&](std::size_t k) {
    if (k < npoints) {
      auto c = points[k].coords();
      return std::vector<std::int64_t>(c.begin(), c.end());
    }
    std::vector<std::int64_t> ray(d, 0);
    ray[k - npoints] = 1;
    return ray;
  };

  std::set<Facet> found;
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  if (nitems < d) return NewtonPolyhedron(d, {}, box);
  while (true) {
    if (pick[0] < npoints) {
      const auto base = item(pick[0]);
      std::vector<std::vector<std::int64_t>> dirs;
      for (std::size_t k = 1; k < d; ++k) {
        auto e = item(pick[k]);
        if (pick[k] < npoints) {
          for (std::size_t j = 0; j < d; ++j) e[j] -= base[j];
        }
        dirs.push_back(std::move(e));
      }
      auto normal = orthogonal(dirs, d);
      bool has_pos = std::any_of(normal.begin(), normal.end(), [](Int x) { return x > 0; });
      bool has_neg = std::any_of(normal.begin(), normal.end(), [](Int x) { return x < 0; });
      if (has_pos != has_neg) {
        if (has_neg) {
          for (auto& x : normal) x = -x;
        }
        Int g = 0;
        for (auto x : normal) g = gcd128(g, x);
        std::vector<std::int64_t> primitive(d);
        for (std::size_t j = 0; j < d; ++j) primitive[j] = static_cast<std::int64_t>(normal[j] / g);
        const Int rhs = dot(primitive, base);
        bool supports = rhs > 0 && std::all_of(points.begin(), points.end(), [&](const ExponentVector& p) {
                          return dot(primitive, p.coords()) >= rhs;
                        });
        if (supports) found.insert(Facet{std::move(primitive), static_cast<std::int64_t>(rhs)});
      }
    }
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == nitems - d + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return NewtonPolyhedron(d, std::vector<Facet>(found.begin(), found.end()), box);
}

MonomialIdeal integral_closure(const NewtonPolyhedron& np, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvariantViolation, "integral closure power must be positive");
  std::vector<std::int64_t> box(np.box());
  for (auto& b : box) b = detail::checked_mul(b, n);
  return generators_in_box(box, [&](const ExponentVector& v) { return np.member(v, Scale{n, 1}); });
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal, std::int64_t n) {
  return integral_closure(newton_polyhedron(ideal), n);
}

bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal) {
  if (!ideal.contains(q)) throw Error(ErrorKind::NotContained, "candidate reduction is not contained in the ideal");
  const auto np = newton_polyhedron(q);
  ideal.pure_power_box();  // NotMPrimary on the larger ideal as well
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return np.member(g); });
}

}  // namespace blowup
