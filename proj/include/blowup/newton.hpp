#pragma once

#include <cstdint>
#include <vector>

#include "blowup/monomial.hpp"

namespace blowup {

/// Positive rational scale factor num/den applied to a polyhedron.
struct Scale {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

/// Supporting inequality <normal, v> >= rhs. Normals are primitive and
/// nonnegative; rhs > 0.
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t rhs = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// conv(generators) + R^d_{>=0}, stored as its non-coordinate facets.
/// Nonnegativity of coordinates is implicit.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dim, std::vector<Facet> facets, std::vector<std::int64_t> box);

  std::size_t dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Pure-power exponent of the source ideal on each axis.
  const std::vector<std::int64_t>& box() const { return box_; }

  /// v lies in t * NP.
  bool member(const ExponentVector& v, Scale t = {}) const;
  /// v satisfies every stored facet strictly at scale t. Coordinate facets
  /// are not consulted; callers shift by (1,...,1) where they matter.
  bool interior_member(const ExponentVector& v, Scale t = {}) const;

  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;

 private:
  std::size_t dim_;
  std::vector<Facet> facets_;
  std::vector<std::int64_t> box_;
};

/// Irredundant facets of NP(I), found by enumerating hyperplanes through
/// every d-subset of generator points and coordinate recession rays.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Minimal generators of the integral closure of I^n.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, std::int64_t n);
MonomialIdeal integral_closure(const NewtonPolyhedron& np, std::int64_t n);

/// q is a reduction of I, i.e. both have the same Newton polyhedron.
/// Throws NotContained unless q is a subideal of I.
bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal);

}  // namespace blowup
