#include "blowup/adjoint.hpp"

#include <algorithm>

#include "blowup/error.hpp"

namespace blowup {

MonomialIdeal adjoint(const NewtonPolyhedron& np, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvariantViolation, "adjoint power must be positive");
  std::vector<std::int64_t> box(np.box());
  for (auto& b : box) b = detail::checked_mul(b, n);
  const ExponentVector shift(std::vector<std::int64_t>(np.dim(), 1));
  return generators_in_box(box, [&](const ExponentVector& v) { return np.interior_member(v + shift, Scale{n, 1}); });
}

MonomialIdeal adjoint(const MonomialIdeal& ideal, std::int64_t n) {
  if (ideal.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "adjoint ideals are computed in three variables");
  return adjoint(newton_polyhedron(ideal), n);
}

std::optional<ExponentVector> symmetric_difference_witness(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return g;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return g;
  }
  return std::nullopt;
}

bool LipmanReport::pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.pass; });
}

LipmanReport verify_lipman_chain(const MonomialIdeal& ideal, std::int64_t n_max) {
  if (ideal.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "the adjoint chain is checked in three variables");
  if (n_max < 3) throw Error(ErrorKind::InvariantViolation, "the adjoint chain starts at n = 3");
  const auto np = newton_polyhedron(ideal);
  LipmanReport report;
  report.to = n_max;
  MonomialIdeal previous = adjoint(np, 2);
  for (std::int64_t n = 3; n <= n_max; ++n) {
    MonomialIdeal current = adjoint(np, n);
    MonomialIdeal product = multiply(ideal, previous);
    ChainStep step{n, current == product, std::nullopt};
    if (!step.pass) step.witness = symmetric_difference_witness(current, product);
    report.steps.push_back(std::move(step));
    previous = std::move(current);
  }
  return report;
}

}  // namespace blowup
