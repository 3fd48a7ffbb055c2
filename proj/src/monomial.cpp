#include "blowup/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "blowup/error.hpp"

namespace blowup {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NotReduction: return "NotReduction";
    case ErrorKind::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NegativeKernel: return "NegativeKernel";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "exponent arithmetic overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "exponent arithmetic overflow");
  return out;
}

}  // namespace detail

ExponentVector::ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_) {
    if (c < 0) throw Error(ErrorKind::ParseError, "negative exponent in " + str());
  }
}

std::int64_t ExponentVector::degree() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = detail::checked_add(s, c);
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (dim() != other.dim()) throw Error(ErrorKind::DimensionMismatch, "adding exponent vectors of different length");
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::checked_add(coords_[i], other.coords_[i]);
  return ExponentVector(std::move(out));
}

std::string ExponentVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + g.str() + " does not have " + std::to_string(dim) + " coordinates");
    }
  }
  // A divisor has degree <= its multiple, so scanning by degree means only
  // already-kept vectors can divide the current one.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(MonomialIdeal::Minimal{}, dim, std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens)
    : MonomialIdeal(minimalize(dim, std::move(gens))) {}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {ExponentVector(dim)}); }

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
  std::vector<std::int64_t> ones(dim, 1);
  return pure_powers(ones);
}

MonomialIdeal MonomialIdeal::pure_powers(std::span<const std::int64_t> exponents) {
  const std::size_t d = exponents.size();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> v(d, 0);
    v[i] = exponents[i];
    gens.emplace_back(std::move(v));
  }
  return MonomialIdeal(d, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::contains(const ExponentVector& v) const {
  if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "membership test with wrong dimension");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "containment test with wrong dimension");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

std::int64_t MonomialIdeal::pure_power(std::size_t axis) const {
  std::int64_t best = -1;
  for (const auto& g : gens_) {
    bool pure = true;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i != axis && g[i] != 0) pure = false;
    }
    if (pure && (best < 0 || g[axis] < best)) best = g[axis];
  }
  return best;
}

bool MonomialIdeal::is_m_primary() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (pure_power(i) < 0) return false;
  }
  return true;
}

std::vector<std::int64_t> MonomialIdeal::pure_power_box() const {
  std::vector<std::int64_t> box(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    box[i] = pure_power(i);
    if (box[i] < 0) {
      throw Error(ErrorKind::NotMPrimary, "no pure power of variable " + std::to_string(i + 1) + " among the generators");
    }
  }
  return box;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "multiplying ideals of different dimension");
  std::vector<ExponentVector> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) sums.push_back(g + h);
  }
  return minimalize(a.dim(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvariantViolation, "negative ideal power");
  MonomialIdeal out = MonomialIdeal::unit(a.dim());
  for (std::int64_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

std::int64_t colength(const MonomialIdeal& j) {
  const auto box = j.pure_power_box();
  const std::size_t d = j.dim();
  if (d == 0 || std::find(box.begin(), box.end(), 0) != box.end()) return 0;
  const std::int64_t last = box[d - 1];
  // For each column (v_1..v_{d-1}) the standard monomials are those with
  // v_d below the least last-coordinate among generators dividing the column.
  std::int64_t total = 0;
  std::vector<std::int64_t> v(d - 1, 0);
  while (true) {
    std::int64_t height = last;
    for (const auto& g : j.generators()) {
      bool below = true;
      for (std::size_t i = 0; i + 1 < d; ++i) {
        if (g[i] > v[i]) {
          below = false;
          break;
        }
      }
      if (below) height = std::min(height, g[d - 1]);
    }
    total = detail::checked_add(total, height);
    std::size_t axis = 0;
    while (axis + 1 < d && v[axis] + 1 == box[axis]) {
      v[axis] = 0;
      ++axis;
    }
    if (axis + 1 >= d) break;
    ++v[axis];
  }
  return total;
}

std::int64_t quotient_length(const MonomialIdeal& j, const MonomialIdeal& k) {
  if (!j.contains(k)) throw Error(ErrorKind::NotContained, "second ideal is not contained in the first");
  return colength(k) - colength(j);
}

}  // namespace blowup
