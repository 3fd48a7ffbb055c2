#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace blowup {

/// Exponent of a monomial x_1^{v_1} ... x_d^{v_d}; all coordinates are >= 0.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> coords);
  ExponentVector(std::initializer_list<std::int64_t> coords)
      : ExponentVector(std::vector<std::int64_t>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t degree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;

  std::string str() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Monomial ideal stored as its sorted antichain of minimal generators.
/// An empty generator list is the zero ideal; the single origin generator is
/// the unit ideal.
class MonomialIdeal;
MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> gens);

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}

  /// Minimalizes `gens`; throws DimensionMismatch if any vector has the wrong
  /// length.
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens);

  static MonomialIdeal unit(std::size_t dim);
  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t dim);
  /// (x_1^{e_1}, ..., x_d^{e_d}).
  static MonomialIdeal pure_powers(std::span<const std::int64_t> exponents);

  std::size_t dim() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const ExponentVector& v) const;
  /// Ideal containment: every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;

  /// Smallest exponent e with x_i^e a generator, or -1 if none exists.
  std::int64_t pure_power(std::size_t axis) const;
  bool is_m_primary() const;
  /// Pure-power exponents per axis; throws NotMPrimary if any is missing.
  std::vector<std::int64_t> pure_power_box() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Minimal {};
  MonomialIdeal(Minimal, std::size_t dim, std::vector<ExponentVector> gens) : dim_(dim), gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(std::size_t, std::vector<ExponentVector>);

  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// Antichain of componentwise-minimal elements, sorted lexicographically.
MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::int64_t n);

/// Number of standard monomials, the length of R/J.
std::int64_t colength(const MonomialIdeal& j);

/// Length of J/K for K contained in J.
std::int64_t quotient_length(const MonomialIdeal& j, const MonomialIdeal& k);

/// Minimal generators of an up-closed lattice set given by `member`, found by
/// scanning the box [0, box_i] and keeping points whose every lower
/// neighbour is outside the set. Every minimal element must lie in the box.
template <typename Member>
MonomialIdeal generators_in_box(std::span<const std::int64_t> box, Member&& member);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

template <typename Member>
MonomialIdeal generators_in_box(std::span<const std::int64_t> box, Member&& member) {
  const std::size_t d = box.size();
  std::vector<ExponentVector> found;
  std::vector<std::int64_t> v(d, 0);
  if (d == 0) return MonomialIdeal(0);
  while (true) {
    ExponentVector point(v);
    if (member(point)) {
      bool minimal = true;
      for (std::size_t i = 0; i < d && minimal; ++i) {
        if (v[i] == 0) continue;
        --v[i];
        if (member(ExponentVector(v))) minimal = false;
        ++v[i];
      }
      if (minimal) found.push_back(std::move(point));
    }
    std::size_t axis = 0;
    while (axis < d && v[axis] == box[axis]) {
      v[axis] = 0;
      ++axis;
    }
    if (axis == d) break;
    ++v[axis];
  }
  return MonomialIdeal(d, std::move(found));
}

}  // namespace blowup
