#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blowup::bs {

using Rational = boost::multiprecision::cpp_rational;

/// Zeros z_1 > ... > z_s (s = 1 or 2) of a supernatural Hilbert polynomial.
class ZeroSequence {
 public:
  /// Throws InvariantViolation unless 1 <= size <= 2 and strictly decreasing.
  explicit ZeroSequence(std::vector<std::int64_t> zeros);

  const std::vector<std::int64_t>& zeros() const { return zeros_; }
  std::size_t size() const { return zeros_.size(); }

  friend bool operator==(const ZeroSequence&, const ZeroSequence&) = default;
  friend auto operator<=>(const ZeroSequence&, const ZeroSequence&) = default;

 private:
  std::vector<std::int64_t> zeros_;
};

/// Closed integer interval of twists.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
  bool contains(std::int64_t m) const { return lo <= m && m <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Values h^j(m) for j in {0,1,2} and m in a finite window of twists on P^2.
class CohomologyTable {
 public:
  /// All-zero table; throws InvariantViolation when lo > hi.
  explicit CohomologyTable(Window window);
  /// Rows given in window order; throws NegativeCoefficient on negative entries.
  CohomologyTable(Window window, std::array<std::vector<Rational>, 3> rows);

  const Window& window() const { return window_; }
  const Rational& at(int j, std::int64_t m) const;
  void set(int j, std::int64_t m, Rational value);
  const std::vector<Rational>& row(int j) const { return rows_[static_cast<std::size_t>(j)]; }

  /// Vanishing pattern h0(m) = 0 for m <= -1, h1(0) = 0, h2(m) = 0 for m >= 0
  /// holds on the window.
  bool admissible() const;

  /// Alternating sum h0 - h1 + h2 at twist m.
  Rational euler_characteristic(std::int64_t m) const;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  std::size_t index(std::int64_t m) const;

  Window window_;
  std::array<std::vector<Rational>, 3> rows_;
};

CohomologyTable supernatural_table(const ZeroSequence& z, Window window);

/// Sum of a_z * gamma^z. Throws NegativeCoefficient for a_z < 0 and
/// InvariantViolation for repeated zero sequences.
CohomologyTable synthesize(const std::vector<std::pair<ZeroSequence, Rational>>& parts, Window window);

/// Coefficients a_1..a_r of the tables gamma^{(i+1, 0)} reproducing h^1 on
/// twists 1..r.
struct H1Decomposition {
  std::int64_t r = 0;
  std::vector<Rational> coeffs;
  bool in_cone = true;
};

/// h1[m-1] = h^1(m) for m = 1..r; trailing zeros are trimmed (all-zero input
/// gives r = 0). Back-substitution in
///   h^1(m) = sum_{i=m}^{r} m (i+1-m) a_i.
/// solve_h1 records in_cone; decompose_h1 throws NotInCone instead.
H1Decomposition solve_h1(const std::vector<Rational>& h1);
H1Decomposition decompose_h1(const std::vector<Rational>& h1);

/// h^1 row on 1..r produced by the given coefficients.
std::vector<Rational> h1_from_coefficients(const std::vector<Rational>& coeffs);

/// h^1 values on twists 1..r of an admissible table; the window must reach a
/// positive twist where h^1 vanishes (WindowTooSmall otherwise).
std::vector<Rational> positive_h1(const CohomologyTable& table);

Rational h1_at_1(const CohomologyTable& table);
/// dim ker psi_2 = 3 h^1(1) - h^1(2); throws NegativeKernel when negative.
Rational ker_psi2(const CohomologyTable& table);
/// sum (i+2) a_i.
Rational ker_from_coefficients(const std::vector<Rational>& coeffs);

enum class Dichotomy { Zero, AtLeastThree, TwoExcluded };

std::string_view to_string(Dichotomy d);

/// Zero when ker psi_2 = 0, AtLeastThree when >= 3. The value 2 forces
/// h^1(1) = h^1(2) = 1; such tables lie in the cone but no coherent sheaf
/// realizes them (the free-resolution argument is not recomputed here), so
/// they are labelled TwoExcluded. ker = 1 raises InvariantViolation.
Dichotomy dichotomy_classify(const CohomologyTable& table);

struct CheckResult {
  bool ok = true;
  std::optional<std::int64_t> witness;
};

/// h^1(m) = 0 implies h^1(m+1) = 0 for every m >= 1 in the window.
CheckResult persistence_check(const CohomologyTable& table);
/// h^1(1) = h^1(2) = 1 implies h^1(m) = 0 for every m >= 3 in the window.
CheckResult vanish_after_two(const CohomologyTable& table);

/// Table with the given h^1 row on twists 1..r, admissible zeros elsewhere,
/// over the window [-1, r+1].
CohomologyTable table_from_h1(const std::vector<Rational>& h1);

/// Exhaustive scan of integer h^1 vectors (r <= r_max, entries <= h1_max).
struct ScanSummary {
  std::int64_t vectors = 0;
  std::int64_t in_cone = 0;
  std::int64_t ker_zero = 0;
  std::int64_t ker_two = 0;
  std::int64_t ker_at_least_three = 0;
  std::int64_t prefix_one_one = 0;
  /// Each entry names an in-cone vector that contradicts the dichotomy.
  std::vector<std::string> violations;
};

ScanSummary dichotomy_scan(std::int64_t h1_max, std::int64_t r_max);

}  // namespace blowup::bs
