#include "blowup/bs_tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blowup/error.hpp"

namespace blowup::bs {

namespace {

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

std::string describe(const std::vector<Rational>& h1) {
  std::ostringstream os;
  os << "h1=(";
  for (std::size_t i = 0; i < h1.size(); ++i) os << (i ? "," : "") << h1[i];
  os << ')';
  return os.str();
}

}  // namespace

ZeroSequence::ZeroSequence(std::vector<std::int64_t> zeros) : zeros_(std::move(zeros)) {
  if (zeros_.empty() || zeros_.size() > 2) {
    throw Error(ErrorKind::InvariantViolation, "a zero sequence on P^2 has one or two entries");
  }
  if (zeros_.size() == 2 && zeros_[0] <= zeros_[1]) {
    throw Error(ErrorKind::InvariantViolation, "zero sequence must be strictly decreasing");
  }
}

CohomologyTable::CohomologyTable(Window window) : window_(window) {
  if (window.lo > window.hi) throw Error(ErrorKind::InvariantViolation, "empty twist window");
  for (auto& r : rows_) r.assign(window.width(), Rational(0));
}

CohomologyTable::CohomologyTable(Window window, std::array<std::vector<Rational>, 3> rows)
    : CohomologyTable(window) {
  for (int j = 0; j < 3; ++j) {
    auto& src = rows[static_cast<std::size_t>(j)];
    if (src.size() != window.width()) {
      throw Error(ErrorKind::InvariantViolation, "row length does not match the window");
    }
    for (std::size_t k = 0; k < src.size(); ++k) set(j, window.lo + static_cast<std::int64_t>(k), src[k]);
  }
}

std::size_t CohomologyTable::index(std::int64_t m) const {
  if (!window_.contains(m)) {
    throw Error(ErrorKind::WindowTooSmall, "twist " + std::to_string(m) + " is outside the table window");
  }
  return static_cast<std::size_t>(m - window_.lo);
}

const Rational& CohomologyTable::at(int j, std::int64_t m) const { return rows_.at(static_cast<std::size_t>(j))[index(m)]; }

void CohomologyTable::set(int j, std::int64_t m, Rational value) {
  if (value < 0) throw Error(ErrorKind::NegativeCoefficient, "cohomology table entries are nonnegative");
  rows_.at(static_cast<std::size_t>(j))[index(m)] = std::move(value);
}

bool CohomologyTable::admissible() const {
  for (std::int64_t m = window_.lo; m <= window_.hi; ++m) {
    if (m <= -1 && at(0, m) != 0) return false;
    if (m == 0 && at(1, m) != 0) return false;
    if (m >= 0 && at(2, m) != 0) return false;
  }
  return true;
}

Rational CohomologyTable::euler_characteristic(std::int64_t m) const { return at(0, m) - at(1, m) + at(2, m); }

CohomologyTable supernatural_table(const ZeroSequence& z, Window window) {
  CohomologyTable table(window);
  for (std::int64_t m = window.lo; m <= window.hi; ++m) {
    const auto& zs = z.zeros();
    if (std::find(zs.begin(), zs.end(), m) != zs.end()) continue;
    // The nonzero row is the number of zeros above m.
    int row = static_cast<int>(std::count_if(zs.begin(), zs.end(), [m](std::int64_t zi) { return zi > m; }));
    Rational value = 1;
    for (auto zi : zs) value *= (m > zi ? m - zi : zi - m);
    table.set(row, m, value);
  }
  return table;
}

CohomologyTable synthesize(const std::vector<std::pair<ZeroSequence, Rational>>& parts, Window window) {
  CohomologyTable out(window);
  std::set<ZeroSequence> seen;
  for (const auto& [z, a] : parts) {
    if (a < 0) throw Error(ErrorKind::NegativeCoefficient, "supernatural coefficients are nonnegative");
    if (!seen.insert(z).second) throw Error(ErrorKind::InvariantViolation, "zero sequences must be distinct");
    const auto part = supernatural_table(z, window);
    for (int j = 0; j < 3; ++j) {
      for (std::int64_t m = window.lo; m <= window.hi; ++m) out.set(j, m, out.at(j, m) + a * part.at(j, m));
    }
  }
  return out;
}

H1Decomposition solve_h1(const std::vector<Rational>& h1) {
  std::size_t r = h1.size();
  while (r > 0 && h1[r - 1] == 0) --r;
  H1Decomposition out;
  out.r = static_cast<std::int64_t>(r);
  out.coeffs.assign(r, Rational(0));
  for (std::size_t m = r; m >= 1; --m) {
    Rational rest = h1[m - 1];
    for (std::size_t i = m + 1; i <= r; ++i) rest -= Rational(static_cast<std::int64_t>(m * (i + 1 - m))) * out.coeffs[i - 1];
    out.coeffs[m - 1] = rest / static_cast<std::int64_t>(m);
    if (out.coeffs[m - 1] < 0) out.in_cone = false;
  }
  return out;
}

H1Decomposition decompose_h1(const std::vector<Rational>& h1) {
  auto out = solve_h1(h1);
  if (!out.in_cone) throw Error(ErrorKind::NotInCone, describe(h1) + " needs a negative supernatural coefficient");
  return out;
}

std::vector<Rational> h1_from_coefficients(const std::vector<Rational>& coeffs) {
  const std::size_t r = coeffs.size();
  std::vector<Rational> h1(r, Rational(0));
  for (std::size_t m = 1; m <= r; ++m) {
    for (std::size_t i = m; i <= r; ++i) h1[m - 1] += Rational(static_cast<std::int64_t>(m * (i + 1 - m))) * coeffs[i - 1];
  }
  return h1;
}

std::vector<Rational> positive_h1(const CohomologyTable& table) {
  const auto& w = table.window();
  if (w.hi < 1) throw Error(ErrorKind::WindowTooSmall, "window has no positive twist");
  if (table.at(1, w.hi) != 0) {
    throw Error(ErrorKind::WindowTooSmall, "h1 does not vanish at the top of the window");
  }
  if (w.lo > 1) throw Error(ErrorKind::WindowTooSmall, "window must start at or below twist 1");
  std::vector<Rational> h1;
  for (std::int64_t m = 1; m <= w.hi; ++m) h1.push_back(table.at(1, m));
  while (!h1.empty() && h1.back() == 0) h1.pop_back();
  return h1;
}

Rational h1_at_1(const CohomologyTable& table) { return table.at(1, 1); }

Rational ker_psi2(const CohomologyTable& table) {
  if (!table.admissible()) throw Error(ErrorKind::InvariantViolation, "ker psi_2 needs an admissible table");
  Rational ker = 3 * table.at(1, 1) - table.at(1, 2);
  if (ker < 0) throw Error(ErrorKind::NegativeKernel, "3 h1(1) < h1(2)");
  return ker;
}

Rational ker_from_coefficients(const std::vector<Rational>& coeffs) {
  Rational s = 0;
  for (std::size_t i = 1; i <= coeffs.size(); ++i) s += static_cast<std::int64_t>(i + 2) * coeffs[i - 1];
  return s;
}

std::string_view to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::Zero: return "Zero";
    case Dichotomy::AtLeastThree: return "AtLeastThree";
    case Dichotomy::TwoExcluded: return "TwoExcluded";
  }
  return "unknown";
}

Dichotomy dichotomy_classify(const CohomologyTable& table) {
  if (!table.admissible()) throw Error(ErrorKind::InvariantViolation, "classification needs an admissible table");
  const auto h1 = positive_h1(table);
  for (const auto& v : h1) {
    if (!is_integer(v)) throw Error(ErrorKind::InvariantViolation, "classification needs integer h1 values");
  }
  decompose_h1(h1);
  const Rational ker = ker_psi2(table);
  if (ker == 0) return Dichotomy::Zero;
  if (ker >= 3) return Dichotomy::AtLeastThree;
  if (ker == 2) {
    if (table.at(1, 1) != 1 || table.at(1, 2) != 1) {
      throw Error(ErrorKind::InvariantViolation, "ker psi_2 = 2 without h1(1) = h1(2) = 1");
    }
    return Dichotomy::TwoExcluded;
  }
  std::ostringstream os;
  os << "in-cone integer table with ker psi_2 = " << ker;
  throw Error(ErrorKind::InvariantViolation, os.str());
}

CheckResult persistence_check(const CohomologyTable& table) {
  const auto& w = table.window();
  for (std::int64_t m = std::max<std::int64_t>(1, w.lo); m < w.hi; ++m) {
    if (table.at(1, m) == 0 && table.at(1, m + 1) != 0) return {false, m + 1};
  }
  return {};
}

CheckResult vanish_after_two(const CohomologyTable& table) {
  const auto& w = table.window();
  if (!w.contains(1) || !w.contains(2)) return {};
  if (table.at(1, 1) != 1 || table.at(1, 2) != 1) return {};
  for (std::int64_t m = 3; m <= w.hi; ++m) {
    if (table.at(1, m) != 0) return {false, m};
  }
  return {};
}

CohomologyTable table_from_h1(const std::vector<Rational>& h1) {
  const auto r = static_cast<std::int64_t>(h1.size());
  CohomologyTable table(Window{-1, r + 1});
  for (std::int64_t m = 1; m <= r; ++m) table.set(1, m, h1[static_cast<std::size_t>(m - 1)]);
  return table;
}

ScanSummary dichotomy_scan(std::int64_t h1_max, std::int64_t r_max) {
  ScanSummary summary;
  const auto r = static_cast<std::size_t>(std::max<std::int64_t>(r_max, 0));
  std::vector<std::int64_t> digits(r, 0);
  while (true) {
    ++summary.vectors;
    std::vector<Rational> h1(digits.begin(), digits.end());
    const auto dec = solve_h1(h1);
    if (dec.in_cone) {
      ++summary.in_cone;
      const auto table = table_from_h1(h1);
      const Rational ker = ker_psi2(table);
      if (ker != ker_from_coefficients(dec.coeffs)) summary.violations.push_back(describe(h1) + ": kernel identity fails");
      if (ker == 0) ++summary.ker_zero;
      if (ker >= 3) ++summary.ker_at_least_three;
      if (ker == 1) summary.violations.push_back(describe(h1) + ": ker psi_2 = 1");
      if (ker == 2) {
        ++summary.ker_two;
        if (r < 2 || h1[0] != 1 || h1[1] != 1) summary.violations.push_back(describe(h1) + ": ker 2 off (1,1)");
      }
      try {
        const auto label = dichotomy_classify(table);
        if ((ker == 2) != (label == Dichotomy::TwoExcluded)) {
          summary.violations.push_back(describe(h1) + ": misclassified");
        }
      } catch (const Error& err) {
        summary.violations.push_back(describe(h1) + ": " + err.what());
      }
      if (r >= 2 && h1[0] == 1 && h1[1] == 1) {
        ++summary.prefix_one_one;
        if (!vanish_after_two(table).ok) summary.violations.push_back(describe(h1) + ": h1 survives past twist 2");
      }
      if (!persistence_check(table).ok) summary.violations.push_back(describe(h1) + ": persistence fails");
    }
    std::size_t pos = 0;
    while (pos < r && digits[pos] == h1_max) digits[pos++] = 0;
    if (pos == r) break;
    ++digits[pos];
  }
  return summary;
}

}  // namespace blowup::bs
