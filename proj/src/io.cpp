#include "blowup/io.hpp"

#include <fstream>
#include <sstream>

#include "blowup/error.hpp"

namespace blowup::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators")) {
    parse_error("ideal JSON needs \"dim\" and \"generators\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) parse_error("\"dim\" must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  if (!j["generators"].is_array()) parse_error("\"generators\" must be an array");
  std::vector<ExponentVector> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) parse_error("each generator must be an array of exponents");
    std::vector<std::int64_t> coords;
    for (const auto& c : g) {
      if (!c.is_number_integer()) parse_error("exponents must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    gens.emplace_back(std::move(coords));
  }
  return MonomialIdeal(dim, std::move(gens));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    Json v = Json::array();
    for (auto c : g.coords()) v.push_back(c);
    gens.push_back(std::move(v));
  }
  return Json{{"dim", ideal.dim()}, {"generators", std::move(gens)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(j);
}

std::string format_rational(const bs::Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  if (boost::multiprecision::denominator(x) != 1) os << '/' << boost::multiprecision::denominator(x);
  return os.str();
}

bs::Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return bs::Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) parse_error("zero denominator in \"" + s + "\"");
    return bs::Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    parse_error("not a rational: \"" + s + "\"");
  }
}

Json table_to_json(const bs::CohomologyTable& table) {
  Json h = Json::object();
  for (int j = 0; j < 3; ++j) {
    Json row = Json::array();
    for (const auto& v : table.row(j)) row.push_back(format_rational(v));
    h[std::to_string(j)] = std::move(row);
  }
  return Json{{"window", {table.window().lo, table.window().hi}}, {"h", std::move(h)}};
}

bs::CohomologyTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("window") || !j.contains("h")) parse_error("table JSON needs \"window\" and \"h\"");
  const auto& w = j["window"];
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
    parse_error("\"window\" must be [lo, hi]");
  }
  bs::Window window{w[0].get<std::int64_t>(), w[1].get<std::int64_t>()};
  if (window.lo > window.hi) parse_error("\"window\" is empty");
  std::array<std::vector<bs::Rational>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    const auto key = std::to_string(r);
    if (!j["h"].contains(key) || !j["h"][key].is_array() || j["h"][key].size() != window.width()) {
      parse_error("row \"" + key + "\" must list one value per twist");
    }
    for (const auto& v : j["h"][key]) {
      if (v.is_string()) {
        rows[static_cast<std::size_t>(r)].push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        rows[static_cast<std::size_t>(r)].emplace_back(v.get<std::int64_t>());
      } else {
        parse_error("table values are \"p/q\" strings");
      }
    }
  }
  return bs::CohomologyTable(window, std::move(rows));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace blowup::io
