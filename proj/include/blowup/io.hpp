#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "blowup/bs_tables.hpp"
#include "blowup/monomial.hpp"

namespace blowup::io {

using Json = nlohmann::json;

/// {"dim": 3, "generators": [[2,0,0], ...]}; generators are minimalized.
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& ideal);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// "p/q", or "p" for integers; accepts the same forms on input.
std::string format_rational(const bs::Rational& x);
bs::Rational parse_rational(const std::string& s);

/// {"window": [lo, hi], "h": {"0": [...], "1": [...], "2": [...]}}.
Json table_to_json(const bs::CohomologyTable& table);
bs::CohomologyTable table_from_json(const Json& j);

/// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace blowup::io
