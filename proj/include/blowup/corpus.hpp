#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "blowup/io.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

/// A corpus entry: I together with its pure-power reduction q.
struct Instance {
  std::uint64_t seed = 0;
  std::int64_t index = 0;
  MonomialIdeal ideal{3};
  MonomialIdeal reduction{3};
};

/// q = (x^a, y^b, z^c) with 2 <= a,b,c <= max_exp, and I = q plus 0-4 extra
/// generators drawn from the box [0,a)x[0,b)x[0,c) on or above the facet
/// bc v1 + ac v2 + ab v3 >= abc, so q is a reduction of I by construction.
/// Deterministic in (seed, count, max_exp).
std::vector<Instance> generate_corpus(std::uint64_t seed, std::int64_t count, std::int64_t max_exp = 4);

io::Json instance_to_json(const Instance& inst);
Instance instance_from_json(const io::Json& j);

/// Writes instance_NNNN.json files into `dir` and returns their paths.
std::vector<std::filesystem::path> write_corpus(const std::vector<Instance>& corpus, const std::filesystem::path& dir);

}  // namespace blowup
