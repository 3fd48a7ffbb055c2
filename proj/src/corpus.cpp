#include "blowup/corpus.hpp"

#include <cstdio>
#include <random>

#include "blowup/error.hpp"

namespace blowup {

namespace {

// Bounded draw built on the raw engine output so the stream is identical
// across standard library implementations.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace

std::vector<Instance> generate_corpus(std::uint64_t seed, std::int64_t count, std::int64_t max_exp) {
  if (max_exp < 2) throw Error(ErrorKind::InvariantViolation, "max-exp must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::int64_t index = 0; index < count; ++index) {
    const std::int64_t a = draw(rng, 2, max_exp), b = draw(rng, 2, max_exp), c = draw(rng, 2, max_exp);
    const std::vector<std::int64_t> powers{a, b, c};
    MonomialIdeal q = MonomialIdeal::pure_powers(powers);
    std::vector<ExponentVector> gens = q.generators();
    const std::int64_t extras = draw(rng, 0, 4);
    for (std::int64_t e = 0; e < extras; ++e) {
      while (true) {
        ExponentVector v{draw(rng, 0, a - 1), draw(rng, 0, b - 1), draw(rng, 0, c - 1)};
        if (b * c * v[0] + a * c * v[1] + a * b * v[2] >= a * b * c) {
          gens.push_back(std::move(v));
          break;
        }
      }
    }
    out.push_back(Instance{seed, index, MonomialIdeal(3, std::move(gens)), std::move(q)});
  }
  return out;
}

io::Json instance_to_json(const Instance& inst) {
  return io::Json{{"seed", inst.seed},
                  {"index", inst.index},
                  {"ideal", io::ideal_to_json(inst.ideal)},
                  {"reduction", io::ideal_to_json(inst.reduction)}};
}

Instance instance_from_json(const io::Json& j) {
  if (!j.is_object() || !j.contains("ideal")) throw Error(ErrorKind::ParseError, "instance JSON needs \"ideal\"");
  Instance inst;
  if (j.contains("seed") && j["seed"].is_number_unsigned()) inst.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("index") && j["index"].is_number_integer()) inst.index = j["index"].get<std::int64_t>();
  inst.ideal = io::ideal_from_json(j["ideal"]);
  inst.reduction = j.contains("reduction") ? io::ideal_from_json(j["reduction"]) : MonomialIdeal(inst.ideal.dim());
  return inst;
}

std::vector<std::filesystem::path> write_corpus(const std::vector<Instance>& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const auto& inst : corpus) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%04lld.json", static_cast<long long>(inst.index));
    paths.push_back(dir / name);
    io::write_json_file(paths.back(), instance_to_json(inst));
  }
  return paths;
}

}  // namespace blowup
