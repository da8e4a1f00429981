#include "zonelab/instance_gen.hpp"

#include <algorithm>
#include <limits>

namespace zonelab {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw MalformedInputError("empty draw range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  const uint64_t limit = (std::numeric_limits<uint64_t>::max() / span) * span;
  uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

std::vector<Hyperplane> random_hyperplanes(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.d < 1)
    throw MalformedInputError("need n >= 0 and d >= 1");
  if (cfg.coeff_bound < 1)
    throw MalformedInputError("coeff_bound must be positive");

  Rng rng(splitmix64(cfg.seed ^ kHyperplaneStream));
  std::vector<Hyperplane> out;
  long attempts_left = 64L * cfg.n + 256;
  while (static_cast<int>(out.size()) < cfg.n) {
    if (--attempts_left < 0)
      throw GenerationError(
          "could not draw enough distinct hyperplanes; raise coeff_bound");
    RatVec normal(static_cast<size_t>(cfg.d));
    for (Rat& x : normal) x = rng.uniform(-cfg.coeff_bound, cfg.coeff_bound);
    Rat offset = rng.uniform(-cfg.coeff_bound, cfg.coeff_bound);
    if (is_zero_vec(normal)) continue;
    Hyperplane h(std::move(normal), std::move(offset));
    if (std::find(out.begin(), out.end(), h) != out.end()) continue;
    out.push_back(std::move(h));
  }
  return out;
}

ConvexBody random_body(const GenConfig& cfg) {
  if (cfg.body_facets < 1)
    throw MalformedInputError("a body needs at least one halfspace");
  if (cfg.body_scale <= 0)
    throw MalformedInputError("body_scale must be positive");

  Rng rng(splitmix64(cfg.seed ^ kBodyStream));
  RatVec center(static_cast<size_t>(cfg.d));
  for (Rat& x : center) x = rng.uniform(-cfg.coeff_bound, cfg.coeff_bound);

  std::vector<LinearConstraint> halfspaces;
  for (int f = 0; f < cfg.body_facets; ++f) {
    RatVec outward(static_cast<size_t>(cfg.d));
    do {
      for (Rat& x : outward) x = rng.uniform(-cfg.coeff_bound, cfg.coeff_bound);
    } while (is_zero_vec(outward));
    Rat slack = Rat(rng.uniform(1, cfg.coeff_bound)) * cfg.body_scale;
    // outward.x <= outward.center + slack, stored inward as >=.
    Rat bound = dot(outward, center) + slack;
    for (Rat& x : outward) x = -x;
    halfspaces.push_back(ge(std::move(outward), -bound));
  }
  ConvexBody body(std::move(halfspaces), cfg.d);
  // The center satisfies every halfspace strictly.
  if (!body.strictly_contains(center))
    throw std::logic_error("generated body lost its center");
  return body;
}

Instance generate_instance(const GenConfig& cfg) {
  Instance inst;
  inst.dim = cfg.d;
  inst.seed = cfg.seed;
  inst.hyperplanes = random_hyperplanes(cfg);
  inst.body = random_body(cfg);
  return inst;
}

std::vector<Hyperplane> perturb(std::span<const Hyperplane> hyperplanes,
                                const ConvexBody& body, long precision,
                                uint64_t seed) {
  if (precision < 1) throw MalformedInputError("precision must be positive");
  GpReport gp = general_position_check(hyperplanes, body);
  if (gp.ok()) return {hyperplanes.begin(), hyperplanes.end()};

  constexpr long kGrain = 4096;  // offsets move by j / (precision * 4096)
  constexpr int kRounds = 8;
  GpReport last = std::move(gp);
  for (int round = 0; round < kRounds; ++round) {
    const Rat denom = Rat(precision) * Rat(kGrain) * Rat(1L << round);
    Rng rng(splitmix64(seed ^ kPerturbStream ^ static_cast<uint64_t>(round)));

    std::vector<Hyperplane> moved;
    bool malformed = false;
    for (const Hyperplane& h : hyperplanes) {
      RatVec normal = h.normal();
      Rat offset = h.offset() + Rat(rng.uniform(-kGrain, kGrain)) / denom;
      if (round >= 3) {
        // Offsets alone have not freed the instance; nudge directions too.
        for (Rat& x : normal) x += Rat(rng.uniform(-kGrain, kGrain)) / denom;
        if (is_zero_vec(normal)) {
          malformed = true;
          break;
        }
      }
      Hyperplane candidate(std::move(normal), std::move(offset));
      if (std::find(moved.begin(), moved.end(), candidate) != moved.end()) {
        malformed = true;
        break;
      }
      moved.push_back(std::move(candidate));
    }
    if (malformed) continue;

    GpReport check = general_position_check(moved, body);
    if (check.ok()) return moved;
    last = std::move(check);
  }
  throw PerturbationError("perturbation budget exhausted", std::move(last));
}

}  // namespace zonelab
