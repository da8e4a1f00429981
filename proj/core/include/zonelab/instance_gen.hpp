#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "zonelab/convex_body.hpp"
#include "zonelab/hyperplane.hpp"

namespace zonelab {

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PerturbationError : std::runtime_error {
  PerturbationError(const std::string& what, GpReport r)
      : std::runtime_error(what), last(std::move(r)) {}
  GpReport last;
};

// All randomness in the project flows through mt19937_64 (fully specified
// by the C++ standard, so instances reproduce across platforms) with
// bounded draws taken by rejection sampling, never by distribution
// classes, whose output is implementation-defined.
uint64_t splitmix64(uint64_t x);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi], inclusive, unbiased.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  uint64_t seed = 0;
  int n = 0;
  int d = 2;
  long coeff_bound = 10;  // coefficients are integers in [-bound, bound]
  int body_facets = 4;
  Rat body_scale = Rat(1);
};

// Stream tags: the hyperplane and body generators draw from independent
// mt19937_64 streams seeded with splitmix64(seed ^ tag).
inline constexpr uint64_t kHyperplaneStream = 0x48595045;
inline constexpr uint64_t kBodyStream = 0x424F4459;
inline constexpr uint64_t kPerturbStream = 0x50455254;
inline constexpr uint64_t kSweepStream = 0x53574545;

// n distinct canonical hyperplanes with integer coefficients; zero
// normals and duplicates are rejected and redrawn. Deterministic in seed.
std::vector<Hyperplane> random_hyperplanes(const GenConfig& cfg);

// body_facets halfspaces, each containing a random center point strictly,
// so the body is never empty (it may be unbounded).
ConvexBody random_body(const GenConfig& cfg);

struct Instance {
  int dim = 0;
  uint64_t seed = 0;
  std::vector<Hyperplane> hyperplanes;
  ConvexBody body = ConvexBody::whole_space(0);
};

Instance generate_instance(const GenConfig& cfg);

// Displaces hyperplane offsets by random rationals of magnitude at most
// 1/precision (and, from the fourth round on, normals too), doubling the
// precision each round until the instance is in general position. Eight
// failed rounds raise PerturbationError carrying the last findings.
// Returns the input unchanged when it is already in general position.
std::vector<Hyperplane> perturb(std::span<const Hyperplane> hyperplanes,
                                const ConvexBody& body, long precision,
                                uint64_t seed);

}  // namespace zonelab
