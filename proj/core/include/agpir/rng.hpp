#pragma once

#include <cstdint>

#include "agpir/field.hpp"

namespace agpir {

// Seed-deterministic generator behind every randomized operation. The
// algorithm identifier and seed are recorded in run manifests so transcripts
// can be reproduced bit-exactly. Uniform field elements are drawn by
// rejection from uniform machine words.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  FieldElem uniform(const Field& f) { return static_cast<FieldElem>(below(f.q())); }

 private:
  std::uint64_t state_;
};

}  // namespace agpir
