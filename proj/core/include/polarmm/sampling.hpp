#pragma once

#include <cstdint>
#include <random>

#include "polarmm/number_field.hpp"
#include "polarmm/prime_field.hpp"

namespace polarmm {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// mt19937_64 with explicit modular reduction, so draws agree across
/// standard libraries (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Element of the field with coefficients n/d, |n| <= num_bound, 1 <= d <= den_bound.
NumberFieldElement random_element(const NumberFieldPtr& field, Rng& rng, std::int64_t num_bound = 20,
                                  std::int64_t den_bound = 9);

inline PrimeFieldElement random_element(std::uint64_t p, Rng& rng) {
  return PrimeFieldElement(static_cast<std::int64_t>(rng.below(p)), p);
}

}  // namespace polarmm
