#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace ecdkit {

/// Generator algorithm recorded in report metadata. The engine is the
/// standard-specified 64-bit Mersenne Twister; the distributions below are
/// implemented here because the std:: distributions are not reproducible
/// across standard libraries.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; seeds derived with splitmix64; uniform ints by rejection; "
    "normals by Box-Muller";

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// FNV-1a, used to fold string labels into seed derivation.
std::uint64_t hash_label(std::string_view label) noexcept;

/// Deterministic child seed from a base seed and an ordered list of parts.
/// Any change to any part produces an unrelated seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept;

/// Bit pattern of a double, for hashing real-valued parameters into seeds.
std::uint64_t seed_part(double value) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ecdkit
