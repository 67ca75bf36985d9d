#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sfc {

/// Seeded generator with platform-independent output.
///
/// std::mt19937_64 and std::seed_seq are fully specified by the standard;
/// the library distributions are not, so the integer and real mappings are
/// done here.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/seed_seq";

  /// stream separates independent sequences drawn from one seed.
  Rng(std::uint64_t seed, std::uint32_t stream);

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sfc
