#pragma once

#include <cstdint>
#include <Eigen/Core>

namespace otd::rng {

// Counter-based random stream. A draw is a pure function of (key, counter),
// so any phase of a run can be replayed in isolation: derive the same key,
// replay the counters. Keys are derived from the run seed by labeled splits.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key) {}

  // Child stream for a labeled sub-phase. Never shares draws with the parent.
  Stream child(std::uint64_t label) const { return Stream(mix(key_, label)); }

  std::uint64_t next_u64() { return mix(key_, counter_++); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // standard normal via Box-Muller; pairs cached
  double gaussian();

  Eigen::VectorXd gaussian_vector(Eigen::Index n);
  Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream labels, one per randomized phase.
namespace label {
inline constexpr std::uint64_t components = 1;
inline constexpr std::uint64_t subspace_init = 2;
inline constexpr std::uint64_t rounding_trial = 3;   // combined with trial index
inline constexpr std::uint64_t power_start = 4;
inline constexpr std::uint64_t jennrich = 5;
inline constexpr std::uint64_t probes = 6;
inline constexpr std::uint64_t residual_search = 7;
}  // namespace label

}  // namespace otd::rng
