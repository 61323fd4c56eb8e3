#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace quench {

constexpr double kInfiniteDuration = std::numeric_limits<double>::infinity();

/// One constant-frequency stretch. The last segment of a protocol is the
/// open-ended tail and has infinite duration.
struct Segment {
  double omega = 0.0;
  double duration = kInfiniteDuration;
};

/// Piecewise-constant frequency schedule omega(t). The frequency is
/// omega_initial for t < 0; the first jump happens at t = 0 and segment i
/// starts where segment i-1 ends. Values at jump times follow the
/// right-limit (sudden-jump) convention. Immutable after construction.
class FrequencyProtocol {
 public:
  /// Throws std::invalid_argument when the segment list is empty, an
  /// interior segment has non-positive or infinite duration, the tail is
  /// finite, any omega is negative, the tail omega is zero, or
  /// mass/hbar/omega_initial are non-positive.
  FrequencyProtocol(double mass, double hbar, double omega_initial,
                    std::vector<Segment> segments);

  /// omega0 for t < 0, omega1 on (0, tau), omega0 again for t > tau.
  /// omega1 = 0 (a free interval) is allowed.
  static FrequencyProtocol two_jump(double omega0, double omega1, double tau);

  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double omega_initial() const { return omega_initial_; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Start time of segment i; segment 0 starts at t = 0.
  double segment_start(std::size_t i) const { return starts_[i]; }
  /// All jump times, i.e. the start of every segment (first entry is 0).
  const std::vector<double>& jump_times() const { return starts_; }

  /// Index of the segment owning time t (t >= 0), right-continuous.
  std::size_t segment_index(double t) const;
  double omega_at(double t) const;

  bool is_two_jump() const;
  /// Length of the jump window for a two-jump protocol.
  double window_length() const;

  /// The first `count` durations tau_l = l*pi/omega1 after which the
  /// post-jump oscillator is indistinguishable from the unperturbed one.
  /// Requires a two-jump protocol; empty when the window frequency is 0.
  std::vector<double> revival_times(int count) const;

  /// Schema: {mass, hbar, omega_initial, segments:[{omega,duration}]};
  /// duration null encodes the infinite tail.
  nlohmann::json to_json() const;
  static FrequencyProtocol from_json(const nlohmann::json& j);

 private:
  double mass_;
  double hbar_;
  double omega_initial_;
  std::vector<Segment> segments_;
  std::vector<double> starts_;
};

}  // namespace quench
