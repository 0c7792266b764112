#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcollapse/collapse.hpp"
#include "qcollapse/optics.hpp"
#include "qcollapse/rng.hpp"

namespace qcollapse {

/// Detection-order weight: probability that the probed detector registers
/// before the screen does. Equal optical path lengths give the default 1/2.
struct TimingModel {
  double p_d1_first = 0.5;

  void validate() const;
};

/// One pump-photon outcome.
struct EventRecord {
  std::int64_t event_index = 0;
  Branch branch = Branch::Miss;
  bool d1_first = false;
  bool collapsed = false;
  double x_position = 0.0;  ///< screen position [m]
};

/// Fixed-width histogram over [-x_max, x_max]. Positions exactly on a bin
/// edge go to the right bin; x == +x_max goes to the last bin.
class Histogram {
 public:
  Histogram() = default;
  Histogram(double x_max, int n_bins)
      : x_max_(x_max), counts_(static_cast<std::size_t>(n_bins), 0) {}

  int bin_index(double x) const noexcept;
  void add(double x) noexcept { ++counts_[static_cast<std::size_t>(bin_index(x))]; }
  void merge(const Histogram& other);

  double bin_center(int i) const noexcept;
  double bin_width() const noexcept {
    return 2.0 * x_max_ / static_cast<double>(counts_.size());
  }
  double x_max() const noexcept { return x_max_; }
  int n_bins() const noexcept { return static_cast<int>(counts_.size()); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

 private:
  double x_max_ = 0.0;
  std::vector<std::uint64_t> counts_;
};

/// Result of a simulation run. Events are recorded individually up to
/// RunParams::event_cap (the first events by index); the histogram always
/// accumulates all of them.
struct RunResult {
  std::vector<EventRecord> events;
  Histogram histogram;
  std::int64_t n_events = 0;
  std::uint64_t seed = 0;
  int n_workers = 1;
  std::string config_digest;

  std::int64_t count_collapsed = 0;
  std::int64_t count_d1_first = 0;
  std::int64_t count_miss = 0;
  std::int64_t count_detect = 0;
  std::int64_t count_fail = 0;
};

struct RunParams {
  std::int64_t n_events = 0;
  std::uint64_t seed = 0;
  int n_workers = 1;
  std::int64_t event_cap = 10'000'000;

  void validate() const;
};

/// Immutable per-run context: validated configs plus the two precomputed
/// channel densities (fringe pattern V=1 and bare envelope V=0).
///
/// Collapsed events draw their detection-order channel with probabilities
/// proportional to the timing weight times the channel pattern mass. The
/// screen-first channel carries the two-slit fringe pattern
/// sinc^2*cos^2(theta_d), whose mass is half the envelope's, so
///   P(detector first | collapsed) = p*M0 / (p*M0 + (1-p)*M1/2)
/// with p the timing weight and M0, M1 the envelope/fringe raw masses.
/// The collapsed-case aggregate is then proportional to
/// sinc^2 * (p + (1-p)*cos^2(theta_d)), i.e. the family member with
/// visibility (1-p)/(1+p): the 1 + cos^2 mixed pattern at p = 1/2, the bare
/// envelope at p = 1 and full fringes at p = 0. Uncollapsed events always
/// draw from the fringe pattern.
class SimulationSetup {
 public:
  SimulationSetup(const OpticalConfig& optics, const ScreenConfig& screen,
                  const DetectorSpec& detector, const CollapseModel& collapse,
                  const TimingModel& timing,
                  int grid_nodes = PatternPdf::kDefaultGridNodes);

  const OpticalConfig& optics() const { return optics_; }
  const ScreenConfig& screen() const { return screen_; }
  const DetectorSpec& detector() const { return detector_; }
  const CollapseModel& collapse() const { return collapse_; }
  const TimingModel& timing() const { return timing_; }
  const PatternPdf& fringe_pdf() const { return fringe_pdf_; }
  const PatternPdf& envelope_pdf() const { return envelope_pdf_; }
  /// P(detector-first channel | collapsed); see class comment.
  double p_envelope_channel() const { return p_envelope_channel_; }

 private:
  OpticalConfig optics_;
  ScreenConfig screen_;
  DetectorSpec detector_;
  CollapseModel collapse_;
  TimingModel timing_;
  PatternPdf fringe_pdf_;
  PatternPdf envelope_pdf_;
  double p_envelope_channel_;
};

/// Simulates one pump photon: branch draw, environment count, collapse
/// decision, detection-order channel, screen position.
EventRecord simulate_event(const SimulationSetup& setup, std::int64_t event_index,
                           Pcg64& rng);

/// Runs n_events events split contiguously across n_workers threads, each
/// worker on its own RNG stream Pcg64(seed, worker_index). Results are
/// bit-identical for a fixed (seed, n_workers).
RunResult run_simulation(const SimulationSetup& setup, const RunParams& params,
                         const std::string& config_digest = {});

}  // namespace qcollapse
