#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcollapse/collapse.hpp"
#include "qcollapse/optics.hpp"
#include "qcollapse/simulator.hpp"

namespace qcollapse {

/// Maximum-likelihood fringe visibility estimate with a profile-likelihood
/// 95% confidence interval (log-likelihood drop of 1.92). Estimates pinned
/// at a boundary of [0, 1] report one-sided intervals.
struct PatternFit {
  double v_hat = 0.0;
  double log_likelihood = 0.0;
  std::int64_t n_samples = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

enum class Decision { Collapsed, Intact, Inconclusive };

const char* decision_name(Decision d) noexcept;

/// Likelihood-ratio verdict between the collapsed-mixture hypothesis (V=1/3)
/// and the intact-interference hypothesis (V=1).
struct ClassificationResult {
  Decision decision = Decision::Inconclusive;
  double log_likelihood_ratio = 0.0;  ///< log L(V=1/3) - log L(V=1)
  double threshold_used = 0.0;
};

/// One stage of a PMT sweep.
struct StageRecord {
  int stages = 0;
  double environment_count = 0.0;
  PatternFit fit;
  Decision decision = Decision::Inconclusive;
};

/// Outcome of sweeping PMT stage counts: the smallest stage count classified
/// Collapsed (absent when none is), and the implied bracket
/// (G^(k*-1), G^k*] on the collapse threshold.
struct SweepResult {
  std::vector<StageRecord> records;
  std::optional<int> inferred_stage_threshold;
  std::optional<std::pair<double, double>> inferred_nc_bracket;
};

/// Default decision threshold on the log-likelihood ratio, ln(100)
/// (a "decisive" Bayes-factor convention).
double default_llr_threshold() noexcept;

/// Precomputed likelihood machinery for one (optics, screen) pair.
///
/// In the family sinc^2(theta_a)*(1 + V*cos(2*theta_d)) the normalizer over
/// the screen is linear in V, Z(V) = Z0 + V*Zc, so the per-sample
/// log-density splits into a V-independent offset plus ln(1 + V*c_i) with
/// c_i = cos(2*theta_d(x_i)). Fits and likelihood ratios reuse the cached
/// quadrature constants and per-sample cosines.
class VisibilityModel {
 public:
  VisibilityModel(const OpticalConfig& cfg, const ScreenConfig& screen);

  /// Unbinned log-likelihood of positions under visibility v.
  double log_likelihood(std::span<const double> positions, double v) const;

  /// ln(density) normalizer pieces: Z(v) = z0() + v*zc().
  double z0() const { return z0_; }
  double zc() const { return zc_; }
  double x_max() const { return x_max_; }

  /// Per-sample fringe cosines c_i; throws OutOfRangeSample on |x| > x_max.
  std::vector<double> fringe_cosines(std::span<const double> positions) const;
  /// Log-likelihood from precomputed cosines plus the sinc^2 offset term.
  double log_likelihood_from_cosines(std::span<const double> cosines,
                                     double log_sinc_sum, double v) const;
  /// Sum over samples of ln(sinc^2(theta_a(x_i))).
  double log_sinc_sum(std::span<const double> positions) const;

 private:
  OpticalConfig cfg_;
  double x_max_;
  double z0_;
  double zc_;
};

/// Unbinned MLE of the fringe visibility over V in [0, 1]: a 41-point
/// unimodality-checked coarse grid followed by golden-section refinement to
/// |dV| < 1e-5, ties broken toward smaller V.
///
/// Throws TooFewSamples (< 100 positions) and OutOfRangeSample.
PatternFit fit_visibility(std::span<const double> positions,
                          const OpticalConfig& cfg, const ScreenConfig& screen);

/// Classifies positions against the fixed hypotheses V=1/3 (Collapsed)
/// versus V=1 (Intact); |LLR| below the threshold is Inconclusive.
ClassificationResult classify(std::span<const double> positions,
                              const OpticalConfig& cfg, const ScreenConfig& screen,
                              double llr_threshold = default_llr_threshold());

/// Multinomial-likelihood fit over histogram bins (for data only available
/// binned). Same search schedule as fit_visibility.
PatternFit fit_visibility_binned(const Histogram& histogram,
                                 const OpticalConfig& cfg);

/// Binned counterpart of classify.
ClassificationResult classify_binned(const Histogram& histogram,
                                     const OpticalConfig& cfg,
                                     double llr_threshold = default_llr_threshold());

/// Smallest sample count n (>= 100, the fit/classify floor) whose Monte
/// Carlo misclassification rate between Family(v_true) and Family(v_alt) is
/// <= error_rate, using the symmetric decision threshold
/// ln((1-error_rate)/error_rate).
///
/// Trials split evenly between the two hypotheses (>= 400 total per
/// candidate n, seeds derived from `seed`); a trial counts as misclassified
/// unless it is decisive and correct. The schedule doubles n until the rate
/// passes, then bisects down to the smallest passing n. Throws NonConvergent
/// beyond n = 1e8 and ValidationError for v_true == v_alt or error_rate
/// outside (0, 0.5).
std::int64_t min_samples(double v_true, double v_alt, double error_rate,
                         const OpticalConfig& cfg, const ScreenConfig& screen,
                         std::uint64_t seed = 0, int n_workers = 1);

/// Simulates and classifies one PMT per stage count in [stage_lo, stage_hi],
/// recovering the smallest collapsing stage count and the implied threshold
/// bracket. Per-stage seeds derive deterministically from `seed`.
SweepResult stage_sweep(double gain, int stage_lo, int stage_hi,
                        const BranchState& branches, const CollapseModel& ground_truth,
                        std::int64_t n_events_per_stage, std::uint64_t seed,
                        const OpticalConfig& cfg, const ScreenConfig& screen,
                        const TimingModel& timing, int n_workers = 1);

}  // namespace qcollapse
