#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcollapse/rng.hpp"

namespace qcollapse {

/// Double-slit geometry and imaging lens, all lengths in meters.
struct OpticalConfig {
  double slit_width_a = 0.0;       ///< slit width a
  double slit_separation_d = 0.0;  ///< center-to-center slit separation d
  double wavelength = 0.0;         ///< photon wavelength lambda
  double focal_length_f0 = 0.0;    ///< focal length f0 of the imaging lens

  /// Throws ValidationError unless all lengths are positive and d >= a.
  void validate() const;

  /// Screen half-width covering three envelope lobes per side: 3*lambda*f0/a.
  double default_x_max() const {
    return 3.0 * wavelength * focal_length_f0 / slit_width_a;
  }
};

/// Finite observation screen spanning [-x_max, +x_max], histogrammed into
/// n_bins equal-width bins.
struct ScreenConfig {
  double x_max = 0.0;
  int n_bins = 0;

  void validate() const;
};

/// Fringe phases at screen position x:
///   theta_a = pi*a*x/(lambda*f0)   (envelope phase)
///   theta_d = pi*d*x/(lambda*f0)   (fringe phase)
struct FringePhases {
  double theta_a;
  double theta_d;
};

FringePhases fringe_phases(double x, const OpticalConfig& cfg) noexcept;

/// Unnormalized sinc(u) = sin(u)/u with sinc(0) = 1. The removable
/// singularity is handled by the series 1 - u^2/6 for |u| < 1e-8.
double sinc(double u) noexcept;

/// Screen pattern shape. All named kinds are members of the one-parameter
/// family sinc^2(theta_a) * (1 + V*cos(2*theta_d)) with fringe visibility V:
/// full two-slit interference has V=1, the bare single-slit envelope V=0 and
/// the half-collapsed mixed pattern V=1/3. Absolute intensity scale carries
/// no meaning; only the shape does.
class PatternKind {
 public:
  enum class Tag { Interference, Envelope, Mixed, Family };

  static PatternKind interference() { return PatternKind(Tag::Interference, 1.0); }
  static PatternKind envelope() { return PatternKind(Tag::Envelope, 0.0); }
  static PatternKind mixed() { return PatternKind(Tag::Mixed, 1.0 / 3.0); }
  /// General family member; throws ValidationError unless v in [0, 1].
  static PatternKind family(double v);

  Tag tag() const { return tag_; }
  double visibility() const { return visibility_; }
  /// "interference", "envelope", "mixed" or "family:<v>".
  std::string name() const;
  /// Inverse of name(); accepts the same four spellings.
  static PatternKind parse(const std::string& text);

 private:
  PatternKind(Tag tag, double v) : tag_(tag), visibility_(v) {}

  Tag tag_;
  double visibility_;
};

/// Unnormalized pattern value sinc^2(theta_a) * (1 + V*cos(2*theta_d)).
double pattern_value(double x, const PatternKind& kind, const OpticalConfig& cfg) noexcept;

/// Tabulated probability density of a pattern over a finite screen.
///
/// Built on a uniform, symmetric grid (odd node count, so x=0 is a node) by
/// trapezoidal normalization; sampling inverts the piecewise-linear CDF.
/// Immutable after construction and safe to share across threads; sampling
/// draws from a caller-owned RNG.
class PatternPdf {
 public:
  static constexpr int kDefaultGridNodes = 16385;  // 2^14 + 1, >= 4096

  double density_at(double x) const;  ///< linear interpolation between nodes
  double cdf_at(double x) const;      ///< piecewise-linear CDF
  /// Inverse-CDF sample in [-x_max, x_max].
  double sample(Pcg64& rng) const;

  /// Trapezoidal integral of the *unnormalized* pattern over the screen.
  double raw_mass() const { return raw_mass_; }
  double x_max() const { return x_max_; }
  const PatternKind& kind() const { return kind_; }
  const OpticalConfig& optics() const { return optics_; }
  std::span<const double> grid() const { return grid_; }
  std::span<const double> density() const { return density_; }
  std::span<const double> cdf() const { return cdf_; }

 private:
  friend PatternPdf normalize_pdf(const PatternKind&, const OpticalConfig&,
                                  const ScreenConfig&, int);

  PatternPdf(PatternKind kind, OpticalConfig optics)
      : kind_(kind), optics_(optics) {}

  PatternKind kind_;
  OpticalConfig optics_;
  double x_max_ = 0.0;
  double raw_mass_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> density_;
  std::vector<double> cdf_;
};

/// Tabulates the pattern on `grid_nodes` uniform nodes over the screen and
/// normalizes it into a probability density (trapezoidal rule).
///
/// Throws DegeneratePattern if the unnormalized mass is non-finite or below
/// 1e-300, and ValidationError for invalid configs or grid_nodes < 4096.
PatternPdf normalize_pdf(const PatternKind& kind, const OpticalConfig& cfg,
                         const ScreenConfig& screen,
                         int grid_nodes = PatternPdf::kDefaultGridNodes);

/// Draws one screen position from the tabulated density.
inline double sample_position(const PatternPdf& pdf, Pcg64& rng) {
  return pdf.sample(rng);
}

}  // namespace qcollapse
