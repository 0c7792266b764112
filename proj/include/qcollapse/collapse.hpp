#pragma once

#include <string>
#include <variant>

#include "qcollapse/rng.hpp"

namespace qcollapse {

/// Outcome of the idler photon meeting the probed detector.
enum class Branch { Miss, Detect, Fail };

const char* branch_name(Branch b) noexcept;

/// Born-rule weights of the three device branches: idler not detected,
/// detected with amplification proceeding, or absorbed without amplification
/// (device failure). Probabilities must sum to 1 within 1e-12.
struct BranchState {
  double p_miss = 0.0;
  double p_detect = 1.0;
  double p_fail = 0.0;

  void validate() const;
};

/// Idler flies to a sink untouched: zero environment interaction always.
struct SinkDetector {};

/// Cold-atom gas absorbing the idler into `atom_count` atoms.
struct ColdAtomDetector {
  int atom_count = 1;
};

/// Photographic plate; one silver-halide grain entangles `grain_env_count`
/// environment particles per absorption. The value is a modelling choice the
/// experimenter must supply; there is no physically established default.
struct PlateDetector {
  int grain_env_count = 0;
};

/// Photomultiplier with per-stage gain applied over `stages` dynodes; a
/// detection entangles gain^stages electrons.
struct PmtDetector {
  double gain = 1.0;
  int stages = 0;
};

using DetectorVariant =
    std::variant<SinkDetector, ColdAtomDetector, PlateDetector, PmtDetector>;

/// The device placed at the probed arm: its physical variant plus the
/// branch weights of its outcome state.
struct DetectorSpec {
  DetectorVariant variant = SinkDetector{};
  BranchState branches;

  void validate() const;
  bool is_sink() const { return std::holds_alternative<SinkDetector>(variant); }
  /// "sink", "cold_atom", "plate" or "pmt".
  std::string kind_name() const;
};

/// Collapse criterion: the state collapses once `count` environment
/// particles carry which-path information. softness = 0 is a hard step at
/// threshold_nc; softness > 0 is a logistic of width `softness` in
/// log-count space.
struct CollapseModel {
  double threshold_nc = 1.0;
  double softness = 0.0;

  void validate() const;
};

/// Number of environment particles entangled with which-path information for
/// a given branch outcome. Miss and the sink arm interact with nothing; a
/// detection amplifies per the device variant; a failed absorption still
/// entangles the absorber itself (count 1).
double environment_count(const DetectorSpec& spec, Branch branch) noexcept;

/// Probability that `count` entangled environment particles collapse the
/// state. Monotone non-decreasing in count.
double collapse_probability(double count, const CollapseModel& model) noexcept;

/// Born-rule draw of the device branch.
Branch sample_branch(const BranchState& branches, Pcg64& rng) noexcept;

}  // namespace qcollapse
