// Copyright 2026 The dwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DWM_PROTOCOL_H
#define DWM_PROTOCOL_H

#include <cstddef>

#include "dwm/state.h"

namespace dwm {

/// Rotation angle (radians) imparted to the pointer when the system sits at
/// the coupled position. Any theta in [0, pi] is accepted here so the weak
/// and degenerate limits can be studied; reconstruction additionally
/// rejects sin(theta) ~ 0 (see `require_reconstructible`).
class CouplingStrength {
   public:
    explicit CouplingStrength(double theta);

    double theta() const noexcept {
        return theta_;
    }
    double cos() const noexcept {
        return cos_;
    }
    double sin() const noexcept {
        return sin_;
    }

    /// Throws DegenerateAngle when sin(theta) <= 1e-9 or |theta - pi| <= 1e-9.
    void require_reconstructible() const;

   private:
    double theta_;
    double cos_;
    double sin_;
};

/// Joint probabilities P_j for a single coupled position x.
struct ProbabilitySet {
    double p_plus = 0.0;
    double p_minus = 0.0;
    double p_zero = 0.0;
    double p_one = 0.0;
    double p_L = 0.0;
    double p_R = 0.0;

    double get(PointerLabel label) const;
    double &get(PointerLabel label);

    bool operator==(const ProbabilitySet &) const = default;
};

/// |Psi'> = U_x(theta) (|psi> (x) |0>), where U_x rotates the pointer by
/// theta only on the |x><x| block:
///   |x>|0> -> cos(theta)|x>|0> + sin(theta)|x>|1>
///   |x>|1> -> -sin(theta)|x>|0> + cos(theta)|x>|1>
/// Throws IndexOutOfRange if x >= d.
JointState apply_coupling(const SystemState &psi, std::size_t x, const CouplingStrength &strength);

/// phi_p = (<p0| (x) <p|) |Psi'> = (1/sqrt d) sum_x Psi'[x, p].
UnnormalizedPointerState pointer_collapse(const JointState &joint);

/// P_j = |<j|phi>|^2 for every pointer label.
ProbabilitySet probabilities_from_pointer(const UnnormalizedPointerState &phi);

/// Joint probabilities of finding the system in |p0> and the pointer in |j>,
/// evaluated through the collapsed pointer state.
ProbabilitySet joint_probabilities(const JointState &joint);

/// |(<j| (x) <p0|) |Psi'>|^2 evaluated directly on the joint amplitudes,
/// without forming the collapsed pointer state.
double joint_probability(const JointState &joint, PointerLabel label);

/// Bayes' rule: every entry divided by the post-selection probability
/// p_plus + p_minus. Throws ZeroPostSelection if that is below 1e-300.
ProbabilitySet conditional_probabilities(const ProbabilitySet &probs);

/// <phi|phi>, the probability that post-selection on |p0> succeeds.
double postselection_probability(const JointState &joint);

/// Same quantity via the reduced system density matrix:
/// <p0| Tr_P[|Psi'><Psi'|] |p0>. O(d^2); used as an independent check.
double postselection_probability_traced(const JointState &joint);

/// Convenience: exact joint probabilities for every position x of psi.
std::vector<ProbabilitySet> exact_probability_sets(const SystemState &psi, const CouplingStrength &strength);

}  // namespace dwm

#endif
