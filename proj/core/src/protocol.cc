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

#include "dwm/protocol.h"

#include <cmath>
#include <numbers>
#include <string>

#include "dwm/errors.h"

namespace dwm {

namespace {

constexpr double kDegenerateAngleTol = 1e-9;
constexpr double kZeroPostSelection = 1e-300;

}  // namespace

CouplingStrength::CouplingStrength(double theta) : theta_(theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw Error(ErrorCode::InvalidAngle, "coupling angle must lie in [0, pi], got " + std::to_string(theta));
    }
    cos_ = std::cos(theta);
    sin_ = std::sin(theta);
}

void CouplingStrength::require_reconstructible() const {
    if (sin_ <= kDegenerateAngleTol || std::abs(theta_ - std::numbers::pi) <= kDegenerateAngleTol) {
        throw Error(ErrorCode::DegenerateAngle,
                    "theta=" + std::to_string(theta_) + " has sin(theta) ~ 0; the amplitude cannot be recovered");
    }
}

double ProbabilitySet::get(PointerLabel label) const {
    return const_cast<ProbabilitySet *>(this)->get(label);
}

double &ProbabilitySet::get(PointerLabel label) {
    switch (label) {
        case PointerLabel::Plus:
            return p_plus;
        case PointerLabel::Minus:
            return p_minus;
        case PointerLabel::L:
            return p_L;
        case PointerLabel::R:
            return p_R;
        case PointerLabel::Zero:
            return p_zero;
        case PointerLabel::One:
            return p_one;
    }
    throw Error(ErrorCode::UnknownLabel, "unknown pointer label");
}

JointState apply_coupling(const SystemState &psi, std::size_t x, const CouplingStrength &strength) {
    if (x >= psi.dim()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "position " + std::to_string(x) + " out of range for d=" + std::to_string(psi.dim()));
    }
    return JointState::product(psi, pointer_basis(PointerLabel::Zero))
        .rotate_pointer_at(x, strength.cos(), strength.sin());
}

UnnormalizedPointerState pointer_collapse(const JointState &joint) {
    Complex phi0{0.0, 0.0};
    Complex phi1{0.0, 0.0};
    for (std::size_t x = 0; x < joint.dim(); ++x) {
        phi0 += joint.at(x, 0);
        phi1 += joint.at(x, 1);
    }
    double scale = 1.0 / std::sqrt(static_cast<double>(joint.dim()));
    return {{phi0 * scale, phi1 * scale}};
}

ProbabilitySet probabilities_from_pointer(const UnnormalizedPointerState &phi) {
    ProbabilitySet out;
    for (PointerLabel label : kAllPointerLabels) {
        out.get(label) = std::norm(inner(pointer_basis(label), phi));
    }
    return out;
}

ProbabilitySet joint_probabilities(const JointState &joint) {
    return probabilities_from_pointer(pointer_collapse(joint));
}

double joint_probability(const JointState &joint, PointerLabel label) {
    // Bra <j| (x) <p0| has components conj(j_p) / sqrt(d) at index (x, p).
    const PointerState j = pointer_basis(label);
    const double scale = 1.0 / std::sqrt(static_cast<double>(joint.dim()));
    const Complex c0 = std::conj(j.amplitudes[0]) * scale;
    const Complex c1 = std::conj(j.amplitudes[1]) * scale;
    Complex amplitude{0.0, 0.0};
    for (std::size_t x = 0; x < joint.dim(); ++x) {
        amplitude += c0 * joint.at(x, 0) + c1 * joint.at(x, 1);
    }
    return std::norm(amplitude);
}

ProbabilitySet conditional_probabilities(const ProbabilitySet &probs) {
    double post = probs.p_plus + probs.p_minus;
    if (!(post >= kZeroPostSelection)) {
        throw Error(ErrorCode::ZeroPostSelection, "post-selection probability is zero");
    }
    ProbabilitySet out;
    for (PointerLabel label : kAllPointerLabels) {
        out.get(label) = probs.get(label) / post;
    }
    return out;
}

double postselection_probability(const JointState &joint) {
    return pointer_collapse(joint).squared_norm();
}

double postselection_probability_traced(const JointState &joint) {
    // rho[x][x'] = sum_p Psi[x,p] conj(Psi[x',p]); <p0|rho|p0> = (1/d) sum_{x,x'} rho[x][x'].
    const std::size_t d = joint.dim();
    Complex total{0.0, 0.0};
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            total += joint.at(x, 0) * std::conj(joint.at(y, 0)) + joint.at(x, 1) * std::conj(joint.at(y, 1));
        }
    }
    return total.real() / static_cast<double>(d);
}

std::vector<ProbabilitySet> exact_probability_sets(const SystemState &psi, const CouplingStrength &strength) {
    std::vector<ProbabilitySet> out;
    out.reserve(psi.dim());
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        out.push_back(joint_probabilities(apply_coupling(psi, x, strength)));
    }
    return out;
}

}  // namespace dwm
