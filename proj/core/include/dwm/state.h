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

#ifndef DWM_STATE_H
#define DWM_STATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace dwm {

using Complex = std::complex<double>;

/// Normalized pure state of the d-dimensional system, d >= 2.
///
/// Instances can only be obtained through `make_system_state` or the basis
/// constructors below, so every SystemState has unit L2 norm.
class SystemState {
   public:
    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t x) const {
        return amplitudes_[x];
    }
    /// Sum of all amplitudes (the psi-tilde constant of the reconstruction).
    Complex amplitude_sum() const noexcept;

    bool operator==(const SystemState &) const = default;

   private:
    explicit SystemState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    }
    friend SystemState make_system_state(std::span<const Complex> raw);
    friend SystemState momentum_zero_state(std::size_t dim);
    friend std::vector<SystemState> fourier_basis(std::size_t dim);

    std::vector<Complex> amplitudes_;
};

enum class PointerLabel { Plus, Minus, L, R, Zero, One };

inline constexpr std::array<PointerLabel, 6> kAllPointerLabels = {
    PointerLabel::Plus, PointerLabel::Minus, PointerLabel::L,
    PointerLabel::R,    PointerLabel::Zero,  PointerLabel::One,
};

std::string_view pointer_label_name(PointerLabel label);
/// Accepts "plus", "minus", "L", "R", "zero", "one" (and "+", "-", "0", "1").
PointerLabel parse_pointer_label(std::string_view text);

/// Unit-norm pointer qubit state.
struct PointerState {
    std::array<Complex, 2> amplitudes;
};

/// Joint system (x) pointer amplitudes, indexed 2*x + p (pointer fastest).
class JointState {
   public:
    /// Builds psi (x) pointer.
    static JointState product(const SystemState &psi, const PointerState &pointer);
    /// Wraps raw amplitudes; the length must be 2d with d >= 2 and the norm must be 1.
    static JointState from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t dim() const noexcept {
        return amplitudes_.size() / 2;
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &at(std::size_t x, std::size_t p) const {
        return amplitudes_[2 * x + p];
    }

    /// Applies the real pointer rotation [[c, -s], [s, c]] to the pointer
    /// block of position x only. Throws IndexOutOfRange if x >= dim().
    JointState rotate_pointer_at(std::size_t x, double cos_t, double sin_t) const;

   private:
    explicit JointState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    }
    std::vector<Complex> amplitudes_;
};

/// Sub-normalized pointer amplitudes left after projecting the system onto |p0>.
struct UnnormalizedPointerState {
    std::array<Complex, 2> amplitudes;

    double squared_norm() const noexcept {
        return std::norm(amplitudes[0]) + std::norm(amplitudes[1]);
    }
};

/// Normalizes `raw`. Throws DimensionTooSmall if d < 2 and ZeroVector if the norm vanishes.
SystemState make_system_state(std::span<const Complex> raw);
inline SystemState make_system_state(std::initializer_list<Complex> raw) {
    return make_system_state(std::span<const Complex>(raw.begin(), raw.size()));
}

/// Zero transverse momentum state: every amplitude equal to 1/sqrt(d).
SystemState momentum_zero_state(std::size_t dim);

/// Discrete Fourier basis; state k has amplitudes exp(2 pi i k x / d) / sqrt(d).
std::vector<SystemState> fourier_basis(std::size_t dim);

PointerState pointer_basis(PointerLabel label);
inline PointerState pointer_basis(std::string_view label) {
    return pointer_basis(parse_pointer_label(label));
}

/// sum_i conj(a_i) b_i. Throws DimensionMismatch on unequal lengths.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
Complex inner(const SystemState &a, const SystemState &b);
Complex inner(const PointerState &a, const PointerState &b);
Complex inner(const PointerState &a, const UnnormalizedPointerState &b);

double squared_norm(std::span<const Complex> v);

}  // namespace dwm

#endif
