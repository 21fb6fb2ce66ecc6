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

#include "dwm/state.h"

#include <cmath>
#include <numbers>
#include <string>

#include "dwm/errors.h"

namespace dwm {

namespace {

void require_dim(std::size_t dim) {
    if (dim < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "dimension must be >= 2, got " + std::to_string(dim));
    }
}

}  // namespace

Complex SystemState::amplitude_sum() const noexcept {
    Complex total{0.0, 0.0};
    for (const auto &a : amplitudes_) {
        total += a;
    }
    return total;
}

double squared_norm(std::span<const Complex> v) {
    double total = 0.0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

SystemState make_system_state(std::span<const Complex> raw) {
    require_dim(raw.size());
    double norm = std::sqrt(squared_norm(raw));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::ZeroVector, "cannot normalize a zero (or non-finite) amplitude vector");
    }
    std::vector<Complex> amplitudes(raw.begin(), raw.end());
    for (auto &a : amplitudes) {
        a /= norm;
    }
    return SystemState(std::move(amplitudes));
}

SystemState momentum_zero_state(std::size_t dim) {
    require_dim(dim);
    return SystemState(std::vector<Complex>(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0}));
}

std::vector<SystemState> fourier_basis(std::size_t dim) {
    require_dim(dim);
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    // Twiddle table indexed by (k * x) mod d keeps every phase argument in [0, 2 pi).
    std::vector<Complex> twiddle(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(dim);
        twiddle[m] = std::polar(scale, angle);
    }
    std::vector<SystemState> basis;
    basis.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Complex> amplitudes(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            amplitudes[x] = twiddle[(k * x) % dim];
        }
        basis.push_back(SystemState(std::move(amplitudes)));
    }
    return basis;
}

std::string_view pointer_label_name(PointerLabel label) {
    switch (label) {
        case PointerLabel::Plus:
            return "plus";
        case PointerLabel::Minus:
            return "minus";
        case PointerLabel::L:
            return "L";
        case PointerLabel::R:
            return "R";
        case PointerLabel::Zero:
            return "zero";
        case PointerLabel::One:
            return "one";
    }
    return "?";
}

PointerLabel parse_pointer_label(std::string_view text) {
    if (text == "plus" || text == "+") {
        return PointerLabel::Plus;
    }
    if (text == "minus" || text == "-") {
        return PointerLabel::Minus;
    }
    if (text == "L") {
        return PointerLabel::L;
    }
    if (text == "R") {
        return PointerLabel::R;
    }
    if (text == "zero" || text == "0") {
        return PointerLabel::Zero;
    }
    if (text == "one" || text == "1") {
        return PointerLabel::One;
    }
    throw Error(ErrorCode::UnknownLabel, "unknown pointer label '" + std::string(text) + "'");
}

PointerState pointer_basis(PointerLabel label) {
    const double h = std::numbers::sqrt2 / 2.0;
    switch (label) {
        case PointerLabel::Plus:
            return {{Complex{h, 0.0}, Complex{h, 0.0}}};
        case PointerLabel::Minus:
            return {{Complex{h, 0.0}, Complex{-h, 0.0}}};
        case PointerLabel::L:
            return {{Complex{h, 0.0}, Complex{0.0, h}}};
        case PointerLabel::R:
            return {{Complex{h, 0.0}, Complex{0.0, -h}}};
        case PointerLabel::Zero:
            return {{Complex{1.0, 0.0}, Complex{0.0, 0.0}}};
        case PointerLabel::One:
            return {{Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
    }
    throw Error(ErrorCode::UnknownLabel, "unknown pointer label");
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "inner product of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

Complex inner(const SystemState &a, const SystemState &b) {
    return inner(a.amplitudes(), b.amplitudes());
}

Complex inner(const PointerState &a, const PointerState &b) {
    return inner(std::span<const Complex>(a.amplitudes), std::span<const Complex>(b.amplitudes));
}

Complex inner(const PointerState &a, const UnnormalizedPointerState &b) {
    return inner(std::span<const Complex>(a.amplitudes), std::span<const Complex>(b.amplitudes));
}

JointState JointState::product(const SystemState &psi, const PointerState &pointer) {
    std::vector<Complex> amplitudes(2 * psi.dim());
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        amplitudes[2 * x] = psi[x] * pointer.amplitudes[0];
        amplitudes[2 * x + 1] = psi[x] * pointer.amplitudes[1];
    }
    return JointState(std::move(amplitudes));
}

JointState JointState::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.size() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch,
                    "joint state length must be 2d, got " + std::to_string(amplitudes.size()));
    }
    require_dim(amplitudes.size() / 2);
    double n2 = squared_norm(amplitudes);
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "joint state must have unit norm, squared norm is " + std::to_string(n2));
    }
    return JointState(std::move(amplitudes));
}

JointState JointState::rotate_pointer_at(std::size_t x, double cos_t, double sin_t) const {
    if (x >= dim()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "position " + std::to_string(x) + " out of range for d=" + std::to_string(dim()));
    }
    std::vector<Complex> out = amplitudes_;
    const Complex a0 = out[2 * x];
    const Complex a1 = out[2 * x + 1];
    out[2 * x] = cos_t * a0 - sin_t * a1;
    out[2 * x + 1] = sin_t * a0 + cos_t * a1;
    return JointState(std::move(out));
}

}  // namespace dwm
