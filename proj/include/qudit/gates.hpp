// Copyright 2026 The qudit-swap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qudit/core.hpp"

namespace qudit {

enum class GateKind {
    QFT,
    IQFT,
    CZd,
    CZdDag,
    CXTilde,
    CXd,
    CXdDag,
    Xd,
    SWAP,
    Identity,
};

inline constexpr std::array<GateKind, 10> kAllGateKinds = {
    GateKind::QFT,    GateKind::IQFT, GateKind::CZd,  GateKind::CZdDag,
    GateKind::CXTilde, GateKind::CXd, GateKind::CXdDag, GateKind::Xd,
    GateKind::SWAP,   GateKind::Identity,
};

/// Number of qudits the gate acts on.
[[nodiscard]] constexpr std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::QFT:
    case GateKind::IQFT:
    case GateKind::Xd:
    case GateKind::Identity:
        return 1;
    default:
        return 2;
    }
}

[[nodiscard]] constexpr bool is_permutation(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CXTilde:
    case GateKind::CXd:
    case GateKind::CXdDag:
    case GateKind::Xd:
    case GateKind::SWAP:
    case GateKind::Identity:
        return true;
    default:
        return false;
    }
}

/// Text-format mnemonic.
[[nodiscard]] constexpr std::string_view mnemonic(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::QFT:
        return "QFT";
    case GateKind::IQFT:
        return "IQFT";
    case GateKind::CZd:
        return "CZ";
    case GateKind::CZdDag:
        return "CZD";
    case GateKind::CXTilde:
        return "CXT";
    case GateKind::CXd:
        return "CX";
    case GateKind::CXdDag:
        return "CXD";
    case GateKind::Xd:
        return "X";
    case GateKind::SWAP:
        return "SWAP";
    case GateKind::Identity:
        return "ID";
    }
    return "?";
}

[[nodiscard]] constexpr std::optional<GateKind>
kind_from_mnemonic(std::string_view name) noexcept {
    for (const auto kind : kAllGateKinds) {
        if (mnemonic(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

namespace detail {

/// e^{i 2 pi r / d} with r reduced mod d. Quarter turns are exact, and
/// unit_phase(-r) is the exact conjugate of unit_phase(r).
[[nodiscard]] inline Amplitude unit_phase(std::int64_t r, Dimension d) {
    r = mod_d(r, d);
    const std::int64_t dv = d.value();
    if (2 * r > dv) {
        return std::conj(unit_phase(dv - r, d));
    }
    if (r == 0) {
        return {1.0, 0.0};
    }
    if (4 * r == dv) {
        return {0.0, 1.0};
    }
    if (2 * r == dv) {
        return {-1.0, 0.0};
    }
    if (4 * r == 3 * dv) {
        return {0.0, -1.0};
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(dv);
    return {std::cos(angle), std::sin(angle)};
}

template <typename Map>
[[nodiscard]] GateMatrix two_qudit_permutation(Dimension d, Map &&map) {
    const std::size_t dd = d.size();
    std::vector<std::size_t> perm(hilbert_dim(d, 2));
    for (std::int64_t x = 0; x < d.value(); ++x) {
        for (std::int64_t y = 0; y < d.value(); ++y) {
            const auto [xo, yo] = map(x, y);
            perm[static_cast<std::size_t>(x) * dd + static_cast<std::size_t>(y)] =
                static_cast<std::size_t>(xo) * dd + static_cast<std::size_t>(yo);
        }
    }
    return GateMatrix::permutation(std::move(perm));
}

[[nodiscard]] inline GateMatrix controlled_phase(Dimension d, int sign) {
    const std::size_t n = hilbert_dim(d, 2);
    std::vector<Amplitude> entries(n * n);
    for (std::int64_t x = 0; x < d.value(); ++x) {
        for (std::int64_t y = 0; y < d.value(); ++y) {
            const auto idx = static_cast<std::size_t>(x * d.value() + y);
            entries[idx * n + idx] = unit_phase(sign * mod_d(x * y, d), d);
        }
    }
    return GateMatrix::dense(n, std::move(entries));
}

[[nodiscard]] inline GateMatrix fourier(Dimension d, int sign) {
    const std::size_t n = d.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> entries(n * n);
    for (std::int64_t k = 0; k < d.value(); ++k) {
        for (std::int64_t x = 0; x < d.value(); ++x) {
            entries[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(x)] =
                scale * unit_phase(sign * mod_d(x * k, d), d);
        }
    }
    return GateMatrix::dense(n, std::move(entries));
}

} // namespace detail

/// Quantum Fourier transform: entry (k, x) = e^{+i 2 pi x k / d} / sqrt(d).
[[nodiscard]] inline GateMatrix qft(Dimension d) { return detail::fourier(d, +1); }

/// Inverse QFT, the conjugate transpose of qft(d).
[[nodiscard]] inline GateMatrix iqft(Dimension d) { return detail::fourier(d, -1); }

/// |x>|y> -> e^{i 2 pi x y / d} |x>|y>.
[[nodiscard]] inline GateMatrix cz_d(Dimension d) {
    return detail::controlled_phase(d, +1);
}

/// |x>|y> -> e^{-i 2 pi x y / d} |x>|y>.
[[nodiscard]] inline GateMatrix cz_d_dag(Dimension d) {
    return detail::controlled_phase(d, -1);
}

/// |x>|y> -> |x>|-x-y mod d>. Self-inverse; the CNOT at d = 2.
[[nodiscard]] inline GateMatrix cx_tilde(Dimension d) {
    return detail::two_qudit_permutation(d, [d](std::int64_t x, std::int64_t y) {
        return std::pair{x, mod_d(-x - y, d)};
    });
}

/// Controlled modular adder |x>|y> -> |x>|x+y>.
[[nodiscard]] inline GateMatrix cx_d(Dimension d) {
    return detail::two_qudit_permutation(d, [d](std::int64_t x, std::int64_t y) {
        return std::pair{x, mod_d(x + y, d)};
    });
}

/// Controlled modular subtractor |x>|y> -> |x>|y-x>.
[[nodiscard]] inline GateMatrix cx_d_dag(Dimension d) {
    return detail::two_qudit_permutation(d, [d](std::int64_t x, std::int64_t y) {
        return std::pair{x, mod_d(y - x, d)};
    });
}

/// Modular complement |x> -> |-x mod d>. |0> is fixed, and at d = 2 this is
/// the identity, not the qubit NOT.
[[nodiscard]] inline GateMatrix x_d(Dimension d) {
    std::vector<std::size_t> perm(d.size());
    for (std::int64_t x = 0; x < d.value(); ++x) {
        perm[static_cast<std::size_t>(x)] = static_cast<std::size_t>(mod_d(-x, d));
    }
    return GateMatrix::permutation(std::move(perm));
}

/// Reference SWAP |x>|y> -> |y>|x>.
[[nodiscard]] inline GateMatrix swap_ref(Dimension d) {
    return detail::two_qudit_permutation(
        d, [](std::int64_t x, std::int64_t y) { return std::pair{y, x}; });
}

/// Canonical matrix of a gate: first label digit is the control.
[[nodiscard]] inline GateMatrix make_gate(GateKind kind, Dimension d) {
    switch (kind) {
    case GateKind::QFT:
        return qft(d);
    case GateKind::IQFT:
        return iqft(d);
    case GateKind::CZd:
        return cz_d(d);
    case GateKind::CZdDag:
        return cz_d_dag(d);
    case GateKind::CXTilde:
        return cx_tilde(d);
    case GateKind::CXd:
        return cx_d(d);
    case GateKind::CXdDag:
        return cx_d_dag(d);
    case GateKind::Xd:
        return x_d(d);
    case GateKind::SWAP:
        return swap_ref(d);
    case GateKind::Identity:
        return GateMatrix::identity(d.size());
    }
    throw QuditError("unknown gate kind");
}

} // namespace qudit
