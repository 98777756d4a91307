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

/**
 * @file verify.hpp
 * Numerical checks of the SWAP construction and the C X~ decomposition.
 *
 * Every check returns a VerificationReport holding the largest absolute
 * deviation it saw. Checks that only touch permutation gates compare exact
 * tables and use tolerance 0.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/core.hpp"
#include "qudit/gates.hpp"

namespace qudit {

inline constexpr double kDenseTolerance = 1e-10;
inline constexpr double kElementarySwapTolerance = 1e-9;
inline constexpr double kDeltaSumToleranceScale = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultTrials = 100;

struct VerificationReport {
    std::string identity;
    std::int64_t d = 0;
    double max_dev = 0.0;
    double tolerance = 0.0;
    bool passed = false;

    friend bool operator==(const VerificationReport &,
                           const VerificationReport &) = default;
};

struct VerifyOptions {
    double dense_tolerance = kDenseTolerance;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = kDefaultTrials;
};

[[nodiscard]] inline VerificationReport make_report(std::string identity,
                                                    Dimension d, double max_dev,
                                                    double tolerance) {
    return {std::move(identity), d.value(), max_dev, tolerance,
            max_dev <= tolerance};
}

/// Normalized state with i.i.d. standard normal real and imaginary parts.
template <typename Rng>
[[nodiscard]] StateVector random_state(Dimension d, std::size_t n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Amplitude> amps(hilbert_dim(d, n));
    double norm = 0.0;
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
        norm += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= scale;
    }
    return {d, n, std::move(amps)};
}

/// Two-qudit state with the labels (x, y) -> (y, x) exchanged.
[[nodiscard]] inline StateVector transpose_wires(const StateVector &s) {
    if (s.wires() != 2) {
        throw DimensionMismatch("wire transposition needs a two-qudit state");
    }
    const std::size_t d = s.dim().size();
    std::vector<Amplitude> out(s.size());
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            out[y * d + x] = s[x * d + y];
        }
    }
    return {s.dim(), 2, std::move(out)};
}

/// Both C X~ SWAP circuits against the reference SWAP, exact tables.
[[nodiscard]] inline VerificationReport verify_swap(Dimension d) {
    const GateMatrix target = swap_ref(d);
    const double dev =
        std::max(max_entry_dist(circuit_unitary(swap_circuit(d)), target),
                 max_entry_dist(circuit_unitary(swap_circuit_alt(d)), target));
    return make_report("swap", d, dev, 0.0);
}

/// QFT.CZ.QFT and IQFT.CZ^dagger.IQFT against cx_tilde(d).
[[nodiscard]] inline VerificationReport
verify_decomposition(Dimension d, double tolerance = kDenseTolerance) {
    const GateMatrix target = cx_tilde(d);
    const double dev = std::max(
        max_entry_dist(circuit_unitary(cx_tilde_decomposition(d)), target),
        max_entry_dist(circuit_unitary(cx_tilde_decomposition_alt(d)), target));
    return make_report("decomposition", d, dev, tolerance);
}

/// cx_tilde(d)^2 = I on the permutation tables.
[[nodiscard]] inline VerificationReport verify_self_inverse(Dimension d) {
    const GateMatrix g = cx_tilde(d);
    const double dev =
        max_entry_dist(multiply(g, g), GateMatrix::identity(g.dim()));
    return make_report("self_inverse", d, dev, 0.0);
}

/// (QFT.CZ.QFT)^2 = I through dense arithmetic.
[[nodiscard]] inline VerificationReport
verify_self_inverse_dense(Dimension d, double tolerance = kDenseTolerance) {
    const GateMatrix g = circuit_unitary(cx_tilde_decomposition(d));
    const double dev =
        max_entry_dist(multiply(g, g), GateMatrix::identity(g.dim()));
    return make_report("self_inverse_dense", d, dev, tolerance);
}

/// sum_k e^{i 2 pi k (x+y+l) / d} = d * [x+y+l = 0 mod d] for every triple.
[[nodiscard]] inline VerificationReport verify_delta_sum(Dimension d) {
    const std::int64_t dv = d.value();
    double worst = 0.0;
    for (std::int64_t x = 0; x < dv; ++x) {
        for (std::int64_t y = 0; y < dv; ++y) {
            for (std::int64_t l = 0; l < dv; ++l) {
                // Plain cos/sin here, not the gates' snapped phases.
                const double step = 2.0 * std::numbers::pi *
                                    static_cast<double>(x + y + l) /
                                    static_cast<double>(dv);
                Amplitude sum{};
                for (std::int64_t k = 0; k < dv; ++k) {
                    const double angle = step * static_cast<double>(k);
                    sum += Amplitude{std::cos(angle), std::sin(angle)};
                }
                const double expected =
                    mod_d(x + y + l, d) == 0 ? static_cast<double>(dv) : 0.0;
                worst = std::max(worst, std::abs(sum - expected));
            }
        }
    }
    return make_report("delta_sum", d, worst,
                       kDeltaSumToleranceScale * static_cast<double>(dv));
}

/// The 9-gate QFT/CZ SWAP against the reference SWAP.
[[nodiscard]] inline VerificationReport verify_elementary_swap(Dimension d) {
    const double dev = max_entry_dist(circuit_unitary(elementary_swap_circuit(d)),
                                      swap_ref(d));
    return make_report("elementary_swap", d, dev, kElementarySwapTolerance);
}

/// CX_d / CX_d^dagger / X_d SWAP against the reference SWAP, exact tables.
[[nodiscard]] inline VerificationReport verify_asymmetric_swap(Dimension d) {
    const double dev =
        max_entry_dist(circuit_unitary(asymmetric_swap_circuit(d)), swap_ref(d));
    return make_report("asymmetric_swap", d, dev, 0.0);
}

/// Seeded random |phi>|0> must leave partial_swap_circuit as |0>|phi>.
[[nodiscard]] inline VerificationReport
verify_partial_swap(Dimension d, std::uint64_t seed, std::size_t trials,
                    double tolerance = kDenseTolerance) {
    if (trials == 0) {
        throw QuditError("partial swap check needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    const Circuit circuit = partial_swap_circuit(d);
    const StateVector zero = basis_state(BasisLabel{d, {0}});
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const StateVector phi = random_state(d, 1, rng);
        const StateVector out = simulate(circuit, tensor(phi, zero));
        const StateVector expected = tensor(zero, phi);
        worst = std::max(worst, max_abs_diff(out.amplitudes(), expected.amplitudes()));
    }
    return make_report("partial_swap", d, worst, tolerance);
}

/// How far partial_swap_circuit is from a full SWAP.
[[nodiscard]] inline double partial_swap_full_deviation(Dimension d) {
    return max_entry_dist(circuit_unitary(partial_swap_circuit(d)), swap_ref(d));
}

/// Seeded random (generally entangled) two-qudit states through
/// swap_circuit(d), compared against the wire-transposed amplitudes.
[[nodiscard]] inline VerificationReport
random_state_check(Dimension d, std::uint64_t seed, std::size_t trials,
                   double tolerance = kDenseTolerance) {
    if (trials == 0) {
        throw QuditError("random state check needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    const Circuit circuit = swap_circuit(d);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const StateVector s = random_state(d, 2, rng);
        const StateVector out = simulate(circuit, s);
        worst = std::max(worst, max_abs_diff(out.amplitudes(),
                                             transpose_wires(s).amplitudes()));
    }
    return make_report("random_state_swap", d, worst, tolerance);
}

inline constexpr std::int64_t kMaxVerifyDimension = 64;

/// Every check for every d in [d_min, d_max], ordered by d then check.
[[nodiscard]] inline std::vector<VerificationReport>
verify_all(std::int64_t d_min, std::int64_t d_max, const VerifyOptions &opts = {}) {
    if (d_min < 2 || d_max > kMaxVerifyDimension || d_min > d_max) {
        throw InvalidDimension("verification range must satisfy 2 <= d_min <= "
                               "d_max <= " +
                               std::to_string(kMaxVerifyDimension) + ", got [" +
                               std::to_string(d_min) + ", " +
                               std::to_string(d_max) + "]");
    }
    std::vector<VerificationReport> reports;
    for (std::int64_t dv = d_min; dv <= d_max; ++dv) {
        const Dimension d{dv};
        const double tol = opts.dense_tolerance;
        reports.push_back(verify_swap(d));
        reports.push_back(verify_decomposition(d, tol));
        reports.push_back(verify_self_inverse(d));
        reports.push_back(verify_self_inverse_dense(d, tol));
        reports.push_back(verify_delta_sum(d));
        reports.push_back(verify_elementary_swap(d));
        reports.push_back(verify_asymmetric_swap(d));
        reports.push_back(verify_partial_swap(d, opts.seed, opts.trials, tol));
        reports.push_back(random_state_check(d, opts.seed, opts.trials, tol));
    }
    return reports;
}

} // namespace qudit
