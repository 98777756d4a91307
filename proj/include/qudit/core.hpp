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
 * @file core.hpp
 * Dense complex linear algebra over mixed-radix qudit registers.
 *
 * Conventions used by every other header:
 *  - A register of n qudits of dimension d has d^n basis states. Wire 1 is
 *    the most significant digit, so |x>|y> has flat index x*d + y.
 *  - Matrices act on column vectors: M|j> = sum_i M(i, j)|i>.
 *  - A permutation matrix is stored as a table perm with M(perm[j], j) = 1.
 *    Its dense view has entries that are exactly 0 or 1.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qudit {

using Amplitude = std::complex<double>;

/// Largest register (and matrix side) the dense simulator will build.
inline constexpr std::size_t kMaxHilbertDim = 4096;

class QuditError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public QuditError {
  public:
    using QuditError::QuditError;
};

class InvalidLabel : public QuditError {
  public:
    using QuditError::QuditError;
};

class DimensionMismatch : public QuditError {
  public:
    using QuditError::QuditError;
};

class SizeBudgetExceeded : public QuditError {
  public:
    using QuditError::QuditError;
};

/// Qudit dimension d >= 2.
class Dimension {
  public:
    explicit Dimension(std::int64_t d) : value_(d) {
        if (d < 2) {
            throw InvalidDimension("qudit dimension must be at least 2, got " +
                                   std::to_string(d));
        }
    }
    [[nodiscard]] std::int64_t value() const noexcept { return value_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(value_);
    }
    friend bool operator==(Dimension, Dimension) = default;

  private:
    std::int64_t value_;
};

/// Nonnegative representative of v modulo d.
[[nodiscard]] inline std::int64_t mod_d(std::int64_t v, Dimension d) noexcept {
    const std::int64_t r = v % d.value();
    return r < 0 ? r + d.value() : r;
}

/// d^n, failing when it exceeds the dense size budget.
[[nodiscard]] inline std::size_t hilbert_dim(Dimension d, std::size_t n) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (out > kMaxHilbertDim / d.size()) {
            throw SizeBudgetExceeded("register of " + std::to_string(n) +
                                     " qudits with d=" +
                                     std::to_string(d.value()) +
                                     " exceeds the dense budget of " +
                                     std::to_string(kMaxHilbertDim));
        }
        out *= d.size();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Basis labels
// ---------------------------------------------------------------------------

/// Digits (x1, ..., xn) of a computational basis state, wire 1 first.
struct BasisLabel {
    Dimension d;
    std::vector<std::int64_t> digits;

    [[nodiscard]] std::size_t flat() const {
        std::size_t out = 0;
        for (const auto x : digits) {
            if (x < 0 || x >= d.value()) {
                throw InvalidLabel("basis digit " + std::to_string(x) +
                                   " outside [0, " +
                                   std::to_string(d.value() - 1) + "]");
            }
            out = out * d.size() + static_cast<std::size_t>(x);
        }
        return out;
    }

    static BasisLabel from_flat(Dimension d, std::size_t n, std::size_t flat) {
        BasisLabel label{d, std::vector<std::int64_t>(n, 0)};
        for (std::size_t i = n; i-- > 0;) {
            label.digits[i] = static_cast<std::int64_t>(flat % d.size());
            flat /= d.size();
        }
        if (flat != 0) {
            throw InvalidLabel("flat index out of range for register");
        }
        return label;
    }

    friend bool operator==(const BasisLabel &, const BasisLabel &) = default;
};

// ---------------------------------------------------------------------------
// State vectors
// ---------------------------------------------------------------------------

class StateVector {
  public:
    StateVector(Dimension d, std::size_t n, std::vector<Amplitude> amps)
        : d_(d), n_(n), amps_(std::move(amps)) {
        if (amps_.size() != hilbert_dim(d, n)) {
            throw DimensionMismatch("state has " + std::to_string(amps_.size()) +
                                    " amplitudes, expected " +
                                    std::to_string(hilbert_dim(d, n)));
        }
    }

    static StateVector zeros(Dimension d, std::size_t n) {
        return {d, n, std::vector<Amplitude>(hilbert_dim(d, n))};
    }

    [[nodiscard]] Dimension dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t wires() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Amplitude operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept {
        double acc = 0.0;
        for (const auto &a : amps_) {
            acc += std::norm(a);
        }
        return acc;
    }

  private:
    Dimension d_;
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

[[nodiscard]] inline StateVector basis_state(const BasisLabel &label) {
    auto state = std::vector<Amplitude>(hilbert_dim(label.d, label.digits.size()));
    state[label.flat()] = 1.0;
    return {label.d, label.digits.size(), std::move(state)};
}

/// |a> (x) |b>, with a on the more significant wires.
[[nodiscard]] inline StateVector tensor(const StateVector &a,
                                        const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("tensor product of states with different d");
    }
    std::vector<Amplitude> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return {a.dim(), a.wires() + b.wires(), std::move(out)};
}

[[nodiscard]] inline double max_abs_diff(std::span<const Amplitude> a,
                                         std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vectors of different length");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Gate matrices
// ---------------------------------------------------------------------------

/// Square unitary. Either dense (row-major) or an exact permutation table.
///
/// Permutation-backed matrices keep only the table; entries are produced on
/// demand and are exactly 0 or 1.
class GateMatrix {
  public:
    static GateMatrix dense(std::size_t dim, std::vector<Amplitude> entries) {
        if (entries.size() != dim * dim) {
            throw DimensionMismatch("dense matrix needs dim*dim entries");
        }
        GateMatrix m;
        m.dim_ = dim;
        m.entries_ = std::move(entries);
        return m;
    }

    static GateMatrix permutation(std::vector<std::size_t> perm) {
        std::vector<bool> hit(perm.size(), false);
        for (const auto target : perm) {
            if (target >= perm.size() || hit[target]) {
                throw QuditError("permutation table is not a bijection");
            }
            hit[target] = true;
        }
        GateMatrix m;
        m.dim_ = perm.size();
        m.perm_ = std::move(perm);
        return m;
    }

    static GateMatrix identity(std::size_t dim) {
        std::vector<std::size_t> perm(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            perm[i] = i;
        }
        return permutation(std::move(perm));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool has_perm() const noexcept { return perm_.has_value(); }

    /// Target index per source index. Precondition: has_perm().
    [[nodiscard]] std::span<const std::size_t> perm() const { return *perm_; }

    [[nodiscard]] Amplitude operator()(std::size_t row, std::size_t col) const {
        if (perm_) {
            return (*perm_)[col] == row ? Amplitude{1.0, 0.0}
                                        : Amplitude{0.0, 0.0};
        }
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] std::vector<Amplitude> to_dense() const {
        if (!perm_) {
            return entries_;
        }
        std::vector<Amplitude> out(dim_ * dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            out[(*perm_)[j] * dim_ + j] = 1.0;
        }
        return out;
    }

    /// Same matrix with the permutation table dropped.
    [[nodiscard]] GateMatrix as_dense() const { return dense(dim_, to_dense()); }

  private:
    GateMatrix() = default;

    std::size_t dim_ = 0;
    std::vector<Amplitude> entries_;
    std::optional<std::vector<std::size_t>> perm_;
};

/// a (x) b, a on the more significant digits.
[[nodiscard]] inline GateMatrix kron(const GateMatrix &a, const GateMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    if (a.has_perm() && b.has_perm()) {
        std::vector<std::size_t> perm(n);
        for (std::size_t ja = 0; ja < na; ++ja) {
            for (std::size_t jb = 0; jb < nb; ++jb) {
                perm[ja * nb + jb] = a.perm()[ja] * nb + b.perm()[jb];
            }
        }
        return GateMatrix::permutation(std::move(perm));
    }
    std::vector<Amplitude> out(n * n);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const Amplitude av = a(ra, ca);
            if (av == Amplitude{}) {
                continue;
            }
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    out[(ra * nb + rb) * n + ca * nb + cb] = av * b(rb, cb);
                }
            }
        }
    }
    return GateMatrix::dense(n, std::move(out));
}

/// Matrix product a * b (b acts first).
[[nodiscard]] inline GateMatrix multiply(const GateMatrix &a,
                                         const GateMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix product of different sizes");
    }
    const std::size_t n = a.dim();
    if (a.has_perm() && b.has_perm()) {
        std::vector<std::size_t> perm(n);
        for (std::size_t j = 0; j < n; ++j) {
            perm[j] = a.perm()[b.perm()[j]];
        }
        return GateMatrix::permutation(std::move(perm));
    }
    std::vector<Amplitude> out(n * n);
    if (a.has_perm()) {
        // Row k of b becomes row perm[k].
        const auto bd = b.to_dense();
        for (std::size_t k = 0; k < n; ++k) {
            std::copy_n(bd.begin() + static_cast<std::ptrdiff_t>(k * n), n,
                        out.begin() +
                            static_cast<std::ptrdiff_t>(a.perm()[k] * n));
        }
        return GateMatrix::dense(n, std::move(out));
    }
    if (b.has_perm()) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                out[r * n + j] = a(r, b.perm()[j]);
            }
        }
        return GateMatrix::dense(n, std::move(out));
    }
    // Embedded gates are mostly zeros; skipping them keeps d=32 sweeps cheap.
    // Plain real arithmetic avoids the NaN-recovery path of complex operator*.
    const auto bd = b.to_dense();
    for (std::size_t r = 0; r < n; ++r) {
        Amplitude *row = out.data() + r * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Amplitude av = a(r, k);
            if (av == Amplitude{}) {
                continue;
            }
            const double ar = av.real();
            const double ai = av.imag();
            const Amplitude *brow = bd.data() + k * n;
            for (std::size_t c = 0; c < n; ++c) {
                const double br = brow[c].real();
                const double bi = brow[c].imag();
                row[c] += Amplitude{ar * br - ai * bi, ar * bi + ai * br};
            }
        }
    }
    return GateMatrix::dense(n, std::move(out));
}

/// Conjugate transpose.
[[nodiscard]] inline GateMatrix adjoint(const GateMatrix &m) {
    const std::size_t n = m.dim();
    if (m.has_perm()) {
        std::vector<std::size_t> inv(n);
        for (std::size_t j = 0; j < n; ++j) {
            inv[m.perm()[j]] = j;
        }
        return GateMatrix::permutation(std::move(inv));
    }
    std::vector<Amplitude> out(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out[c * n + r] = std::conj(m(r, c));
        }
    }
    return GateMatrix::dense(n, std::move(out));
}

/// Matrix-vector product through the dense entries, ignoring any permutation.
[[nodiscard]] inline StateVector apply_dense(const GateMatrix &m,
                                             const StateVector &s) {
    if (m.dim() != s.size()) {
        throw DimensionMismatch("matrix of side " + std::to_string(m.dim()) +
                                " applied to state of size " +
                                std::to_string(s.size()));
    }
    std::vector<Amplitude> out(s.size());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Amplitude acc{};
        for (std::size_t c = 0; c < m.dim(); ++c) {
            acc += m(r, c) * s[c];
        }
        out[r] = acc;
    }
    return {s.dim(), s.wires(), std::move(out)};
}

[[nodiscard]] inline StateVector apply(const GateMatrix &m,
                                       const StateVector &s) {
    if (!m.has_perm()) {
        return apply_dense(m, s);
    }
    if (m.dim() != s.size()) {
        throw DimensionMismatch("matrix of side " + std::to_string(m.dim()) +
                                " applied to state of size " +
                                std::to_string(s.size()));
    }
    std::vector<Amplitude> out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        out[m.perm()[j]] = s[j];
    }
    return {s.dim(), s.wires(), std::move(out)};
}

/// max |a_jk - b_jk|. Exact comparison, no global-phase freedom.
[[nodiscard]] inline double max_entry_dist(const GateMatrix &a,
                                           const GateMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("comparing matrices of side " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
    if (a.has_perm() && b.has_perm()) {
        return std::equal(a.perm().begin(), a.perm().end(), b.perm().begin())
                   ? 0.0
                   : 1.0;
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

/// max_entry_dist(M^dagger M, I).
[[nodiscard]] inline double unitarity_deviation(const GateMatrix &m) {
    return max_entry_dist(multiply(adjoint(m), m), GateMatrix::identity(m.dim()));
}

} // namespace qudit
