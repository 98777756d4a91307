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

// Test-only reference computations. Nothing here calls into the library's
// gate constructors, embedding, or simulation; the expected values they
// produce come from the defining formulas evaluated the slow, obvious way.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::vector<cplx>; // row-major, side given separately

inline long long mod(long long v, long long d) { return ((v % d) + d) % d; }

/// Dense d^2 x d^2 0/1 matrix of the map (x, y) -> f(x, y).
inline Dense two_qudit_map(int d,
                           const std::function<std::pair<long long, long long>(
                               long long, long long)> &f) {
    const std::size_t n = static_cast<std::size_t>(d) * d;
    Dense m(n * n, 0.0);
    for (long long x = 0; x < d; ++x) {
        for (long long y = 0; y < d; ++y) {
            const auto [xo, yo] = f(x, y);
            const std::size_t col = static_cast<std::size_t>(x * d + y);
            const std::size_t row = static_cast<std::size_t>(xo * d + yo);
            m[row * n + col] = 1.0;
        }
    }
    return m;
}

inline Dense identity(std::size_t n) {
    Dense m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1.0;
    }
    return m;
}

/// e^{i 2 pi x k / d} / sqrt(d) at (k, x), straight from std::exp.
inline Dense qft(int d, int sign = +1) {
    const std::size_t n = static_cast<std::size_t>(d);
    Dense m(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t x = 0; x < n; ++x) {
            const double angle = sign * 2.0 * std::numbers::pi *
                                 static_cast<double>(x * k) / d;
            m[k * n + x] = std::exp(cplx{0.0, angle}) / std::sqrt(double(d));
        }
    }
    return m;
}

inline Dense controlled_phase(int d, int sign = +1) {
    const std::size_t n = static_cast<std::size_t>(d) * d;
    Dense m(n * n, 0.0);
    for (long long x = 0; x < d; ++x) {
        for (long long y = 0; y < d; ++y) {
            const std::size_t i = static_cast<std::size_t>(x * d + y);
            const double angle =
                sign * 2.0 * std::numbers::pi * static_cast<double>(x * y) / d;
            m[i * n + i] = std::exp(cplx{0.0, angle});
        }
    }
    return m;
}

inline Dense matmul(const Dense &a, const Dense &b, std::size_t n) {
    Dense out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
    return out;
}

inline Dense kron(const Dense &a, std::size_t na, const Dense &b, std::size_t nb) {
    const std::size_t n = na * nb;
    Dense out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = a[(i / nb) * na + (j / nb)] * b[(i % nb) * nb + (j % nb)];
        }
    }
    return out;
}

inline std::vector<cplx> matvec(const Dense &m, const std::vector<cplx> &v) {
    const std::size_t n = v.size();
    std::vector<cplx> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i] += m[i * n + j] * v[j];
        }
    }
    return out;
}

inline double max_diff(const Dense &a, const Dense &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// Classical trace of a permutation-only two-wire circuit on a basis label.
/// Ops are (mnemonic, control wire, target wire); single-wire ops put the wire
/// in the first slot.
struct ClassicalOp {
    std::string name;
    int first;
    int second;
};

inline std::array<long long, 2> trace(const std::vector<ClassicalOp> &ops,
                                      std::array<long long, 2> label, long long d) {
    for (const auto &op : ops) {
        auto &a = label[static_cast<std::size_t>(op.first - 1)];
        if (op.name == "X") {
            a = mod(-a, d);
            continue;
        }
        auto &b = label[static_cast<std::size_t>(op.second - 1)];
        if (op.name == "CXT") {
            b = mod(-a - b, d);
        } else if (op.name == "CX") {
            b = mod(a + b, d);
        } else if (op.name == "CXD") {
            b = mod(b - a, d);
        } else if (op.name == "SWAP") {
            std::swap(a, b);
        }
    }
    return label;
}

} // namespace oracle
