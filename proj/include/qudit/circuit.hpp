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
 * @file circuit.hpp
 * Gate sequences over an n-qudit register and the circuits built from them.
 *
 * Wires are 1-based with wire 1 on top (most significant digit). A two-qudit
 * op lists its control first. Ops run in list order, so the unitary of
 * [A, B, C] is C * B * A.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qudit/core.hpp"
#include "qudit/gates.hpp"

namespace qudit {

class WireError : public QuditError {
  public:
    using QuditError::QuditError;
};

struct GateOp {
    GateKind kind;
    std::vector<std::size_t> wires;

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Checks arity and that wires are distinct and within [1, n].
inline void validate_op(const GateOp &op, std::size_t n) {
    if (op.wires.size() != arity(op.kind)) {
        throw WireError(std::string(mnemonic(op.kind)) + " takes " +
                        std::to_string(arity(op.kind)) + " wire(s), got " +
                        std::to_string(op.wires.size()));
    }
    for (std::size_t i = 0; i < op.wires.size(); ++i) {
        if (op.wires[i] < 1 || op.wires[i] > n) {
            throw WireError("wire " + std::to_string(op.wires[i]) +
                            " outside [1, " + std::to_string(n) + "]");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (op.wires[i] == op.wires[j]) {
                throw WireError("wire " + std::to_string(op.wires[i]) +
                                " used twice in one gate");
            }
        }
    }
}

class Circuit {
  public:
    Circuit(Dimension d, std::size_t n) : d_(d), n_(n) {
        if (n == 0) {
            throw WireError("circuit needs at least one wire");
        }
    }

    /// Appends kind on the given wires, control first.
    Circuit &append(GateKind kind, std::vector<std::size_t> wires) {
        GateOp op{kind, std::move(wires)};
        validate_op(op, n_);
        ops_.push_back(std::move(op));
        return *this;
    }

    Circuit &append(const GateOp &op) { return append(op.kind, op.wires); }

    [[nodiscard]] Dimension dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t wires() const noexcept { return n_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept { return ops_; }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    Dimension d_;
    std::size_t n_;
    std::vector<GateOp> ops_;
};

namespace detail {

/// Index arithmetic for a gate acting on a subset of wires.
class WireMap {
  public:
    WireMap(Dimension d, std::size_t n, const std::vector<std::size_t> &wires)
        : d_(d.size()) {
        std::size_t weight = 1;
        std::vector<std::size_t> weights(n);
        for (std::size_t w = n; w-- > 0;) {
            weights[w] = weight;
            weight *= d_;
        }
        for (const auto wire : wires) {
            strides_.push_back(weights[wire - 1]);
        }
    }

    /// Gate-local index of the op's wires inside a register index.
    [[nodiscard]] std::size_t local(std::size_t full) const {
        std::size_t out = 0;
        for (const auto stride : strides_) {
            out = out * d_ + (full / stride) % d_;
        }
        return out;
    }

    /// Register index with the op's wires overwritten by a gate-local index.
    [[nodiscard]] std::size_t replace(std::size_t full, std::size_t sub) const {
        for (std::size_t i = strides_.size(); i-- > 0;) {
            const std::size_t stride = strides_[i];
            const std::size_t old = (full / stride) % d_;
            full = full - old * stride + (sub % d_) * stride;
            sub /= d_;
        }
        return full;
    }

    [[nodiscard]] std::size_t local_dim() const {
        std::size_t out = 1;
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            out *= d_;
        }
        return out;
    }

  private:
    std::size_t d_;
    std::vector<std::size_t> strides_;
};

} // namespace detail

/// Full-register matrix of op on n wires. Permutation gates stay exact tables.
[[nodiscard]] inline GateMatrix embed(const GateOp &op, Dimension d,
                                      std::size_t n) {
    validate_op(op, n);
    const std::size_t full = hilbert_dim(d, n);
    const GateMatrix gate = make_gate(op.kind, d);
    const detail::WireMap map(d, n, op.wires);

    if (gate.has_perm()) {
        std::vector<std::size_t> perm(full);
        for (std::size_t j = 0; j < full; ++j) {
            perm[j] = map.replace(j, gate.perm()[map.local(j)]);
        }
        return GateMatrix::permutation(std::move(perm));
    }
    const std::size_t local = map.local_dim();
    std::vector<Amplitude> entries(full * full);
    for (std::size_t c = 0; c < full; ++c) {
        const std::size_t sub_c = map.local(c);
        for (std::size_t sub_r = 0; sub_r < local; ++sub_r) {
            entries[map.replace(c, sub_r) * full + c] = gate(sub_r, sub_c);
        }
    }
    return GateMatrix::dense(full, std::move(entries));
}

/// Product of the embedded ops, first op rightmost.
[[nodiscard]] inline GateMatrix circuit_unitary(const Circuit &c) {
    GateMatrix u = GateMatrix::identity(hilbert_dim(c.dim(), c.wires()));
    for (const auto &op : c.ops()) {
        u = multiply(embed(op, c.dim(), c.wires()), u);
    }
    return u;
}

/// Runs the circuit on a state, one local gate application per op. Never
/// builds a full-register matrix.
[[nodiscard]] inline StateVector simulate(const Circuit &c, const StateVector &s) {
    if (s.dim() != c.dim() || s.wires() != c.wires()) {
        throw DimensionMismatch("state over (d=" + std::to_string(s.dim().value()) +
                                ", n=" + std::to_string(s.wires()) +
                                ") does not match circuit over (d=" +
                                std::to_string(c.dim().value()) + ", n=" +
                                std::to_string(c.wires()) + ")");
    }
    std::vector<Amplitude> cur(s.amplitudes().begin(), s.amplitudes().end());
    std::vector<Amplitude> next(cur.size());
    for (const auto &op : c.ops()) {
        const GateMatrix gate = make_gate(op.kind, c.dim());
        const detail::WireMap map(c.dim(), c.wires(), op.wires);
        std::fill(next.begin(), next.end(), Amplitude{});
        if (gate.has_perm()) {
            for (std::size_t j = 0; j < cur.size(); ++j) {
                next[map.replace(j, gate.perm()[map.local(j)])] = cur[j];
            }
        } else {
            const std::size_t local = map.local_dim();
            for (std::size_t j = 0; j < cur.size(); ++j) {
                if (cur[j] == Amplitude{}) {
                    continue;
                }
                const std::size_t sub_c = map.local(j);
                for (std::size_t sub_r = 0; sub_r < local; ++sub_r) {
                    next[map.replace(j, sub_r)] += gate(sub_r, sub_c) * cur[j];
                }
            }
        }
        std::swap(cur, next);
    }
    return {s.dim(), s.wires(), std::move(cur)};
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Three C X~ gates: controls on wires 2, 1, 2.
[[nodiscard]] inline Circuit swap_circuit(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::CXTilde, {2, 1})
        .append(GateKind::CXTilde, {1, 2})
        .append(GateKind::CXTilde, {2, 1});
    return c;
}

/// The upside-down SWAP: controls on wires 1, 2, 1.
[[nodiscard]] inline Circuit swap_circuit_alt(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::CXTilde, {1, 2})
        .append(GateKind::CXTilde, {2, 1})
        .append(GateKind::CXTilde, {1, 2});
    return c;
}

/// C X~ = QFT_2 . CZ_d . QFT_2.
[[nodiscard]] inline Circuit cx_tilde_decomposition(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::QFT, {2})
        .append(GateKind::CZd, {1, 2})
        .append(GateKind::QFT, {2});
    return c;
}

/// C X~ = IQFT_2 . CZ_d^dagger . IQFT_2, the adjoint of the QFT form.
[[nodiscard]] inline Circuit cx_tilde_decomposition_alt(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::IQFT, {2})
        .append(GateKind::CZdDag, {1, 2})
        .append(GateKind::IQFT, {2});
    return c;
}

/// SWAP from the modular adder family:
/// (x,y) -> (x,x+y) -> (-y,x+y) -> (-y,x) -> (y,x).
[[nodiscard]] inline Circuit asymmetric_swap_circuit(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::CXd, {1, 2})
        .append(GateKind::CXdDag, {2, 1})
        .append(GateKind::CXd, {1, 2})
        .append(GateKind::Xd, {1});
    return c;
}

/// |phi>|0> -> |0>|phi>. Not a SWAP on general inputs.
[[nodiscard]] inline Circuit partial_swap_circuit(Dimension d) {
    Circuit c(d, 2);
    c.append(GateKind::CXd, {1, 2}).append(GateKind::CXdDag, {2, 1});
    return c;
}

/// Rewrites every C X~ into QFT(target), CZ(control, target), QFT(target).
[[nodiscard]] inline Circuit expand_cx_tilde(const Circuit &in) {
    Circuit out(in.dim(), in.wires());
    for (const auto &op : in.ops()) {
        if (op.kind != GateKind::CXTilde) {
            out.append(op);
            continue;
        }
        const std::size_t control = op.wires[0];
        const std::size_t target = op.wires[1];
        out.append(GateKind::QFT, {target})
            .append(GateKind::CZd, {control, target})
            .append(GateKind::QFT, {target});
    }
    return out;
}

/// swap_circuit(d) written entirely in QFT and CZ_d gates (9 ops).
[[nodiscard]] inline Circuit elementary_swap_circuit(Dimension d) {
    return expand_cx_tilde(swap_circuit(d));
}

} // namespace qudit
