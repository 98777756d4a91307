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
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qudit/core.hpp"
#include "qudit/gates.hpp"

using namespace qudit;

namespace {

const std::vector<Amplitude> kCnot = {
    1, 0, 0, 0, //
    0, 1, 0, 0, //
    0, 0, 0, 1, //
    0, 0, 1, 0,
};

std::size_t at(std::int64_t x, std::int64_t y, std::int64_t d) {
    return static_cast<std::size_t>(x * d + y);
}

Amplitude phase(double turns) {
    return std::exp(Amplitude{0.0, 2.0 * std::numbers::pi * turns});
}

} // namespace

TEST(GateKind, Arity) {
    for (const auto kind : kAllGateKinds) {
        const bool single = kind == GateKind::QFT || kind == GateKind::IQFT ||
                            kind == GateKind::Xd || kind == GateKind::Identity;
        EXPECT_EQ(arity(kind), single ? 1u : 2u) << mnemonic(kind);
        EXPECT_EQ(kind_from_mnemonic(mnemonic(kind)), kind);
    }
    EXPECT_FALSE(kind_from_mnemonic("cxt").has_value());
    EXPECT_FALSE(kind_from_mnemonic("H").has_value());
}

TEST(Qft, Examples) {
    const auto h = qft(Dimension{2});
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(h(0, 0), Amplitude(r));
    EXPECT_EQ(h(0, 1), Amplitude(r));
    EXPECT_EQ(h(1, 0), Amplitude(r));
    EXPECT_EQ(h(1, 1), Amplitude(-r));

    for (int d = 2; d <= 9; ++d) {
        const auto f = qft(Dimension{d});
        for (int k = 0; k < d; ++k) {
            EXPECT_NEAR(std::abs(f(k, 0) - 1.0 / std::sqrt(d)), 0.0, 1e-15);
        }
    }

    EXPECT_NEAR(std::abs(qft(Dimension{4})(1, 1) - Amplitude(0.0, 0.5)), 0.0, 1e-16);
}

TEST(Qft, MatchesDefinitionWithPositiveExponent) {
    for (int d = 2; d <= 32; ++d) {
        const auto f = qft(Dimension{d});
        EXPECT_LE(oracle::max_diff(f.to_dense(), oracle::qft(d)), 1e-14) << d;
    }
}

TEST(Iqft, Examples) {
    for (int d : {2, 3, 5, 8}) {
        const Dimension dim{d};
        EXPECT_LE(max_entry_dist(multiply(iqft(dim), qft(dim)),
                                 GateMatrix::identity(dim.size())),
                  1e-12);
    }
    EXPECT_EQ(max_entry_dist(iqft(Dimension{2}), qft(Dimension{2})), 0.0);
    const auto f = iqft(Dimension{3});
    for (int k = 0; k < 3; ++k) {
        for (int x = 0; x < 3; ++x) {
            EXPECT_NEAR(std::abs(f(k, x) - phase(-x * k / 3.0) / std::sqrt(3.0)), 0.0,
                        1e-15);
        }
    }
    EXPECT_LE(max_entry_dist(iqft(Dimension{7}), adjoint(qft(Dimension{7}))), 1e-15);
}

TEST(CzD, Examples) {
    const auto cz2 = cz_d(Dimension{2});
    EXPECT_EQ(max_entry_dist(cz2, GateMatrix::dense(4, {1, 0, 0, 0, 0, 1, 0, 0, 0,
                                                          0, 1, 0, 0, 0, 0, -1})),
              0.0);
    const auto cz3 = cz_d(Dimension{3});
    EXPECT_NEAR(std::abs(cz3(at(1, 2, 3), at(1, 2, 3)) - phase(2.0 / 3.0)), 0.0, 1e-15);
    for (int d = 2; d <= 8; ++d) {
        const auto cz = cz_d(Dimension{d});
        for (int y = 0; y < d; ++y) {
            EXPECT_EQ(cz(at(0, y, d), at(0, y, d)), Amplitude(1.0));
        }
    }
}

TEST(CzD, DiagonalUnitModulusAndSymmetric) {
    for (int d = 2; d <= 16; ++d) {
        const Dimension dim{d};
        for (const auto &m : {cz_d(dim), cz_d_dag(dim)}) {
            for (std::size_t r = 0; r < m.dim(); ++r) {
                for (std::size_t c = 0; c < m.dim(); ++c) {
                    if (r != c) {
                        ASSERT_EQ(m(r, c), Amplitude(0.0));
                    }
                }
                ASSERT_NEAR(std::abs(m(r, r)), 1.0, 1e-12);
            }
            for (int x = 0; x < d; ++x) {
                for (int y = 0; y < d; ++y) {
                    ASSERT_EQ(m(at(x, y, d), at(x, y, d)), m(at(y, x, d), at(y, x, d)));
                }
            }
        }
        EXPECT_LE(oracle::max_diff(cz_d(dim).to_dense(), oracle::controlled_phase(d)),
                  1e-13);
    }
}

TEST(CzDDag, Examples) {
    for (int d : {2, 3, 7}) {
        const Dimension dim{d};
        EXPECT_LE(max_entry_dist(multiply(cz_d_dag(dim), cz_d(dim)),
                                 GateMatrix::identity(dim.size() * dim.size())),
                  4 * std::numeric_limits<double>::epsilon());
        EXPECT_EQ(max_entry_dist(cz_d_dag(dim), adjoint(cz_d(dim))), 0.0);
    }
    EXPECT_NEAR(std::abs(cz_d_dag(Dimension{3})(at(2, 2, 3), at(2, 2, 3)) -
                         phase(-1.0 / 3.0)),
                0.0, 1e-15);
    EXPECT_EQ(max_entry_dist(cz_d_dag(Dimension{2}), cz_d(Dimension{2})), 0.0);
}

TEST(CxTilde, IsCnotAtTwo) {
    const auto g = cx_tilde(Dimension{2});
    EXPECT_TRUE(g.has_perm());
    EXPECT_EQ(g.to_dense(), kCnot);
}

TEST(CxTilde, Examples) {
    const auto g3 = cx_tilde(Dimension{3});
    EXPECT_EQ(g3.perm()[at(1, 1, 3)], at(1, 1, 3));
    const auto g5 = cx_tilde(Dimension{5});
    EXPECT_EQ(g5.perm()[at(2, 4, 5)], at(2, 4, 5));
    for (int d = 2; d <= 12; ++d) {
        const auto expect = oracle::two_qudit_map(
            d, [d](long long x, long long y) { return std::pair{x, oracle::mod(-x - y, d)}; });
        EXPECT_EQ(cx_tilde(Dimension{d}).to_dense(), expect) << d;
    }
}

TEST(CxD, Examples) {
    EXPECT_EQ(cx_d(Dimension{2}).to_dense(), kCnot);
    EXPECT_EQ(cx_d(Dimension{3}).perm()[at(2, 2, 3)], at(2, 1, 3));
    for (int d = 2; d <= 9; ++d) {
        const auto g = cx_d(Dimension{d});
        for (int y = 0; y < d; ++y) {
            EXPECT_EQ(g.perm()[at(0, y, d)], at(0, y, d));
        }
        const auto expect = oracle::two_qudit_map(
            d, [d](long long x, long long y) { return std::pair{x, oracle::mod(x + y, d)}; });
        EXPECT_EQ(g.to_dense(), expect);
    }
}

TEST(CxDDag, Examples) {
    for (int d : {2, 3, 6}) {
        const Dimension dim{d};
        EXPECT_EQ(max_entry_dist(multiply(cx_d_dag(dim), cx_d(dim)),
                                 GateMatrix::identity(dim.size() * dim.size())),
                  0.0);
        EXPECT_EQ(max_entry_dist(cx_d_dag(dim), adjoint(cx_d(dim))), 0.0);
    }
    EXPECT_EQ(cx_d_dag(Dimension{3}).perm()[at(2, 1, 3)], at(2, 2, 3));
    EXPECT_EQ(cx_d_dag(Dimension{2}).to_dense(), kCnot);
}

TEST(XD, Examples) {
    // -x = x mod 2, so the complement is the identity on qubits.
    EXPECT_EQ(max_entry_dist(x_d(Dimension{2}), GateMatrix::identity(2)), 0.0);
    const auto g3 = x_d(Dimension{3});
    EXPECT_EQ(g3.perm()[0], 0u);
    EXPECT_EQ(g3.perm()[1], 2u);
    EXPECT_EQ(g3.perm()[2], 1u);
    for (int d = 2; d <= 32; ++d) {
        const auto g = x_d(Dimension{d});
        EXPECT_EQ(max_entry_dist(multiply(g, g), GateMatrix::identity(g.dim())), 0.0);
        EXPECT_EQ(g.perm()[0], 0u);
    }
}

TEST(SwapRef, Examples) {
    const std::vector<Amplitude> qubit_swap = {
        1, 0, 0, 0, //
        0, 0, 1, 0, //
        0, 1, 0, 0, //
        0, 0, 0, 1,
    };
    EXPECT_EQ(swap_ref(Dimension{2}).to_dense(), qubit_swap);
    for (int d = 2; d <= 16; ++d) {
        const auto s = swap_ref(Dimension{d});
        for (int x = 0; x < d; ++x) {
            EXPECT_EQ(s.perm()[at(x, x, d)], at(x, x, d));
        }
        EXPECT_EQ(max_entry_dist(multiply(s, s), GateMatrix::identity(s.dim())), 0.0);
    }
}

TEST(Gates, AllUnitaryUpToThirtyTwo) {
    for (int d = 2; d <= 32; ++d) {
        const Dimension dim{d};
        for (const auto kind : kAllGateKinds) {
            const auto g = make_gate(kind, dim);
            ASSERT_LE(unitarity_deviation(g), 1e-10) << mnemonic(kind) << " d=" << d;
            ASSERT_LE(unitarity_deviation(g.as_dense()), 1e-10)
                << mnemonic(kind) << " d=" << d;
            ASSERT_EQ(g.has_perm(), is_permutation(kind));
        }
    }
}

TEST(Gates, PermutationTablesAreBijections) {
    for (int d = 2; d <= 32; ++d) {
        const Dimension dim{d};
        for (const auto kind : kAllGateKinds) {
            if (!is_permutation(kind)) {
                continue;
            }
            const auto g = make_gate(kind, dim);
            const std::size_t expected_size =
                arity(kind) == 1 ? dim.size() : dim.size() * dim.size();
            ASSERT_EQ(g.perm().size(), expected_size);
            std::set<std::size_t> seen(g.perm().begin(), g.perm().end());
            ASSERT_EQ(seen.size(), expected_size);
            ASSERT_LT(*seen.rbegin(), expected_size);
        }
    }
}

TEST(CxTilde, SelfInverseOnTables) {
    for (int d = 2; d <= 32; ++d) {
        const auto g = cx_tilde(Dimension{d});
        const auto sq = multiply(g, g);
        ASSERT_TRUE(sq.has_perm());
        ASSERT_EQ(max_entry_dist(sq, GateMatrix::identity(g.dim())), 0.0) << d;
        ASSERT_EQ(max_entry_dist(adjoint(g), g), 0.0);
    }
}

TEST(Gates, InvalidDimension) {
    EXPECT_THROW((void)qft(Dimension{1}), InvalidDimension);
    EXPECT_THROW((void)cx_tilde(Dimension{65}), SizeBudgetExceeded);
}
