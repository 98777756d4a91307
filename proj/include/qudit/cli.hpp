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
 * @file cli.hpp
 * The qudit-swap command line: verify, matrix, simulate, parse.
 *
 * Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or
 * input error.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudit/circuit.hpp"
#include "qudit/core.hpp"
#include "qudit/dsl.hpp"
#include "qudit/gates.hpp"
#include "qudit/verify.hpp"

namespace qudit::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Amplitudes below this magnitude are omitted from simulate output.
inline constexpr double kPrintThreshold = 1e-12;

/// Shortest decimal that round-trips to the same double. -0 prints as 0.
[[nodiscard]] inline std::string format_double(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

[[nodiscard]] inline double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

namespace detail {

class UsageError : public QuditError {
  public:
    using QuditError::QuditError;
};

[[nodiscard]] inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

[[nodiscard]] inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

/// "x,y,..." into a basis label of the circuit's register.
[[nodiscard]] inline BasisLabel parse_label(std::string_view text, Dimension d,
                                            std::size_t n) {
    BasisLabel label{d, {}};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const auto piece =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos));
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw UsageError("input label: '" + std::string(piece) +
                             "' is not an integer");
        }
        if (v < 0 || v >= d.value()) {
            throw UsageError("input label: digit " + std::to_string(v) +
                             " outside [0, " + std::to_string(d.value() - 1) + "]");
        }
        label.digits.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (label.digits.size() != n) {
        throw UsageError("input label has " + std::to_string(label.digits.size()) +
                         " digits, circuit has " + std::to_string(n) + " wires");
    }
    return label;
}

/// One amplitude per line as "re im" or "re,im"; '#' lines and blanks skipped.
[[nodiscard]] inline StateVector parse_state(const std::string &text, Dimension d,
                                             std::size_t n) {
    std::vector<Amplitude> amps;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::istringstream fields{std::string(body)};
        double re = 0.0;
        double im = 0.0;
        std::string rest;
        if (!(fields >> re >> im) || (fields >> rest)) {
            throw UsageError("state file line " + std::to_string(line_no) +
                             ": expected 're im'");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw UsageError("state file line " + std::to_string(line_no) +
                             ": amplitude is not finite");
        }
        amps.emplace_back(re, im);
    }
    const std::size_t want = hilbert_dim(d, n);
    if (amps.size() != want) {
        throw UsageError("state file has " + std::to_string(amps.size()) +
                         " amplitudes, circuit needs " + std::to_string(want));
    }
    return {d, n, std::move(amps)};
}

[[nodiscard]] inline std::string join_label(const BasisLabel &label) {
    std::string out;
    for (std::size_t i = 0; i < label.digits.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(label.digits[i]);
    }
    return out;
}

/// Flat index of s if it equals a basis vector within tolerance.
[[nodiscard]] inline std::optional<std::size_t> as_basis(const StateVector &s) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i]) < kPrintThreshold) {
            continue;
        }
        if (hit || std::abs(s[i] - Amplitude{1.0, 0.0}) > kDenseTolerance) {
            return std::nullopt;
        }
        hit = i;
    }
    return hit;
}

inline int cmd_verify(std::int64_t d_min, std::int64_t d_max,
                      const VerifyOptions &opts, bool json, std::ostream &out,
                      std::ostream &err) {
    std::vector<VerificationReport> reports;
    try {
        reports = verify_all(d_min, d_max, opts);
    } catch (const InvalidDimension &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    const auto passed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(),
                      [](const VerificationReport &r) { return r.passed; }));
    const bool all_passed = passed == reports.size();

    if (json) {
        nlohmann::json doc;
        doc["reports"] = nlohmann::json::array();
        for (const auto &r : reports) {
            doc["reports"].push_back({{"identity", r.identity},
                                      {"d", r.d},
                                      {"max_dev", r.max_dev},
                                      {"tolerance", r.tolerance},
                                      {"passed", r.passed}});
        }
        doc["summary"] = {{"total", reports.size()},
                          {"passed", passed},
                          {"failed", reports.size() - passed},
                          {"all_passed", all_passed}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto &r : reports) {
            out << std::left << std::setw(20) << r.identity << " d=" << std::setw(3)
                << r.d << " max_dev=" << std::setw(24) << format_double(r.max_dev)
                << " tol=" << std::setw(8) << format_double(r.tolerance) << ' '
                << (r.passed ? "PASS" : "FAIL") << '\n';
        }
        out << passed << '/' << reports.size() << " checks passed\n";
    }
    return all_passed ? kSuccess : kVerificationFailed;
}

inline int cmd_matrix(const std::string &gate, std::int64_t d_value,
                      const std::string &format, std::ostream &out,
                      std::ostream &err) {
    const auto kind = kind_from_mnemonic(gate);
    if (!kind) {
        err << "error: unknown gate '" << gate << "'\n";
        return kUsageError;
    }
    GateMatrix m = GateMatrix::identity(1);
    try {
        const Dimension d{d_value};
        (void)hilbert_dim(d, arity(*kind));
        m = make_gate(*kind, d);
    } catch (const QuditError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (format == "json") {
        auto rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.dim(); ++r) {
            auto row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.dim(); ++c) {
                const Amplitude a = m(r, c);
                row.push_back({clean_zero(a.real()), clean_zero(a.imag())});
            }
            rows.push_back(std::move(row));
        }
        out << rows.dump() << '\n';
        return kSuccess;
    }
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const Amplitude a = m(r, c);
            if (c > 0) {
                out << ';';
            }
            out << format_double(a.real()) << ',' << format_double(a.imag());
        }
        out << '\n';
    }
    return kSuccess;
}

inline int cmd_simulate(const std::string &circuit_path, const std::string &input,
                        const std::string &state_path, bool json, std::ostream &out,
                        std::ostream &err) {
    try {
        const Circuit circuit = parse(read_file(circuit_path));
        const Dimension d = circuit.dim();
        const std::size_t n = circuit.wires();
        const bool basis_input = !input.empty();
        const StateVector in = basis_input
                                   ? basis_state(parse_label(input, d, n))
                                   : parse_state(read_file(state_path), d, n);
        const StateVector result = simulate(circuit, in);

        std::optional<BasisLabel> label;
        if (basis_input) {
            if (const auto idx = as_basis(result)) {
                label = BasisLabel::from_flat(d, n, *idx);
            }
        }

        if (json) {
            nlohmann::json doc;
            doc["d"] = d.value();
            doc["wires"] = n;
            doc["label"] = label ? nlohmann::json(label->digits) : nlohmann::json(nullptr);
            doc["amplitudes"] = nlohmann::json::array();
            for (std::size_t i = 0; i < result.size(); ++i) {
                if (std::abs(result[i]) < kPrintThreshold) {
                    continue;
                }
                doc["amplitudes"].push_back(
                    {{"index", i},
                     {"label", BasisLabel::from_flat(d, n, i).digits},
                     {"re", clean_zero(result[i].real())},
                     {"im", clean_zero(result[i].imag())}});
            }
            out << doc.dump(2) << '\n';
        } else if (label) {
            out << join_label(*label) << '\n';
        } else {
            for (std::size_t i = 0; i < result.size(); ++i) {
                if (std::abs(result[i]) < kPrintThreshold) {
                    continue;
                }
                out << i << ' ' << format_double(result[i].real()) << ' '
                    << format_double(result[i].imag()) << '\n';
            }
        }
        return kSuccess;
    } catch (const ParseError &e) {
        err << circuit_path << ": " << e.what() << '\n';
    } catch (const QuditError &e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

inline int cmd_parse(const std::string &circuit_path, std::ostream &out,
                     std::ostream &err) {
    try {
        out << render(parse(read_file(circuit_path)));
        return kSuccess;
    } catch (const ParseError &e) {
        err << circuit_path << ": " << e.what() << '\n';
    } catch (const QuditError &e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

} // namespace detail

/// Entry point. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
    CLI::App app{"Build, simulate and verify the three-gate qudit SWAP."};
    app.name("qudit-swap");
    app.require_subcommand(1);

    std::int64_t d_min = 2;
    std::int64_t d_max = 16;
    VerifyOptions opts;
    bool verify_json = false;
    auto *verify = app.add_subcommand("verify", "Run the identity checks over a range of d");
    verify->add_option("--d-min", d_min, "Smallest dimension")->capture_default_str();
    verify->add_option("--d-max", d_max, "Largest dimension")->capture_default_str();
    verify->add_option("--tolerance", opts.dense_tolerance,
                       "Tolerance for floating-point checks")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", opts.seed, "Seed for random-state checks")
        ->capture_default_str();
    verify->add_option("--trials", opts.trials, "Random states per check")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_json, "Emit one JSON document");

    std::string gate;
    std::int64_t matrix_d = 0;
    std::string format = "csv";
    auto *matrix = app.add_subcommand("matrix", "Print a gate matrix");
    matrix->add_option("--gate", gate, "Gate mnemonic (QFT, CXT, CZ, ...)")->required();
    matrix->add_option("--d", matrix_d, "Qudit dimension")->required();
    matrix->add_option("--format", format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    std::string sim_circuit;
    std::string sim_input;
    std::string sim_state;
    bool sim_json = false;
    auto *simulate_cmd = app.add_subcommand("simulate", "Run a .qc circuit on a state");
    simulate_cmd->add_option("--circuit", sim_circuit, "Circuit file")->required();
    auto *input_opt =
        simulate_cmd->add_option("--input", sim_input, "Basis label, e.g. \"1,2\"");
    auto *state_opt =
        simulate_cmd->add_option("--state", sim_state, "Amplitude file, one 're im' per line");
    input_opt->excludes(state_opt);
    simulate_cmd->add_flag("--json", sim_json, "Emit JSON");

    std::string parse_circuit;
    auto *parse_cmd = app.add_subcommand("parse", "Print the canonical form of a .qc file");
    parse_cmd->add_option("--circuit", parse_circuit, "Circuit file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    if (verify->parsed()) {
        return detail::cmd_verify(d_min, d_max, opts, verify_json, out, err);
    }
    if (matrix->parsed()) {
        return detail::cmd_matrix(gate, matrix_d, format, out, err);
    }
    if (simulate_cmd->parsed()) {
        if (sim_input.empty() && sim_state.empty()) {
            err << "error: simulate needs --input or --state\n";
            return kUsageError;
        }
        return detail::cmd_simulate(sim_circuit, sim_input, sim_state, sim_json, out,
                                    err);
    }
    return detail::cmd_parse(parse_circuit, out, err);
}

} // namespace qudit::cli
