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
 * @file dsl.hpp
 * Line-oriented .qc circuit text format.
 *
 *     # comment
 *     dim 3
 *     wires 2
 *     CXT 2 1
 *     QFT 2
 *
 * "dim" and "wires" must come first, in that order. Each further line is a
 * gate mnemonic followed by 1-based wire indices, control first. Blank lines
 * and lines whose first non-blank character is '#' are skipped. Tokens are
 * separated by spaces or tabs; a trailing '\r' is tolerated.
 *
 * render() emits the canonical form: ASCII, LF endings, single spaces,
 * no comments, trailing newline.
 */

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/core.hpp"
#include "qudit/gates.hpp"

namespace qudit {

class ParseError : public QuditError {
  public:
    ParseError(std::size_t line, std::size_t column, std::string message,
               std::string token)
        : QuditError(format(line, column, message, token)), line_(line),
          column_(column), message_(std::move(message)), token_(std::move(token)) {}

    /// 1-based line of the offending token.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    /// 1-based byte column of the offending token.
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string &message() const noexcept { return message_; }
    [[nodiscard]] const std::string &token() const noexcept { return token_; }

  private:
    static std::string format(std::size_t line, std::size_t column,
                              const std::string &message, const std::string &token) {
        std::string out = "line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + message;
        if (!token.empty()) {
            out += " (at '" + token + "')";
        }
        return out;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string token_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;
};

[[nodiscard]] inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

[[nodiscard]] inline std::int64_t parse_int(const Token &tok, std::size_t line) {
    std::int64_t value = 0;
    const char *first = tok.text.data();
    const char *last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, tok.column, "integer out of range",
                         std::string(tok.text));
    }
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, tok.column, "expected an integer",
                         std::string(tok.text));
    }
    return value;
}

} // namespace detail

/// Parses a .qc document. Throws ParseError at the first problem.
[[nodiscard]] inline Circuit parse(std::string_view text) {
    std::optional<Dimension> dim;
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        const auto tokens = detail::tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') {
            continue;
        }
        const auto &head = tokens.front();
        const std::string head_text(head.text);

        auto expect_args = [&](std::size_t count) {
            if (tokens.size() < count + 1) {
                throw ParseError(line_no, head.column,
                                 "'" + head_text + "' expects " +
                                     std::to_string(count) + " argument(s)",
                                 head_text);
            }
            if (tokens.size() > count + 1) {
                const auto &extra = tokens[count + 1];
                throw ParseError(line_no, extra.column, "unexpected extra token",
                                 std::string(extra.text));
            }
        };

        if (head.text == "dim") {
            if (dim) {
                throw ParseError(line_no, head.column, "duplicate 'dim' header",
                                 head_text);
            }
            expect_args(1);
            const auto value = detail::parse_int(tokens[1], line_no);
            if (value < 2) {
                throw ParseError(line_no, tokens[1].column,
                                 "dimension must be at least 2",
                                 std::string(tokens[1].text));
            }
            dim.emplace(value);
            continue;
        }
        if (head.text == "wires") {
            if (!dim) {
                throw ParseError(line_no, head.column,
                                 "missing 'dim' header before 'wires'", head_text);
            }
            if (circuit) {
                throw ParseError(line_no, head.column, "duplicate 'wires' header",
                                 head_text);
            }
            expect_args(1);
            const auto value = detail::parse_int(tokens[1], line_no);
            if (value < 1) {
                throw ParseError(line_no, tokens[1].column,
                                 "wire count must be at least 1",
                                 std::string(tokens[1].text));
            }
            circuit.emplace(*dim, static_cast<std::size_t>(value));
            continue;
        }
        if (!dim) {
            throw ParseError(line_no, head.column, "missing 'dim' header", head_text);
        }
        if (!circuit) {
            throw ParseError(line_no, head.column, "missing 'wires' header",
                             head_text);
        }

        const auto kind = kind_from_mnemonic(head.text);
        if (!kind) {
            throw ParseError(line_no, head.column, "unknown gate", head_text);
        }
        const std::size_t need = arity(*kind);
        if (tokens.size() - 1 != need) {
            const std::string msg = head_text + " takes " + std::to_string(need) +
                                    " wire(s), got " +
                                    std::to_string(tokens.size() - 1);
            if (tokens.size() - 1 > need) {
                const auto &extra = tokens[need + 1];
                throw ParseError(line_no, extra.column, msg, std::string(extra.text));
            }
            throw ParseError(line_no, head.column, msg, head_text);
        }
        std::vector<std::size_t> wires;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const auto w = detail::parse_int(tokens[i], line_no);
            if (w < 1 || static_cast<std::size_t>(w) > circuit->wires()) {
                throw ParseError(line_no, tokens[i].column,
                                 "wire out of range [1, " +
                                     std::to_string(circuit->wires()) + "]",
                                 std::string(tokens[i].text));
            }
            for (const auto prev : wires) {
                if (prev == static_cast<std::size_t>(w)) {
                    throw ParseError(line_no, tokens[i].column,
                                     "wire repeated within one gate",
                                     std::string(tokens[i].text));
                }
            }
            wires.push_back(static_cast<std::size_t>(w));
        }
        circuit->append(*kind, std::move(wires));
    }

    if (!dim) {
        throw ParseError(1, 1, "missing 'dim' header", "");
    }
    if (!circuit) {
        throw ParseError(line_no + 1, 1, "missing 'wires' header", "");
    }
    return *std::move(circuit);
}

/// Canonical text of a circuit.
[[nodiscard]] inline std::string render(const Circuit &c) {
    std::string out = "dim " + std::to_string(c.dim().value()) + "\nwires " +
                      std::to_string(c.wires()) + "\n";
    for (const auto &op : c.ops()) {
        out += mnemonic(op.kind);
        for (const auto w : op.wires) {
            out += ' ';
            out += std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

} // namespace qudit
