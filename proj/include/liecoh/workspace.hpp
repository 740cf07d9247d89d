#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/rational.hpp"
#include "liecoh/sayd.hpp"
#include "liecoh/weil.hpp"

namespace liecoh {

// Diagnostic for malformed input files. Codes: "syntax" (tokens, arity,
// numbers, unknown keywords), "name" (unknown builtin), "dim" (index range or
// dimension mismatch).
struct ParseError : std::runtime_error {
    int line, col;
    std::string code;
    ParseError(int line_, int col_, std::string code_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + " col " + std::to_string(col_) + ": [" + code_ +
                             "] " + msg),
          line(line_),
          col(col_),
          code(std::move(code_)) {}
};

namespace detail {

struct Tok {
    std::string text;
    int col = 1;
};

struct SrcLine {
    int no = 0;
    std::vector<Tok> toks;
};

inline std::vector<SrcLine> tokenize_lines(const std::string& text) {
    std::vector<SrcLine> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        SrcLine sl;
        sl.no = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            sl.toks.push_back({line.substr(start, i - start), int(start) + 1});
        }
        if (!sl.toks.empty()) out.push_back(std::move(sl));
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return out;
}

inline Rat parse_rat_tok(const SrcLine& l, const Tok& t) {
    try {
        return parse_rat(t.text);
    } catch (const std::invalid_argument&) {
        throw ParseError(l.no, t.col, "syntax", "expected a rational number, got '" + t.text + "'");
    }
}

inline long parse_int_tok(const SrcLine& l, const Tok& t, long lo, long hi) {
    Rat r = parse_rat_tok(l, t);
    if (r.get_den() != 1) throw ParseError(l.no, t.col, "syntax", "expected an integer, got '" + t.text + "'");
    if (r < Rat(lo) || r > Rat(hi))
        throw ParseError(l.no, t.col, "dim", "value " + t.text + " outside [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "]");
    return long(r.get_num().get_si());
}

inline void expect_arity(const SrcLine& l, std::size_t n) {
    if (l.toks.size() != n)
        throw ParseError(l.no, l.toks.back().col, "syntax",
                         "'" + l.toks[0].text + "' takes " + std::to_string(n - 1) + " argument(s)");
}

// Body of a Lie algebra description: dim, optional basis, bracket lines.
// Consumes lines [i, stop) where stop is the index of the terminator (one
// past the last body line).
inline LieAlgebra parse_lie_body(const std::vector<SrcLine>& lines, std::size_t i, std::size_t stop) {
    int n = -1;
    std::vector<std::string> names;
    std::vector<std::tuple<int, int, int, Rat, int, int>> brackets;  // i j k val line col
    for (; i < stop; ++i) {
        const SrcLine& l = lines[i];
        const std::string& kw = l.toks[0].text;
        if (kw == "dim") {
            expect_arity(l, 2);
            if (n >= 0) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'dim'");
            n = int(parse_int_tok(l, l.toks[1], 0, 64));
        } else if (kw == "basis") {
            if (n < 0) throw ParseError(l.no, l.toks[0].col, "syntax", "'basis' before 'dim'");
            if (int(l.toks.size()) != n + 1)
                throw ParseError(l.no, l.toks[0].col, "dim",
                                 "'basis' needs exactly " + std::to_string(n) + " names");
            if (!names.empty()) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'basis'");
            for (int t = 1; t <= n; ++t) names.push_back(l.toks[t].text);
        } else if (kw == "bracket") {
            if (n < 0) throw ParseError(l.no, l.toks[0].col, "syntax", "'bracket' before 'dim'");
            expect_arity(l, 5);
            int bi = int(parse_int_tok(l, l.toks[1], 1, n));
            int bj = int(parse_int_tok(l, l.toks[2], 1, n));
            int bk = int(parse_int_tok(l, l.toks[3], 1, n));
            if (bi >= bj)
                throw ParseError(l.no, l.toks[1].col, "dim", "bracket indices need i < j (got " +
                                                                 std::to_string(bi) + ", " + std::to_string(bj) + ")");
            Rat v = parse_rat_tok(l, l.toks[4]);
            brackets.push_back({bi - 1, bj - 1, bk - 1, v, l.no, l.toks[1].col});
        } else {
            throw ParseError(l.no, l.toks[0].col, "syntax", "unknown statement '" + kw + "' in Lie block");
        }
    }
    if (n < 0) {
        const SrcLine& l = lines[stop < lines.size() ? stop : lines.size() - 1];
        throw ParseError(l.no, 1, "syntax", "Lie block is missing 'dim'");
    }
    LieAlgebra g(n, names);
    std::map<std::tuple<int, int, int>, bool> seen;
    for (const auto& [a, b, c, v, ln, col] : brackets) {
        if (seen.count({a, b, c}))
            throw ParseError(ln, col, "dim", "duplicate bracket entry (" + std::to_string(a + 1) + ", " +
                                                 std::to_string(b + 1) + ", " + std::to_string(c + 1) + ")");
        seen[{a, b, c}] = true;
        g.set_bracket(a, b, c, v);
    }
    return g;
}

}  // namespace detail

// Standalone Lie algebra file:
//   liecoh lie v1
//   dim 3
//   basis X1 X2 X3
//   bracket 1 2 3 1          # [X_1, X_2] = X_3, 1-based, i < j
inline LieAlgebra parse_lie_file(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "syntax", "empty input, expected 'liecoh lie v1' header");
    const detail::SrcLine& h = lines[0];
    if (h.toks.size() != 3 || h.toks[0].text != "liecoh" || h.toks[1].text != "lie" || h.toks[2].text != "v1")
        throw ParseError(h.no, h.toks[0].col, "syntax", "expected 'liecoh lie v1' header");
    return detail::parse_lie_body(lines, 1, lines.size());
}

// Canonical serialization; parse_lie_file(serialize_lie(g)) reproduces g and
// serialize is idempotent byte for byte.
inline std::string serialize_lie(const LieAlgebra& g) {
    std::ostringstream out;
    out << "liecoh lie v1\n";
    out << "dim " << g.dim() << "\n";
    if (g.dim() > 0) {
        out << "basis";
        for (const std::string& s : g.names()) out << " " << s;
        out << "\n";
    }
    for (const auto& [key, v] : g.stored_entries()) {
        auto [i, j, k] = key;
        out << "bracket " << i + 1 << " " << j + 1 << " " << k + 1 << " " << rat_str(v) << "\n";
    }
    return out.str();
}

struct Workspace {
    LieAlgebra g{0};
    SaydModule mod;
    std::string coefficients = "trivial";  // trivial | weil | simple2 | inline
    int weil_cap = -1;
    int twist = 0;  // 0 = none
    std::uint64_t seed = 0;
    int qcap = 2;
};

// The 2-dim module over the sl2 presentation: B_1 = E_12, B_2 = E_21,
// B_3 = diag(1, -1) in row convention, trivial coaction.
inline SaydModule simple2_module() {
    Mat b1(2, 2), b2(2, 2), b3(2, 2);
    b1(0, 1) = 1;
    b2(1, 0) = 1;
    b3(0, 0) = 1;
    b3(1, 1) = -1;
    SaydModule mod;
    mod.action = make_action(3, 2, {b1, b2, b3});
    mod.coaction = trivial_coaction(3, 2);
    return mod;
}

// Workspace file:
//   liecoh workspace v1
//   lie sl2                     # or: lie inline ... end
//   coefficients weil cap 1     # or: trivial [dim m] | simple2
//   action inline dim 2         # optional override, entry j i k value
//     entry 3 1 1 1
//   end
//   coaction inline dim 2       # optional override
//   end
//   twist -1                    # optional delta twist of the action
//   seed 42
//   qcap 2
inline Workspace parse_workspace(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "syntax", "empty input, expected 'liecoh workspace v1' header");
    const detail::SrcLine& h = lines[0];
    if (h.toks.size() != 3 || h.toks[0].text != "liecoh" || h.toks[1].text != "workspace" ||
        h.toks[2].text != "v1")
        throw ParseError(h.no, h.toks[0].col, "syntax", "expected 'liecoh workspace v1' header");

    Workspace ws;
    bool have_lie = false, have_coeff = false, have_seed = false, have_twist = false, have_qcap = false;
    std::optional<ActionMatrices> action_override;
    std::optional<CoactionMatrices> coaction_override;
    int ovr_line = 1, ovr_col = 1;  // position of the last inline override
    int coeff_line = 0, coeff_col = 1;

    auto find_end = [&](std::size_t i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[j].toks.size() == 1 && lines[j].toks[0].text == "end") return j;
        throw ParseError(lines[i].no, lines[i].toks[0].col, "syntax", "unterminated block, expected 'end'");
    };

    auto parse_entries = [&](std::size_t i, std::size_t stop, int n, int m) {
        std::vector<Mat> mats(n, Mat(m, m));
        std::map<std::tuple<int, int, int>, bool> seen;
        for (std::size_t t = i; t < stop; ++t) {
            const detail::SrcLine& l = lines[t];
            if (l.toks[0].text != "entry")
                throw ParseError(l.no, l.toks[0].col, "syntax", "expected 'entry j i k value' lines");
            detail::expect_arity(l, 5);
            int j = int(detail::parse_int_tok(l, l.toks[1], 1, n));
            int r = int(detail::parse_int_tok(l, l.toks[2], 1, m));
            int c = int(detail::parse_int_tok(l, l.toks[3], 1, m));
            if (seen.count({j, r, c}))
                throw ParseError(l.no, l.toks[1].col, "dim", "duplicate entry (" + std::to_string(j) + ", " +
                                                                 std::to_string(r) + ", " + std::to_string(c) + ")");
            seen[{j, r, c}] = true;
            mats[j - 1](r - 1, c - 1) = detail::parse_rat_tok(l, l.toks[4]);
        }
        return mats;
    };

    std::size_t i = 1;
    while (i < lines.size()) {
        const detail::SrcLine& l = lines[i];
        const std::string& kw = l.toks[0].text;
        if (kw == "lie") {
            if (have_lie) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'lie'");
            have_lie = true;
            detail::expect_arity(l, 2);
            if (l.toks[1].text == "inline") {
                std::size_t stop = find_end(i);
                ws.g = detail::parse_lie_body(lines, i + 1, stop);
                i = stop + 1;
            } else {
                std::optional<LieAlgebra> g = builtin_lie(l.toks[1].text);
                if (!g)
                    throw ParseError(l.no, l.toks[1].col, "name",
                                     "unknown Lie algebra '" + l.toks[1].text + "'");
                ws.g = *g;
                ++i;
            }
        } else if (kw == "coefficients") {
            if (have_coeff) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'coefficients'");
            have_coeff = true;
            coeff_line = l.no;
            coeff_col = l.toks[0].col;
            if (l.toks.size() < 2) throw ParseError(l.no, l.toks[0].col, "syntax", "'coefficients' needs a kind");
            const std::string& kind = l.toks[1].text;
            if (kind == "trivial") {
                ws.coefficients = "trivial";
                if (l.toks.size() == 2) {
                    ws.weil_cap = -1;
                } else if (l.toks.size() == 4 && l.toks[2].text == "dim") {
                    ws.weil_cap = -1;
                    ws.mod.action.m = int(detail::parse_int_tok(l, l.toks[3], 0, 4096));
                } else {
                    throw ParseError(l.no, l.toks[1].col, "syntax", "usage: coefficients trivial [dim m]");
                }
                ++i;
            } else if (kind == "weil") {
                if (l.toks.size() != 4 || l.toks[2].text != "cap")
                    throw ParseError(l.no, l.toks[1].col, "syntax", "usage: coefficients weil cap k");
                ws.coefficients = "weil";
                ws.weil_cap = int(detail::parse_int_tok(l, l.toks[3], 0, 8));
                ++i;
            } else if (kind == "simple2") {
                detail::expect_arity(l, 2);
                ws.coefficients = "simple2";
                ++i;
            } else {
                throw ParseError(l.no, l.toks[1].col, "name", "unknown coefficients kind '" + kind + "'");
            }
        } else if (kw == "action" || kw == "coaction") {
            if (l.toks.size() != 4 || l.toks[1].text != "inline" || l.toks[2].text != "dim")
                throw ParseError(l.no, l.toks[0].col, "syntax", "usage: " + kw + " inline dim m");
            if (!have_lie) throw ParseError(l.no, l.toks[0].col, "syntax", "'" + kw + "' before 'lie'");
            int m = int(detail::parse_int_tok(l, l.toks[3], 0, 4096));
            ovr_line = l.no;
            ovr_col = l.toks[0].col;
            std::size_t stop = find_end(i);
            std::vector<Mat> mats = parse_entries(i + 1, stop, ws.g.dim(), m);
            if (kw == "action") {
                if (action_override) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'action'");
                action_override = make_action(ws.g.dim(), m, std::move(mats));
            } else {
                if (coaction_override) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'coaction'");
                coaction_override = make_coaction(ws.g.dim(), m, std::move(mats));
            }
            i = stop + 1;
        } else if (kw == "twist") {
            if (have_twist) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'twist'");
            have_twist = true;
            detail::expect_arity(l, 2);
            long s = detail::parse_int_tok(l, l.toks[1], -1, 1);
            if (s == 0) throw ParseError(l.no, l.toks[1].col, "syntax", "twist sign must be 1 or -1");
            ws.twist = int(s);
            ++i;
        } else if (kw == "seed") {
            if (have_seed) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'seed'");
            have_seed = true;
            detail::expect_arity(l, 2);
            ws.seed = std::uint64_t(detail::parse_int_tok(l, l.toks[1], 0, 1000000000L));
            ++i;
        } else if (kw == "qcap") {
            if (have_qcap) throw ParseError(l.no, l.toks[0].col, "syntax", "duplicate 'qcap'");
            have_qcap = true;
            detail::expect_arity(l, 2);
            ws.qcap = int(detail::parse_int_tok(l, l.toks[1], 0, 4));
            ++i;
        } else if (kw == "end") {
            throw ParseError(l.no, l.toks[0].col, "syntax", "'end' without an open block");
        } else {
            throw ParseError(l.no, l.toks[0].col, "syntax", "unknown statement '" + kw + "'");
        }
    }
    if (!have_lie) throw ParseError(lines.back().no, 1, "syntax", "workspace is missing a 'lie' statement");

    int n = ws.g.dim();
    // Assemble the module: coefficients first, then overrides.
    int trivial_dim = ws.mod.action.m;  // stashed by 'coefficients trivial dim m'
    if (ws.coefficients == "weil") {
        ws.mod = build_truncated_weil(ws.g, ws.weil_cap).mod;
    } else if (ws.coefficients == "simple2") {
        if (n != 3) throw ParseError(coeff_line, coeff_col, "dim", "'simple2' needs a 3-dim Lie algebra");
        ws.mod = simple2_module();
    } else {
        int m = have_coeff && trivial_dim > 0 ? trivial_dim : 1;
        ws.mod.action = trivial_action(n, m);
        ws.mod.coaction = trivial_coaction(n, m);
    }
    if (action_override && coaction_override && !have_coeff) {
        if (action_override->m != coaction_override->m)
            throw ParseError(ovr_line, ovr_col, "dim",
                             "action dim " + std::to_string(action_override->m) +
                                 " != coaction dim " + std::to_string(coaction_override->m));
        ws.mod.action = *action_override;
        ws.mod.coaction = *coaction_override;
        ws.coefficients = "inline";
    } else {
        if (action_override) {
            if (!have_coeff) {
                ws.mod.action = *action_override;
                ws.mod.coaction = trivial_coaction(n, action_override->m);
            } else {
                if (ws.mod.action.m != action_override->m)
                    throw ParseError(ovr_line, ovr_col, "dim",
                                     "action override dim " + std::to_string(action_override->m) +
                                         " != coefficients dim " + std::to_string(ws.mod.action.m));
                ws.mod.action = *action_override;
            }
            ws.coefficients = "inline";
        }
        if (coaction_override) {
            if (!have_coeff) {
                ws.mod.coaction = *coaction_override;
                ws.mod.action = trivial_action(n, coaction_override->m);
            } else {
                if (ws.mod.coaction.m != coaction_override->m)
                    throw ParseError(ovr_line, ovr_col, "dim",
                                     "coaction override dim " + std::to_string(coaction_override->m) +
                                         " != module dim " + std::to_string(ws.mod.coaction.m));
                ws.mod.coaction = *coaction_override;
            }
            ws.coefficients = "inline";
        }
    }
    if (ws.twist != 0) ws.mod.action = delta_twist(ws.g, ws.mod.action, ws.twist);
    return ws;
}

}  // namespace liecoh
