#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "liecoh/exterior.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/sayd.hpp"

namespace liecoh {

// Raised when an operation's precondition on the input data fails (invalid
// module/comodule, mixed-complex conditions, non-conilpotent coaction).
struct RefusedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graded space K^0..K^N with one degree-raising and one degree-lowering
// family of maps, in column convention: coordinates of basis (monomial, v) at
// global index monomial_index * m + v.
//   cochain side: K^p = Lambda^p g* (x) V, up = d_CE, down = d_K
//   chain side:   K_p = Lambda^p g  (x) V, up = del_K, down = del_CE
struct ComplexMaps {
    int n = 0, m = 0;
    std::vector<int> dims;  // dims[p], p = 0..n
    std::vector<Mat> up;    // up[p]: K^p -> K^{p+1}, p = 0..n (top map has 0 rows)
    std::vector<Mat> down;  // down[p]: K^p -> K^{p-1}, p = 0..n (down[0] has 0 rows)
};

namespace detail {

inline ComplexMaps make_skeleton(int n, int m) {
    ExteriorBasis ext(n);
    ComplexMaps c;
    c.n = n;
    c.m = m;
    for (int p = 0; p <= n; ++p) c.dims.push_back(ext.dim(p) * m);
    for (int p = 0; p <= n; ++p) {
        c.up.emplace_back(p + 1 <= n ? c.dims[p + 1] : 0, c.dims[p]);
        c.down.emplace_back(p - 1 >= 0 ? c.dims[p - 1] : 0, c.dims[p]);
    }
    return c;
}

}  // namespace detail

// d_CE(beta (x) v) = d_dR(beta) (x) v - th^j ^ beta (x) v . X_j  with
// d_dR(th^t) = -1/2 C^t_jk th^j th^k extended as a graded derivation;
// d_K(beta (x) v) = sum_{j in beta} (contract first slot) (x) v <| th^j.
inline ComplexMaps cochain_maps(const LieAlgebra& g, const SaydModule& mod) {
    int n = g.dim(), m = mod.action.m;
    ExteriorBasis ext(n);
    ComplexMaps c = detail::make_skeleton(n, m);
    for (int p = 0; p <= n; ++p) {
        for (int bi = 0; bi < ext.dim(p); ++bi) {
            std::uint32_t mask = ext.mask(p, bi);
            std::vector<int> tuple = ExteriorBasis::tuple_of(mask);
            for (int v = 0; v < m; ++v) {
                int col = bi * m + v;
                if (p + 1 <= n) {
                    Mat& up = c.up[p];
                    // de Rham part: replace slot t by the two-form d_dR(th^{i_t}).
                    for (int t = 0; t < p; ++t) {
                        int it = tuple[t];
                        for (int j = 0; j < n; ++j)
                            for (int k = j + 1; k < n; ++k) {
                                Rat coef = g.structure(j, k, it);  // C^{i_t}_jk
                                if (sgn(coef) == 0) continue;
                                std::vector<int> word = tuple;
                                word[t] = j;
                                word.insert(word.begin() + t + 1, k);
                                std::uint32_t out;
                                int s = word_sign(word, out);
                                if (s == 0) continue;
                                Rat total = Rat(-1) * coef * Rat(s) * Rat(t % 2 == 0 ? 1 : -1);
                                up(ext.index_of(out) * m + v, col) += total;
                            }
                    }
                    // action part: - th^j ^ beta (x) v . X_j
                    for (int j = 0; j < n; ++j) {
                        if (mask & (1u << j)) continue;
                        int s = below_sign(mask, j);
                        std::uint32_t out = mask | (1u << j);
                        int row0 = ext.index_of(out) * m;
                        for (int k = 0; k < m; ++k) {
                            const Rat& b = mod.action.B[j](v, k);
                            if (sgn(b) != 0) up(row0 + k, col) -= Rat(s) * b;
                        }
                    }
                }
                if (p - 1 >= 0) {
                    Mat& down = c.down[p];
                    for (int j : tuple) {
                        int s = below_sign(mask, j);
                        std::uint32_t out = mask & ~(1u << j);
                        int row0 = ext.index_of(out) * m;
                        for (int k = 0; k < m; ++k) {
                            const Rat& a = mod.coaction.A[j](v, k);
                            if (sgn(a) != 0) down(row0 + k, col) += Rat(s) * a;
                        }
                    }
                }
            }
        }
    }
    return c;
}

// del_CE(Y_0 ^..^ Y_{p-1} (x) v) = sum_t (-1)^t (drop Y_t) (x) v . Y_t
//   + sum_{t<u} (-1)^{t+u} [Y_t, Y_u] ^ (drop both) (x) v;
// del_K(xi (x) v) = sum_j X_j ^ xi (x) v <| th^j.
inline ComplexMaps chain_maps(const LieAlgebra& g, const SaydModule& mod) {
    int n = g.dim(), m = mod.action.m;
    ExteriorBasis ext(n);
    ComplexMaps c = detail::make_skeleton(n, m);
    for (int p = 0; p <= n; ++p) {
        for (int bi = 0; bi < ext.dim(p); ++bi) {
            std::uint32_t mask = ext.mask(p, bi);
            std::vector<int> tuple = ExteriorBasis::tuple_of(mask);
            for (int v = 0; v < m; ++v) {
                int col = bi * m + v;
                if (p - 1 >= 0) {
                    Mat& down = c.down[p];
                    for (int t = 0; t < p; ++t) {
                        int jt = tuple[t];
                        std::uint32_t out = mask & ~(1u << jt);
                        int row0 = ext.index_of(out) * m;
                        int st = t % 2 == 0 ? 1 : -1;
                        for (int k = 0; k < m; ++k) {
                            const Rat& b = mod.action.B[jt](v, k);
                            if (sgn(b) != 0) down(row0 + k, col) += Rat(st) * b;
                        }
                    }
                    for (int t = 0; t < p; ++t)
                        for (int u = t + 1; u < p; ++u) {
                            std::uint32_t rest = mask & ~(1u << tuple[t]) & ~(1u << tuple[u]);
                            for (int r = 0; r < n; ++r) {
                                Rat coef = g.structure(tuple[t], tuple[u], r);
                                if (sgn(coef) == 0 || (rest & (1u << r))) continue;
                                int s = below_sign(rest, r) * ((t + u) % 2 == 0 ? 1 : -1);
                                down(ext.index_of(rest | (1u << r)) * m + v, col) += Rat(s) * coef;
                            }
                        }
                }
                if (p + 1 <= n) {
                    Mat& up = c.up[p];
                    for (int j = 0; j < n; ++j) {
                        if (mask & (1u << j)) continue;
                        int s = below_sign(mask, j);
                        int row0 = ext.index_of(mask | (1u << j)) * m;
                        for (int k = 0; k < m; ++k) {
                            const Rat& a = mod.coaction.A[j](v, k);
                            if (sgn(a) != 0) up(row0 + k, col) += Rat(s) * a;
                        }
                    }
                }
            }
        }
    }
    return c;
}

// Checked builders: the cochain (resp. chain) differentials are only
// differentials when the module and comodule laws hold, so invalid input is
// refused here. mixed_check below works on the raw maps instead.
inline ComplexMaps build_cochain_diffs(const LieAlgebra& g, const SaydModule& mod) {
    if (!check_module(g, mod.action).ok) throw RefusedError("action is not a right module");
    if (!check_comodule(mod.coaction).commuting) throw RefusedError("coaction is not a comodule");
    return cochain_maps(g, mod);
}

inline ComplexMaps build_chain_diffs(const LieAlgebra& g, const SaydModule& mod) {
    if (!check_module(g, mod.action).ok) throw RefusedError("action is not a right module");
    if (!check_comodule(mod.coaction).commuting) throw RefusedError("coaction is not a comodule");
    return chain_maps(g, mod);
}

struct MixedSide {
    bool up_square_zero = true;
    bool down_square_zero = true;
    bool anticommute = true;
    bool mixed() const { return up_square_zero && down_square_zero && anticommute; }
};

inline MixedSide square_check(const ComplexMaps& c) {
    MixedSide s;
    int n = c.n;
    for (int p = 0; p <= n; ++p) {
        if (p + 1 <= n && !(c.up[p + 1] * c.up[p]).is_zero()) s.up_square_zero = false;
        if (p - 1 >= 0 && !(c.down[p - 1] * c.down[p]).is_zero()) s.down_square_zero = false;
        Mat anti(c.dims[p], c.dims[p]);
        if (p + 1 <= n) anti += c.down[p + 1] * c.up[p];
        if (p - 1 >= 0) anti += c.up[p - 1] * c.down[p];
        if (!anti.is_zero()) s.anticommute = false;
    }
    return s;
}

// Verdict pair for the two mixed complexes: the chain side squares to zero
// exactly for stable AYD data, the cochain side for unimodular-stable AYD
// data. Runs on raw maps so it accepts invalid data and reports the verdicts.
struct MixedReport {
    MixedSide chain, cochain;
    ModuleReport module_rep;
    ComoduleReport comodule_rep;
    SaydReport sayd_rep;
};

inline MixedReport mixed_check(const LieAlgebra& g, const SaydModule& mod) {
    MixedReport r;
    r.chain = square_check(chain_maps(g, mod));
    r.cochain = square_check(cochain_maps(g, mod));
    r.module_rep = check_module(g, mod.action);
    r.comodule_rep = check_comodule(mod.coaction);
    r.sayd_rep = check_sayd(g, mod);
    return r;
}

// Betti numbers of a cochain sequence maps[p]: dims[p] -> dims[p+1],
// betti[p] = dim ker(maps[p]) - rank(maps[p-1]).
inline std::vector<int> betti_numbers(const std::vector<int>& dims, const std::vector<Mat>& maps) {
    std::vector<int> betti(dims.size());
    std::vector<int> ranks(maps.size());
    for (std::size_t p = 0; p < maps.size(); ++p) ranks[p] = rank(maps[p]);
    for (std::size_t p = 0; p < dims.size(); ++p) {
        int b = dims[p];
        if (p < maps.size()) b -= ranks[p];
        if (p >= 1) b -= ranks[p - 1];
        betti[p] = b;
    }
    return betti;
}

// H^p of (Lambda^* g* (x) V, d_CE).
inline std::vector<int> ce_cochain_betti(const LieAlgebra& g, const SaydModule& mod) {
    ComplexMaps c = cochain_maps(g, mod);
    if (!square_check(c).up_square_zero) throw RefusedError("d_CE does not square to zero (module law fails)");
    std::vector<Mat> maps(c.up.begin(), c.up.end() - 1);
    return betti_numbers(c.dims, maps);
}

// H_p of (Lambda^* g (x) V, del_CE).
inline std::vector<int> ce_chain_betti(const LieAlgebra& g, const SaydModule& mod) {
    ComplexMaps c = chain_maps(g, mod);
    if (!square_check(c).down_square_zero) throw RefusedError("del_CE does not square to zero (module law fails)");
    // As a cochain sequence in reversed grading: maps[t]: K_{n-t} -> K_{n-t-1}.
    std::vector<int> dims;
    std::vector<Mat> maps;
    for (int p = c.n; p >= 0; --p) dims.push_back(c.dims[p]);
    for (int p = c.n; p >= 1; --p) maps.push_back(c.down[p]);
    std::vector<int> rev = betti_numbers(dims, maps);
    std::vector<int> betti(rev.rbegin(), rev.rend());
    return betti;
}

namespace detail {

// Degrees m contributing to total degree s: m = s, s-2, ... down to >= 0,
// capped at n, listed ascending.
inline std::vector<int> staircase_components(int s, int n) {
    std::vector<int> comps;
    for (int m = s % 2; m <= n && m <= s; m += 2) comps.push_back(m);
    return comps;
}

inline Mat staircase_block(const ComplexMaps& c, const std::vector<int>& src, const std::vector<int>& dst) {
    std::vector<int> dst_offset(dst.size() + 1, 0);
    for (std::size_t i = 0; i < dst.size(); ++i) dst_offset[i + 1] = dst_offset[i] + c.dims[dst[i]];
    std::vector<int> src_offset(src.size() + 1, 0);
    for (std::size_t i = 0; i < src.size(); ++i) src_offset[i + 1] = src_offset[i] + c.dims[src[i]];
    Mat d(dst_offset.back(), src_offset.back());
    auto put = [&](const Mat& block, int row0, int col0) {
        for (int r = 0; r < block.rows(); ++r)
            for (int cc = 0; cc < block.cols(); ++cc)
                if (sgn(block(r, cc)) != 0) d(row0 + r, col0 + cc) = block(r, cc);
    };
    for (std::size_t i = 0; i < src.size(); ++i) {
        int m = src[i];
        for (std::size_t o = 0; o < dst.size(); ++o) {
            if (dst[o] == m + 1 && m + 1 <= c.n) put(c.up[m], dst_offset[o], src_offset[i]);
            if (dst[o] == m - 1 && m - 1 >= 0) put(c.down[m], dst_offset[o], src_offset[i]);
        }
    }
    return d;
}

}  // namespace detail

struct TotalComplexReport {
    std::vector<int> hc_dims;   // dim of the total space at degree s
    std::vector<int> hc_betti;  // s = 0..smax
    std::array<int, 2> hp_dims{};
    std::array<int, 2> hp_betti{};
};

// Cyclic staircase and 2-periodic total complexes of the chain-side mixed
// complex (del_CE + del_K). Refused unless the chain side squares to zero.
inline TotalComplexReport total_complexes(const LieAlgebra& g, const SaydModule& mod, int smax) {
    ComplexMaps c = chain_maps(g, mod);
    if (!square_check(c).mixed())
        throw RefusedError("mixed complex conditions fail (need module + comodule + AYD + stability)");
    TotalComplexReport rep;
    std::vector<Mat> d(smax + 1);
    for (int s = 0; s <= smax; ++s) {
        std::vector<int> src = detail::staircase_components(s, c.n);
        std::vector<int> dst = detail::staircase_components(s + 1, c.n);
        d[s] = detail::staircase_block(c, src, dst);
        rep.hc_dims.push_back(d[s].cols());
    }
    std::vector<int> ranks(smax + 1);
    for (int s = 0; s <= smax; ++s) ranks[s] = rank(d[s]);
    for (int s = 0; s <= smax; ++s) {
        int b = rep.hc_dims[s] - ranks[s];
        if (s >= 1) b -= ranks[s - 1];
        rep.hc_betti.push_back(b);
    }
    std::vector<int> evens, odds;
    for (int m = 0; m <= c.n; m += 2) evens.push_back(m);
    for (int m = 1; m <= c.n; m += 2) odds.push_back(m);
    Mat d_even = detail::staircase_block(c, evens, odds);
    Mat d_odd = detail::staircase_block(c, odds, evens);
    rep.hp_dims = {d_even.cols(), d_odd.cols()};
    int re = rank(d_even), ro = rank(d_odd);
    rep.hp_betti = {rep.hp_dims[0] - re - ro, rep.hp_dims[1] - ro - re};
    return rep;
}

}  // namespace liecoh
