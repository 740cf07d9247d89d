#pragma once

#include <map>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/sayd.hpp"

namespace liecoh {

// Monomial basis of the symmetric algebra on th^1..th^N truncated at total
// degree <= cap (count binomial(N + cap, cap)). Ordered by total degree, then
// lexicographically on the nondecreasing index tuple, so for N = 3, cap = 1
// the basis reads 1, th^1, th^2, th^3 and degree 2 continues th^1 th^1,
// th^1 th^2, ...
class PolyTruncBasis {
  public:
    PolyTruncBasis(int n, int cap) : n_(n), cap_(cap) {
        if (n < 0 || cap < 0) throw std::invalid_argument("bad truncation parameters");
        std::vector<int> e(n, 0);
        for (int d = 0; d <= cap; ++d) gen(d, 0, e);
        for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = int(i);
    }

    int n() const { return n_; }
    int cap() const { return cap_; }
    int size() const { return int(exps_.size()); }
    const std::vector<int>& exponents(int idx) const { return exps_.at(idx); }
    static int total_degree(const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    // -1 when the monomial falls outside the truncation.
    int index_of(const std::vector<int>& e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : it->second;
    }

  private:
    // Emit all degree-d monomials with smallest factor index >= next, in index
    // tuple order: recursion chooses the next factor.
    void gen(int d, int next, std::vector<int>& e) {
        if (d == 0) {
            exps_.push_back(e);
            return;
        }
        for (int i = next; i < n_; ++i) {
            ++e[i];
            gen(d - 1, i, e);
            --e[i];
        }
    }

    int n_, cap_;
    std::vector<std::vector<int>> exps_;
    std::map<std::vector<int>, int> index_;
};

// Truncated Weil coefficients: V = S(g*) truncated at degree cap.
// Action: the right coadjoint action th^i . X_j = C^i_jl th^l extended as a
// derivation (degree preserving). Coaction: the Koszul coaction
// nabla(v) = sum_j X_j (x) v th^j, i.e. A^j = multiplication by th^j with
// degrees above cap truncated to zero.
struct TruncatedWeil {
    PolyTruncBasis basis;
    SaydModule mod;
};

inline TruncatedWeil build_truncated_weil(const LieAlgebra& g, int cap) {
    int n = g.dim();
    PolyTruncBasis basis(n, cap);
    int m = basis.size();
    std::vector<Mat> B(n, Mat(m, m)), A(n, Mat(m, m));
    for (int i = 0; i < m; ++i) {
        const std::vector<int>& e = basis.exponents(i);
        for (int j = 0; j < n; ++j) {
            // (th^e) . X_j = sum_t e_t th^(e - d_t) (th^t . X_j)
            for (int t = 0; t < n; ++t) {
                if (e[t] == 0) continue;
                for (int l = 0; l < n; ++l) {
                    Rat c = g.structure(j, l, t);  // C^t_jl
                    if (sgn(c) == 0) continue;
                    std::vector<int> f = e;
                    --f[t];
                    ++f[l];
                    B[j](i, basis.index_of(f)) += Rat(e[t]) * c;
                }
            }
            std::vector<int> f = e;
            ++f[j];
            int k = basis.index_of(f);
            if (k >= 0) A[j](i, k) = 1;
        }
    }
    TruncatedWeil w{std::move(basis), {}};
    w.mod.action = make_action(n, m, std::move(B));
    w.mod.coaction = make_coaction(n, m, std::move(A));
    return w;
}

// Truncated Weyl algebra window. Operators act on polynomials of total degree
// <= D in N coordinates; matrices are in the standard column convention
// ([T] e_k = coordinates of T(monomial_k)), so operator composition is the
// matrix product. Q^i multiplies by the i-th coordinate (degree D output is
// truncated to zero), P_i differentiates. tau(X_i) = C^l_ki P_l Q^k.
struct WeylOps {
    PolyTruncBasis basis;
    std::vector<Mat> P, Q, tau;
    // Action/coaction data induced on the truncation, in the usual row
    // convention: B_j = (-tau_j)^T (the right action v . X := -tau(X) v),
    // A^j = (Q^j)^T. Below the top degree this is the truncated Weil module
    // twisted by +delta.
    SaydModule induced;
};

inline WeylOps build_weyl_ops(const LieAlgebra& g, int deg_cap) {
    int n = g.dim();
    PolyTruncBasis basis(n, deg_cap);
    int m = basis.size();
    std::vector<Mat> P(n, Mat(m, m)), Q(n, Mat(m, m));
    for (int k = 0; k < m; ++k) {
        const std::vector<int>& e = basis.exponents(k);
        for (int i = 0; i < n; ++i) {
            std::vector<int> up = e;
            ++up[i];
            int kk = basis.index_of(up);
            if (kk >= 0) Q[i](kk, k) = 1;
            if (e[i] > 0) {
                std::vector<int> dn = e;
                --dn[i];
                P[i](basis.index_of(dn), k) = e[i];
            }
        }
    }
    std::vector<Mat> tau(n, Mat(m, m));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                Rat c = g.structure(k, i, l);  // C^l_ki
                if (sgn(c) != 0) tau[i] += c * (P[l] * Q[k]);
            }
    WeylOps ops{std::move(basis), std::move(P), std::move(Q), std::move(tau), {}};
    std::vector<Mat> B, A;
    for (int j = 0; j < n; ++j) {
        B.push_back(ops.tau[j].transpose() * Rat(-1));
        A.push_back(ops.Q[j].transpose());
    }
    ops.induced.action = make_action(n, m, std::move(B));
    ops.induced.coaction = make_coaction(n, m, std::move(A));
    return ops;
}

// True when op annihilates every basis monomial of total degree <= window.
inline bool vanishes_on_degree_le(const PolyTruncBasis& basis, const Mat& op, int window) {
    for (int k = 0; k < basis.size(); ++k) {
        if (PolyTruncBasis::total_degree(basis.exponents(k)) > window) continue;
        for (int r = 0; r < op.rows(); ++r)
            if (sgn(op(r, k)) != 0) return false;
    }
    return true;
}

struct WeylReport {
    bool heisenberg_ok = true;   // [P_i, Q^j] = delta^j_i I   on degree <= D-1
    bool tau_lie_map_ok = true;  // [tau_p, tau_q] = C^r_pq tau_r on degree <= D-1
    bool stability_ok = true;    // sum_i tau(X_i) Q^i = 0      on degree <= D-2
    bool phi_relation_ok = true;  // C^l_ki P_l Q^k Q^j = C^j_ki Q^k + Q^j tau_i on degree <= D-2
};

inline WeylReport check_weyl_window(const LieAlgebra& g, const WeylOps& ops) {
    WeylReport rep;
    int n = g.dim(), m = ops.basis.size(), d = ops.basis.cap();
    for (int i = 0; i < n && rep.heisenberg_ok; ++i)
        for (int j = 0; j < n; ++j) {
            Mat c = commutator(ops.P[i], ops.Q[j]);
            if (i == j) c -= Mat::identity(m);
            if (!vanishes_on_degree_le(ops.basis, c, d - 1)) {
                rep.heisenberg_ok = false;
                break;
            }
        }
    for (int p = 0; p < n && rep.tau_lie_map_ok; ++p)
        for (int q = p + 1; q < n; ++q) {
            Mat c = commutator(ops.tau[p], ops.tau[q]);
            for (int r = 0; r < n; ++r) {
                Rat s = g.structure(p, q, r);
                if (sgn(s) != 0) c -= s * ops.tau[r];
            }
            if (!vanishes_on_degree_le(ops.basis, c, d - 1)) {
                rep.tau_lie_map_ok = false;
                break;
            }
        }
    Mat stab(m, m);
    for (int i = 0; i < n; ++i) stab += ops.tau[i] * ops.Q[i];
    rep.stability_ok = vanishes_on_degree_le(ops.basis, stab, d - 2);
    for (int i = 0; i < n && rep.phi_relation_ok; ++i)
        for (int j = 0; j < n; ++j) {
            Mat lhs = ops.tau[i] * ops.Q[j];
            Mat rhs = ops.Q[j] * ops.tau[i];
            for (int k = 0; k < n; ++k) {
                Rat c = g.structure(k, i, j);  // C^j_ki
                if (sgn(c) != 0) rhs += c * ops.Q[k];
            }
            if (!vanishes_on_degree_le(ops.basis, lhs - rhs, d - 2)) {
                rep.phi_relation_ok = false;
                break;
            }
        }
    return rep;
}

}  // namespace liecoh
