#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

// Right action of g on an m-dim space V in row convention:
//   v^i . X_j = sum_k B[j](i, k) v^k.
// Composition (v . X_p) . X_q corresponds to the product B[p] B[q], so the
// right-module law reads [B_p, B_q] = sum_r C^r_pq B_r.
struct ActionMatrices {
    int n = 0;  // dim g
    int m = 0;  // dim V
    std::vector<Mat> B;
};

// Left g-coaction in the same row convention: nabla(v^i) = sum_{j,k}
// A[j](i, k) X_j (x) v^k. Comodule law: the A[j] commute pairwise.
struct CoactionMatrices {
    int n = 0;
    int m = 0;
    std::vector<Mat> A;
};

struct SaydModule {
    ActionMatrices action;
    CoactionMatrices coaction;
};

inline ActionMatrices make_action(int n, int m, std::vector<Mat> B) {
    if (int(B.size()) != n) throw std::invalid_argument("need one action matrix per generator");
    for (const Mat& b : B)
        if (b.rows() != m || b.cols() != m) throw std::invalid_argument("action matrix shape mismatch");
    return {n, m, std::move(B)};
}

inline CoactionMatrices make_coaction(int n, int m, std::vector<Mat> A) {
    if (int(A.size()) != n) throw std::invalid_argument("need one coaction matrix per generator");
    for (const Mat& a : A)
        if (a.rows() != m || a.cols() != m) throw std::invalid_argument("coaction matrix shape mismatch");
    return {n, m, std::move(A)};
}

inline CoactionMatrices trivial_coaction(int n, int m) {
    return {n, m, std::vector<Mat>(n, Mat(m, m))};
}

inline ActionMatrices trivial_action(int n, int m) {
    return {n, m, std::vector<Mat>(n, Mat(m, m))};
}

struct ModuleReport {
    bool ok = true;
    int p = -1, q = -1;  // first violated pair
    Mat defect;
};

// [B_p, B_q] - sum_r C^r_pq B_r = 0 for all p < q. m = 0 passes vacuously.
inline ModuleReport check_module(const LieAlgebra& g, const ActionMatrices& act) {
    if (act.n != g.dim()) throw std::invalid_argument("action generator count != dim g");
    for (int p = 0; p < act.n; ++p)
        for (int q = p + 1; q < act.n; ++q) {
            Mat d = commutator(act.B[p], act.B[q]);
            for (int r = 0; r < act.n; ++r) {
                Rat c = g.structure(p, q, r);
                if (sgn(c) != 0) d -= c * act.B[r];
            }
            if (!d.is_zero()) return {false, p, q, d};
        }
    return {};
}

struct ComoduleReport {
    bool commuting = true;
    int j1 = -1, j2 = -1;
    Mat defect;
    bool conilpotent = true;
    int conilpotency_index = 0;  // least t with all length-t products zero
};

// Commutativity of the A^j plus local conilpotence. Conilpotence is decided
// through the descending chain S_0 = V, S_{t+1} = sum_j S_t A^j of row spans;
// S_t = 0 exactly when all length-t products of coaction matrices vanish, and
// the chain is stationary within m steps.
inline ComoduleReport check_comodule(const CoactionMatrices& co) {
    ComoduleReport rep;
    for (int j1 = 0; j1 < co.n && rep.commuting; ++j1)
        for (int j2 = j1 + 1; j2 < co.n; ++j2) {
            Mat d = commutator(co.A[j1], co.A[j2]);
            if (!d.is_zero()) {
                rep.commuting = false;
                rep.j1 = j1;
                rep.j2 = j2;
                rep.defect = d;
                break;
            }
        }
    Mat span = Mat::identity(co.m);
    int t = 0;
    while (span.rows() > 0 && t <= co.m) {
        Mat next(span.rows() * co.n, co.m);
        for (int j = 0; j < co.n; ++j) {
            Mat img = span * co.A[j];
            for (int r = 0; r < span.rows(); ++r)
                for (int c = 0; c < co.m; ++c) next(j * span.rows() + r, c) = img(r, c);
        }
        RowSpace rs(next);
        span = rs.basis();
        ++t;
    }
    rep.conilpotent = span.rows() == 0;
    rep.conilpotency_index = rep.conilpotent ? t : -1;
    return rep;
}

struct SaydReport {
    bool ayd = true;
    int ayd_q = -1, ayd_j = -1;
    Mat ayd_defect;
    bool stable = true;
    Mat stability_defect;
    bool unimodular_stable = true;
    Mat unimodular_defect;
};

// AYD: [B_q, A^j] = sum_s A^s C^j_sq for all q, j.
// Stability: sum_j A^j B_j = 0 ((v <| th^j) . X_j summed).
// Unimodular stability: sum_j B_j A^j = 0 ((v . X_j) <| th^j summed).
inline SaydReport check_sayd(const LieAlgebra& g, const SaydModule& mod) {
    if (mod.action.n != g.dim() || mod.coaction.n != g.dim() || mod.action.m != mod.coaction.m)
        throw std::invalid_argument("action/coaction shape mismatch");
    SaydReport rep;
    int n = g.dim(), m = mod.action.m;
    for (int q = 0; q < n && rep.ayd; ++q)
        for (int j = 0; j < n; ++j) {
            Mat d = commutator(mod.action.B[q], mod.coaction.A[j]);
            for (int s = 0; s < n; ++s) {
                Rat c = g.structure(s, q, j);  // C^j_sq
                if (sgn(c) != 0) d -= c * mod.coaction.A[s];
            }
            if (!d.is_zero()) {
                rep.ayd = false;
                rep.ayd_q = q;
                rep.ayd_j = j;
                rep.ayd_defect = d;
                break;
            }
        }
    Mat stab(m, m), ustab(m, m);
    for (int j = 0; j < n; ++j) {
        stab += mod.coaction.A[j] * mod.action.B[j];
        ustab += mod.action.B[j] * mod.coaction.A[j];
    }
    if (!stab.is_zero()) {
        rep.stable = false;
        rep.stability_defect = stab;
    }
    if (!ustab.is_zero()) {
        rep.unimodular_stable = false;
        rep.unimodular_defect = ustab;
    }
    return rep;
}

inline bool is_sayd(const LieAlgebra& g, const SaydModule& mod) {
    SaydReport r = check_sayd(g, mod);
    return check_module(g, mod.action).ok && check_comodule(mod.coaction).commuting && r.ayd && r.stable;
}

// B_j -> B_j + sign * delta(X_j) * I. With sign = +1 this is (x) C_delta in
// the stability direction (unimodular stable <-> twist stable); the Poincare
// transport twists the chain side by +delta as well.
inline ActionMatrices delta_twist(const LieAlgebra& g, const ActionMatrices& act, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
    std::vector<Rat> delta = modular_character(g);
    ActionMatrices out = act;
    for (int j = 0; j < act.n; ++j) {
        Mat shift = Mat::identity(act.m);
        shift *= sign * delta[j];
        out.B[j] += shift;
    }
    return out;
}

// Tensor product of AYD data over the same g: B_j (x) I + I (x) B'_j and
// A^j (x) I + I (x) A'^j. Preserves the AYD condition; stability is not
// preserved in general.
inline SaydModule tensor_ayd(const SaydModule& a, const SaydModule& b) {
    if (a.action.n != b.action.n) throw std::invalid_argument("tensor over different Lie algebras");
    int n = a.action.n;
    int m = a.action.m * b.action.m;
    SaydModule out;
    out.action.n = out.coaction.n = n;
    out.action.m = out.coaction.m = m;
    Mat ia = Mat::identity(a.action.m), ib = Mat::identity(b.action.m);
    for (int j = 0; j < n; ++j) {
        out.action.B.push_back(kron(a.action.B[j], ib) + kron(ia, b.action.B[j]));
        out.coaction.A.push_back(kron(a.coaction.A[j], ib) + kron(ia, b.coaction.A[j]));
    }
    return out;
}

// Transport along a basis change Y_q = sum_l gamma^l_q X_l:
//   B~_q = sum_l gamma^l_q B_l,   A~^j = sum_l A^l (gamma^{-1})^j_l.
inline SaydModule change_basis(const SaydModule& mod, const Mat& gamma) {
    int n = mod.action.n;
    if (gamma.rows() != n || gamma.cols() != n) throw std::invalid_argument("basis matrix shape mismatch");
    Mat gi = inverse(gamma);
    SaydModule out;
    out.action.n = out.coaction.n = n;
    out.action.m = out.coaction.m = mod.action.m;
    for (int q = 0; q < n; ++q) {
        Mat bq(mod.action.m, mod.action.m), aj(mod.action.m, mod.action.m);
        for (int l = 0; l < n; ++l) {
            if (sgn(gamma(l, q)) != 0) bq += gamma(l, q) * mod.action.B[l];
            if (sgn(gi(q, l)) != 0) aj += gi(q, l) * mod.coaction.A[l];
        }
        out.action.B.push_back(bq);
        out.coaction.A.push_back(aj);
    }
    return out;
}

struct QuadraticReport {
    bool identically_commutative = true;
    bool symbolic = true;  // full bilinear check vs basis + sampled combinations
    int a = -1, b = -1, j1 = -1, j2 = -1;
    Mat defect;
};

struct SolveReport {
    int dim = 0;
    std::vector<CoactionMatrices> basis;  // canonical reduced basis
    QuadraticReport quadratic;
};

// Solves the linear part of the SAYD conditions for a fixed action: AYD for
// all (q, j) plus stability, in the N*m^2 unknowns A^j(i, k) ordered
// lexicographically by (j, i, k). Exact elimination; the canonical basis comes
// from the RREF nullspace (one vector per free unknown, ascending).
//
// The comodule condition is quadratic, so it is reported separately: for a
// span sum_a t_a S_a commutativity is equivalent to the symmetrized bilinear
// system [S_a^j1, S_b^j2] + [S_b^j1, S_a^j2] = 0; that full check runs when
// the span dimension is <= 4, otherwise the basis pairs and seeded integer
// combinations are sampled.
inline SolveReport solve_ayd_linear(const LieAlgebra& g, const ActionMatrices& act, std::uint64_t seed = 0) {
    if (act.n != g.dim()) throw std::invalid_argument("action generator count != dim g");
    int n = act.n, m = act.m;
    int unknowns = n * m * m;
    auto idx = [m](int j, int i, int k) { return (j * m + i) * m + k; };
    std::vector<std::vector<Rat>> rows;
    // AYD(q, j): B_q A^j - A^j B_q - sum_s C^j_sq A^s = 0, entry (r, c).
    for (int q = 0; q < n; ++q)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    std::vector<Rat> eq(unknowns);
                    for (int t = 0; t < m; ++t) {
                        eq[idx(j, t, c)] += act.B[q](r, t);
                        eq[idx(j, r, t)] -= act.B[q](t, c);
                    }
                    for (int s = 0; s < n; ++s) {
                        Rat cs = g.structure(s, q, j);
                        if (sgn(cs) != 0) eq[idx(s, r, c)] -= cs;
                    }
                    rows.push_back(std::move(eq));
                }
    // Stability: sum_j A^j B_j = 0, entry (r, c).
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            std::vector<Rat> eq(unknowns);
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < m; ++t) eq[idx(j, r, t)] += act.B[j](t, c);
            rows.push_back(std::move(eq));
        }
    Mat sys(int(rows.size()), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) sys(int(r), c) = rows[r][c];
    std::vector<std::vector<Rat>> null = nullspace(sys);

    SolveReport rep;
    rep.dim = int(null.size());
    for (const auto& v : null) {
        CoactionMatrices co;
        co.n = n;
        co.m = m;
        for (int j = 0; j < n; ++j) {
            Mat a(m, m);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k) a(i, k) = v[idx(j, i, k)];
            co.A.push_back(std::move(a));
        }
        rep.basis.push_back(std::move(co));
    }

    auto sym_defect = [&](const CoactionMatrices& sa, const CoactionMatrices& sb, int j1, int j2) {
        return commutator(sa.A[j1], sb.A[j2]) + commutator(sb.A[j1], sa.A[j2]);
    };
    QuadraticReport& qr = rep.quadratic;
    if (rep.dim <= 4) {
        for (int a = 0; a < rep.dim && qr.identically_commutative; ++a)
            for (int b = a; b < rep.dim && qr.identically_commutative; ++b)
                for (int j1 = 0; j1 < n && qr.identically_commutative; ++j1)
                    for (int j2 = j1 + 1; j2 < n; ++j2) {
                        Mat d = sym_defect(rep.basis[a], rep.basis[b], j1, j2);
                        if (!d.is_zero()) {
                            qr = {false, true, a, b, j1, j2, d};
                            break;
                        }
                    }
    } else {
        qr.symbolic = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-2, 2);
        auto check_one = [&](const CoactionMatrices& co, int tag) {
            for (int j1 = 0; j1 < n && qr.identically_commutative; ++j1)
                for (int j2 = j1 + 1; j2 < n; ++j2) {
                    Mat d = commutator(co.A[j1], co.A[j2]);
                    if (!d.is_zero()) {
                        qr.identically_commutative = false;
                        qr.a = qr.b = tag;
                        qr.j1 = j1;
                        qr.j2 = j2;
                        qr.defect = d;
                        break;
                    }
                }
        };
        for (int a = 0; a < rep.dim && qr.identically_commutative; ++a) check_one(rep.basis[a], a);
        for (int s = 0; s < 32 && qr.identically_commutative; ++s) {
            CoactionMatrices combo;
            combo.n = n;
            combo.m = m;
            combo.A.assign(n, Mat(m, m));
            for (int a = 0; a < rep.dim; ++a) {
                Rat f(coeff(rng));
                if (sgn(f) == 0) continue;
                for (int j = 0; j < n; ++j) combo.A[j] += f * rep.basis[a].A[j];
            }
            check_one(combo, -2);
        }
    }
    return rep;
}

}  // namespace liecoh
