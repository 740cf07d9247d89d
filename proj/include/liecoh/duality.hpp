#pragma once

#include <vector>

#include "liecoh/complexes.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/sayd.hpp"

namespace liecoh {

// Duality transport D_p: Lambda^p g* (x) V -> Lambda^{n-p} g (x) V',
// th^I (x) v |-> iota(th^{i_p})...iota(th^{i_1})(X_1 ^..^ X_n) (x) v,
// contraction in the first slot. V' carries the action twisted by +delta
// (the top exterior power acts by the trace character); the coaction is
// untouched.
inline std::vector<Mat> duality_maps(int n, int m) {
    ExteriorBasis ext(n);
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
    std::vector<Mat> D;
    for (int p = 0; p <= n; ++p) {
        Mat d(ext.dim(n - p) * m, ext.dim(p) * m);
        for (int bi = 0; bi < ext.dim(p); ++bi) {
            std::uint32_t mask = ext.mask(p, bi);
            std::uint32_t rest = full;
            int s = 1;
            for (int i : ExteriorBasis::tuple_of(mask)) {
                s *= below_sign(rest, i);
                rest &= ~(1u << i);
            }
            int row_block = ext.index_of(rest);
            for (int v = 0; v < m; ++v) d(row_block * m + v, bi * m + v) = Rat(s);
        }
        D.push_back(std::move(d));
    }
    return D;
}

// Inverse transport: X_J (x) v |-> merge_sign(comp(J), J) th^{comp(J)} (x) v.
inline std::vector<Mat> duality_inverse_maps(int n, int m) {
    ExteriorBasis ext(n);
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
    std::vector<Mat> Dinv;
    for (int q = 0; q <= n; ++q) {
        Mat d(ext.dim(n - q) * m, ext.dim(q) * m);
        for (int bi = 0; bi < ext.dim(q); ++bi) {
            std::uint32_t mask = ext.mask(q, bi);
            std::uint32_t comp = full & ~mask;
            int s = merge_sign(comp, mask);
            int row_block = ext.index_of(comp);
            for (int v = 0; v < m; ++v) d(row_block * m + v, bi * m + v) = Rat(s);
        }
        Dinv.push_back(std::move(d));
    }
    return Dinv;
}

struct DualityReport {
    int n = 0;
    bool invertible = false;
    // D_{p+1} d_CE[p] = ce_signs[p] * del_CE[n-p] D_p; sign recorded per
    // degree, 0 when both sides vanish identically.
    bool ce_ok = false;
    std::vector<int> ce_signs;
    // D_{p-1} d_K[p] = (-1)^{n-q-1} del_K[q] D_p with q = n - p the chain
    // degree of the image.
    bool koszul_ok = false;
    bool betti_symmetric = false;
    std::vector<int> cochain_betti;        // H^p(g, V)
    std::vector<int> twisted_chain_betti;  // H_q(g, V twisted by +delta)
    bool ok() const { return invertible && ce_ok && koszul_ok && betti_symmetric; }
};

inline DualityReport duality_check(const LieAlgebra& g, const SaydModule& mod) {
    int n = g.dim(), m = mod.action.m;
    DualityReport rep;
    rep.n = n;
    SaydModule twisted{delta_twist(g, mod.action, +1), mod.coaction};
    ComplexMaps co = build_cochain_diffs(g, mod);
    ComplexMaps ch = build_chain_diffs(g, twisted);
    std::vector<Mat> D = duality_maps(n, m);
    std::vector<Mat> Dinv = duality_inverse_maps(n, m);

    rep.invertible = true;
    for (int p = 0; p <= n; ++p)
        if (Dinv[n - p] * D[p] != Mat::identity(co.dims[p])) rep.invertible = false;

    rep.ce_ok = true;
    rep.ce_signs.assign(n + 1, 0);
    for (int p = 0; p < n; ++p) {
        Mat lhs = D[p + 1] * co.up[p];
        Mat rhs = ch.down[n - p] * D[p];
        if (lhs.is_zero() && rhs.is_zero()) continue;
        if (lhs == rhs)
            rep.ce_signs[p] = 1;
        else if (lhs == rhs * Rat(-1))
            rep.ce_signs[p] = -1;
        else
            rep.ce_ok = false;
    }

    rep.koszul_ok = true;
    for (int p = 1; p <= n; ++p) {
        int q = n - p;
        Rat sign((n - q - 1) % 2 == 0 ? 1 : -1);
        Mat lhs = D[p - 1] * co.down[p];
        Mat rhs = ch.up[q] * D[p];
        if (lhs != rhs * sign) rep.koszul_ok = false;
    }

    rep.cochain_betti = ce_cochain_betti(g, mod);
    rep.twisted_chain_betti = ce_chain_betti(g, twisted);
    rep.betti_symmetric = true;
    for (int p = 0; p <= n; ++p)
        if (rep.cochain_betti[p] != rep.twisted_chain_betti[n - p]) rep.betti_symmetric = false;

    return rep;
}

}  // namespace liecoh
