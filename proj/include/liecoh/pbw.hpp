#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

// Element of the enveloping algebra in the ordered-monomial basis
// X_1^{e_1} ... X_n^{e_n}, keyed by exponent vector.
using Expo = std::vector<int>;

struct PBWElement {
    int n = 0;
    std::map<Expo, Rat> terms;

    void add_term(const Expo& e, const Rat& c) {
        if (sgn(c) == 0) return;
        Rat& slot = terms[e];
        slot += c;
        if (sgn(slot) == 0) terms.erase(e);
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const PBWElement& o) const { return n == o.n && terms == o.terms; }
    PBWElement& operator+=(const PBWElement& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    PBWElement& operator-=(const PBWElement& o) {
        for (const auto& [e, c] : o.terms) add_term(e, Rat(-1) * c);
        return *this;
    }
    PBWElement& operator*=(const Rat& s) {
        if (sgn(s) == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [e, c] : terms) c *= s;
        return *this;
    }
};

inline PBWElement pbw_zero(int n) { return PBWElement{n, {}}; }

inline PBWElement pbw_one(int n) {
    PBWElement r{n, {}};
    r.add_term(Expo(n, 0), Rat(1));
    return r;
}

inline PBWElement pbw_monomial(int n, const Expo& e, const Rat& c = Rat(1)) {
    PBWElement r{n, {}};
    r.add_term(e, c);
    return r;
}

inline PBWElement pbw_gen(int n, int i) {
    Expo e(n, 0);
    e[i] = 1;
    return pbw_monomial(n, e);
}

inline int expo_degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Right multiplication of an ordered monomial by one generator, straightened
// through X_t X_j = X_j X_t + [X_t, X_j] for t > j. Terminates: the bracket
// terms drop total degree, the swap term has all indices <= t.
inline PBWElement pbw_mul_gen(const LieAlgebra& g, const Expo& e, int j) {
    int n = g.dim();
    int t = -1;
    for (int i = n - 1; i >= 0; --i)
        if (e[i] > 0) {
            t = i;
            break;
        }
    if (t <= j) {
        Expo f = e;
        f[j] += 1;
        return pbw_monomial(n, f);
    }
    Expo head = e;
    head[t] -= 1;
    PBWElement swapped = pbw_mul_gen(g, head, j);
    PBWElement out = pbw_zero(n);
    for (const auto& [f, c] : swapped.terms) {
        PBWElement piece = pbw_mul_gen(g, f, t);
        piece *= c;
        out += piece;
    }
    for (int k = 0; k < n; ++k) {
        Rat c = g.structure(t, j, k);  // C^k_{tj}
        if (sgn(c) == 0) continue;
        PBWElement piece = pbw_mul_gen(g, head, k);
        piece *= c;
        out += piece;
    }
    return out;
}

inline PBWElement pbw_mul_gen(const LieAlgebra& g, const PBWElement& a, int j) {
    PBWElement out = pbw_zero(a.n);
    for (const auto& [e, c] : a.terms) {
        PBWElement piece = pbw_mul_gen(g, e, j);
        piece *= c;
        out += piece;
    }
    return out;
}

inline PBWElement pbw_mul(const LieAlgebra& g, const PBWElement& a, const PBWElement& b) {
    PBWElement out = pbw_zero(a.n);
    for (const auto& [f, cb] : b.terms) {
        PBWElement acc = a;
        for (int i = 0; i < (int)f.size(); ++i)
            for (int rep = 0; rep < f[i]; ++rep) acc = pbw_mul_gen(g, acc, i);
        acc *= cb;
        out += acc;
    }
    return out;
}

// Product of the generators listed in `word` (arbitrary order), straightened.
inline PBWElement pbw_word(const LieAlgebra& g, const std::vector<int>& word) {
    PBWElement acc = pbw_one(g.dim());
    for (int j : word) acc = pbw_mul_gen(g, acc, j);
    return acc;
}

inline Rat pbw_counit(const PBWElement& a) {
    auto it = a.terms.find(Expo(a.n, 0));
    return it == a.terms.end() ? Rat(0) : it->second;
}

// All splits of a monomial under the coproduct: Delta(X^e) =
// sum_{f <= e} prod_i binom(e_i, f_i) X^f (x) X^{e-f}.
inline std::vector<std::pair<std::pair<Expo, Expo>, Rat>> expo_splits(const Expo& e) {
    std::vector<std::pair<std::pair<Expo, Expo>, Rat>> out;
    int n = (int)e.size();
    Expo f(n, 0);
    auto rec = [&](auto&& self, int i, Int coef) -> void {
        if (i == n) {
            Expo rest(n);
            for (int k = 0; k < n; ++k) rest[k] = e[k] - f[k];
            out.push_back({{f, rest}, Rat(coef)});
            return;
        }
        for (int x = 0; x <= e[i]; ++x) {
            f[i] = x;
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), e[i], x);
            self(self, i + 1, coef * b);
        }
        f[i] = 0;
    };
    rec(rec, 0, Int(1));
    return out;
}

// Antipode: S(X^e) = (-1)^{|e|} times the generators of X^e multiplied in
// reversed order, straightened back into the ordered basis.
inline PBWElement pbw_antipode(const LieAlgebra& g, const PBWElement& a) {
    int n = a.n;
    PBWElement out = pbw_zero(n);
    for (const auto& [e, c] : a.terms) {
        PBWElement acc = pbw_one(n);
        for (int i = n - 1; i >= 0; --i)
            for (int rep = 0; rep < e[i]; ++rep) acc = pbw_mul_gen(g, acc, i);
        acc *= c * Rat(expo_degree(e) % 2 == 0 ? 1 : -1);
        out += acc;
    }
    return out;
}

// Right adjoint action w <| X_j = w X_j - X_j w.
inline PBWElement pbw_ad_right(const LieAlgebra& g, const PBWElement& w, int j) {
    PBWElement out = pbw_mul_gen(g, w, j);
    out -= pbw_mul(g, pbw_gen(g.dim(), j), w);
    return out;
}

inline std::string pbw_str(const LieAlgebra& g, const PBWElement& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : a.terms) {
        std::string mono;
        for (int i = 0; i < (int)e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += g.names()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool unit_coef = mono.empty() ? false : (c == Rat(1) || c == Rat(-1));
        std::string coef;
        if (c == Rat(1))
            coef = unit_coef ? "" : "1";
        else if (c == Rat(-1))
            coef = unit_coef ? "-" : "-1";
        else
            coef = rat_str(c);
        std::string term = coef;
        if (!mono.empty()) {
            if (!coef.empty() && coef != "-") term += "*";
            term += mono;
        }
        if (term.empty()) term = "1";
        if (!s.empty() && term[0] != '-') s += " + ";
        else if (!s.empty()) {
            s += " - ";
            term = term.substr(1);
        }
        s += term;
    }
    return s;
}

namespace detail {

// Element of U (x) U, for the Hopf axiom checks.
using Pbw2 = std::map<std::pair<Expo, Expo>, Rat>;

inline void add2(Pbw2& t, const Expo& a, const Expo& b, const Rat& c) {
    if (sgn(c) == 0) return;
    Rat& slot = t[{a, b}];
    slot += c;
    if (sgn(slot) == 0) t.erase({a, b});
}

inline Pbw2 coproduct2(const PBWElement& a) {
    Pbw2 t;
    for (const auto& [e, c] : a.terms)
        for (const auto& [split, coef] : expo_splits(e)) add2(t, split.first, split.second, c * coef);
    return t;
}

inline Pbw2 mul2(const LieAlgebra& g, const Pbw2& s, const Pbw2& t) {
    Pbw2 out;
    for (const auto& [ab, c1] : s)
        for (const auto& [cd, c2] : t) {
            PBWElement left = pbw_mul(g, pbw_monomial(g.dim(), ab.first), pbw_monomial(g.dim(), cd.first));
            PBWElement right = pbw_mul(g, pbw_monomial(g.dim(), ab.second), pbw_monomial(g.dim(), cd.second));
            for (const auto& [e1, d1] : left.terms)
                for (const auto& [e2, d2] : right.terms) add2(out, e1, e2, c1 * c2 * d1 * d2);
        }
    return out;
}

}  // namespace detail

struct HopfReport {
    bool coassociative = true;
    bool counit_ok = true;
    bool antipode_ok = true;
    bool coproduct_multiplicative = true;
    bool ok() const { return coassociative && counit_ok && antipode_ok && coproduct_multiplicative; }
};

// Checks the Hopf algebra axioms on all ordered monomials of total degree
// <= max_deg (and pairs of total degree <= max_deg for multiplicativity).
inline HopfReport check_hopf_axioms(const LieAlgebra& g, int max_deg) {
    int n = g.dim();
    std::vector<Expo> monos;
    Expo e(n, 0);
    auto gen = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            monos.push_back(e);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            self(self, i + 1, left - x);
        }
        e[i] = 0;
    };
    gen(gen, 0, max_deg);

    HopfReport rep;
    for (const Expo& m : monos) {
        auto splits = expo_splits(m);
        // (Delta (x) id)Delta = (id (x) Delta)Delta, tracked as triples.
        std::map<std::tuple<Expo, Expo, Expo>, Rat> lhs, rhs;
        for (const auto& [split, c] : splits) {
            for (const auto& [s2, c2] : expo_splits(split.first)) {
                Rat& slot = lhs[{s2.first, s2.second, split.second}];
                slot += c * c2;
                if (sgn(slot) == 0) lhs.erase({s2.first, s2.second, split.second});
            }
            for (const auto& [s2, c2] : expo_splits(split.second)) {
                Rat& slot = rhs[{split.first, s2.first, s2.second}];
                slot += c * c2;
                if (sgn(slot) == 0) rhs.erase({split.first, s2.first, s2.second});
            }
        }
        if (lhs != rhs) rep.coassociative = false;

        // (eps (x) id)Delta = id = (id (x) eps)Delta.
        PBWElement left = pbw_zero(n), right = pbw_zero(n);
        for (const auto& [split, c] : splits) {
            if (expo_degree(split.first) == 0) left.add_term(split.second, c);
            if (expo_degree(split.second) == 0) right.add_term(split.first, c);
        }
        PBWElement self = pbw_monomial(n, m);
        if (!(left == self) || !(right == self)) rep.counit_ok = false;

        // mu(S (x) id)Delta = eps(.) 1 = mu(id (x) S)Delta.
        PBWElement l2 = pbw_zero(n), r2 = pbw_zero(n);
        for (const auto& [split, c] : splits) {
            PBWElement sa = pbw_antipode(g, pbw_monomial(n, split.first));
            PBWElement t1 = pbw_mul(g, sa, pbw_monomial(n, split.second));
            t1 *= c;
            l2 += t1;
            PBWElement sb = pbw_antipode(g, pbw_monomial(n, split.second));
            PBWElement t2 = pbw_mul(g, pbw_monomial(n, split.first), sb);
            t2 *= c;
            r2 += t2;
        }
        PBWElement eps1 = pbw_one(n);
        eps1 *= pbw_counit(pbw_monomial(n, m));
        if (!(l2 == eps1) || !(r2 == eps1)) rep.antipode_ok = false;
    }

    for (const Expo& a : monos)
        for (const Expo& b : monos) {
            if (expo_degree(a) + expo_degree(b) > max_deg) continue;
            detail::Pbw2 lhs = detail::coproduct2(pbw_mul(g, pbw_monomial(n, a), pbw_monomial(n, b)));
            detail::Pbw2 rhs = detail::mul2(g, detail::coproduct2(pbw_monomial(n, a)), detail::coproduct2(pbw_monomial(n, b)));
            if (lhs != rhs) rep.coproduct_multiplicative = false;
        }
    return rep;
}

}  // namespace liecoh
