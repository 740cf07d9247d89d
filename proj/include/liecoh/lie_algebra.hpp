#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

// Finite-dimensional Lie algebra given by structure constants C^k_ij with
// [X_i, X_j] = sum_k C^k_ij X_k. Only i < j entries are stored; the i > j
// values are implied by antisymmetry, so inconsistent input is unrepresentable.
// All indices are 0-based internally (files use 1-based labels).
class LieAlgebra {
  public:
    LieAlgebra() : dim_(0) {}
    explicit LieAlgebra(int dim, std::vector<std::string> names = {}) : dim_(dim), names_(std::move(names)) {
        if (dim < 0) throw std::invalid_argument("negative Lie algebra dimension");
        if (names_.empty())
            for (int i = 1; i <= dim; ++i) names_.push_back("X" + std::to_string(i));
        if (int(names_.size()) != dim) throw std::invalid_argument("basis name count != dim");
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    void set_bracket(int i, int j, int k, const Rat& value) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i >= j) throw std::invalid_argument("bracket entries require i < j (antisymmetric completion is automatic)");
        if (sgn(value) == 0)
            c_.erase({i, j, k});
        else
            c_[{i, j, k}] = value;
    }

    // C^k_ij for arbitrary i, j.
    Rat structure(int i, int j, int k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j) return Rat(0);
        if (i < j) {
            auto it = c_.find({i, j, k});
            return it == c_.end() ? Rat(0) : it->second;
        }
        auto it = c_.find({j, i, k});
        return it == c_.end() ? Rat(0) : -it->second;
    }

    // Coefficients of [X_i, X_j] as a dense vector.
    std::vector<Rat> bracket(int i, int j) const {
        std::vector<Rat> v(dim_);
        for (int k = 0; k < dim_; ++k) v[k] = structure(i, j, k);
        return v;
    }

    const std::map<std::tuple<int, int, int>, Rat>& stored_entries() const { return c_; }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) throw std::out_of_range("basis index out of range");
    }

    int dim_;
    std::vector<std::string> names_;
    std::map<std::tuple<int, int, int>, Rat> c_;
};

struct JacobiReport {
    bool ok = true;
    int i = -1, j = -1, k = -1, m = -1;  // witness: component m of the Jacobi sum on (i,j,k)
    Rat defect;
};

// Antisymmetry holds by construction; this checks the Jacobi identity on all
// triples i < j < k (sufficient by multilinearity and antisymmetry).
inline JacobiReport validate_lie_algebra(const LieAlgebra& g) {
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    Rat s(0);
                    for (int l = 0; l < n; ++l) {
                        s += g.structure(i, j, l) * g.structure(l, k, m);
                        s += g.structure(j, k, l) * g.structure(l, i, m);
                        s += g.structure(k, i, l) * g.structure(l, j, m);
                    }
                    if (sgn(s) != 0) return {false, i, j, k, m, s};
                }
    return {};
}

// ad(X_i) acting on columns: (ad X_i)^k_j = C^k_ij, so ad(X_i) * e_j = [X_i, X_j].
inline Mat adjoint(const LieAlgebra& g, int i) {
    Mat m(g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j)
        for (int k = 0; k < g.dim(); ++k) m(k, j) = g.structure(i, j, k);
    return m;
}

// Coadjoint action on g*: L_{X_i} th^k = -C^k_il th^l, i.e. -adjoint(i)^T on
// coefficient columns.
inline Mat coadjoint(const LieAlgebra& g, int i) { return adjoint(g, i).transpose() * Rat(-1); }

// delta(X_i) = tr(ad X_i).
inline std::vector<Rat> modular_character(const LieAlgebra& g) {
    std::vector<Rat> delta(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < g.dim(); ++k) delta[i] += g.structure(i, k, k);
    return delta;
}

inline bool is_unimodular(const LieAlgebra& g) {
    for (const Rat& d : modular_character(g))
        if (sgn(d) != 0) return false;
    return true;
}

// Semidirect double g~ = g* >| g with
//   [a (+) X, b (+) Y] = (L_X(b) - L_Y(a)) (+) [X, Y].
// Basis order: th^1..th^N (indices 0..N-1), then X_1..X_N (indices N..2N-1).
// Mixed bracket on basis elements: [th^a, X_j] = -L_{X_j} th^a = C^a_jl th^l.
inline LieAlgebra semidirect_double(const LieAlgebra& g) {
    int n = g.dim();
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("th" + std::to_string(i));
    for (const std::string& s : g.names()) names.push_back(s);
    LieAlgebra d(2 * n, names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rat v = g.structure(i, j, k);
                if (sgn(v) != 0) d.set_bracket(n + i, n + j, n + k, v);
            }
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                Rat v = g.structure(j, l, a);  // C^a_jl
                if (sgn(v) != 0) d.set_bracket(a, n + j, l, v);
            }
    return d;
}

// New basis Y_j = sum_l gamma^l_j X_l (columns of gamma are the new basis
// vectors in old coordinates). gamma must be invertible.
inline LieAlgebra change_basis(const LieAlgebra& g, const Mat& gamma) {
    int n = g.dim();
    if (gamma.rows() != n || gamma.cols() != n) throw std::invalid_argument("basis matrix shape mismatch");
    Mat gi = inverse(gamma);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
    LieAlgebra h(n, names);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            // [Y_p, Y_q] in old coordinates, then back through gamma^{-1}.
            std::vector<Rat> w(n);
            for (int a = 0; a < n; ++a) {
                if (sgn(gamma(a, p)) == 0) continue;
                for (int b = 0; b < n; ++b) {
                    if (sgn(gamma(b, q)) == 0) continue;
                    Rat f = gamma(a, p) * gamma(b, q);
                    for (int k = 0; k < n; ++k) {
                        Rat v = g.structure(a, b, k);
                        if (sgn(v) != 0) w[k] += f * v;
                    }
                }
            }
            for (int r = 0; r < n; ++r) {
                Rat v(0);
                for (int k = 0; k < n; ++k) v += gi(r, k) * w[k];
                if (sgn(v) != 0) h.set_bracket(p, q, r, v);
            }
        }
    return h;
}

// Built-in algebras. sl2 uses the basis X_1 = E12, X_2 = E21, X_3 = E11 - E22:
// [X_1,X_2] = X_3, [X_3,X_1] = 2 X_1, [X_3,X_2] = -2 X_2.
inline LieAlgebra sl2() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, 2, Rat(1));
    g.set_bracket(0, 2, 0, Rat(-2));  // [X_1, X_3] = -2 X_1
    g.set_bracket(1, 2, 1, Rat(2));   // [X_2, X_3] = 2 X_2
    return g;
}

// Heisenberg: [X_1, X_2] = X_3.
inline LieAlgebra heisenberg3() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, 2, Rat(1));
    return g;
}

// The 2-dim nonabelian algebra: [X_1, X_2] = X_2 (modular character (1, 0)).
inline LieAlgebra nonabelian2() {
    LieAlgebra g(2);
    g.set_bracket(0, 1, 1, Rat(1));
    return g;
}

inline LieAlgebra abelian(int n) { return LieAlgebra(n); }

inline std::optional<LieAlgebra> builtin_lie(const std::string& name) {
    if (name == "sl2") return sl2();
    if (name == "heisenberg3") return heisenberg3();
    if (name == "r2" || name == "nonabelian2") return nonabelian2();
    if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
        int n = 0;
        for (std::size_t i = 7; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            n = n * 10 + (name[i] - '0');
            if (n > 64) return std::nullopt;
        }
        return abelian(n);
    }
    return std::nullopt;
}

}  // namespace liecoh
