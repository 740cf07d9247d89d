#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

// Basis bookkeeping for Lambda^p of an n-dim space. A basis monomial is the
// wedge of generators with strictly increasing indices, encoded as a bitmask.
// Within each degree, monomials are ordered lexicographically on the index
// tuple, e.g. for n = 4, p = 2: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
class ExteriorBasis {
  public:
    explicit ExteriorBasis(int n) : n_(n), masks_(n + 1) {
        if (n < 0 || n > 30) throw std::invalid_argument("exterior basis dimension out of range");
        std::vector<int> tuple;
        for (int p = 0; p <= n; ++p) gen(p, 0, 0u, tuple);
        for (int p = 0; p <= n; ++p)
            for (std::size_t i = 0; i < masks_[p].size(); ++i) index_[masks_[p][i]] = int(i);
    }

    int n() const { return n_; }
    int dim(int p) const { return (p < 0 || p > n_) ? 0 : int(masks_[p].size()); }
    std::uint32_t mask(int p, int idx) const { return masks_[p].at(idx); }
    int index_of(std::uint32_t mask) const { return index_.at(mask); }
    static int degree(std::uint32_t mask) { return std::popcount(mask); }

    static std::vector<int> tuple_of(std::uint32_t mask) {
        std::vector<int> t;
        for (int i = 0; i < 32; ++i)
            if (mask & (1u << i)) t.push_back(i);
        return t;
    }

  private:
    void gen(int p, int next, std::uint32_t acc, std::vector<int>& tuple) {
        if (int(tuple.size()) == p) {
            masks_[p].push_back(acc);
            return;
        }
        for (int i = next; i < n_; ++i) {
            tuple.push_back(i);
            gen(p, i + 1, acc | (1u << i), tuple);
            tuple.pop_back();
        }
    }

    int n_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::unordered_map<std::uint32_t, int> index_;
};

// Parity of |{b in mask : b < gen}|. This is both the sign of prepending
// generator `gen` to the sorted monomial `mask` and the sign of contracting
// `gen` out of `mask` in the first slot.
inline int below_sign(std::uint32_t mask, int gen) {
    return (std::popcount(mask & ((1u << gen) - 1u)) & 1) ? -1 : 1;
}

// Sign of sorting the concatenation (sorted a) ++ (sorted b); 0 if they share
// a generator.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int i = 0; i < 32; ++i)
        if (a & (1u << i)) inversions += std::popcount(b & ((1u << i) - 1u));
    return (inversions & 1) ? -1 : 1;
}

// Sign of sorting an arbitrary index word; 0 on repeats. Returns the sorted
// mask through `out`.
inline int word_sign(const std::vector<int>& word, std::uint32_t& out) {
    std::uint32_t mask = 0;
    int inversions = 0;
    for (std::size_t t = 0; t < word.size(); ++t) {
        std::uint32_t bit = 1u << word[t];
        if (mask & bit) return 0;
        // generators already placed that are larger than word[t]
        inversions += std::popcount(mask & ~((bit << 1) - 1u));
        mask |= bit;
    }
    out = mask;
    return (inversions & 1) ? -1 : 1;
}

}  // namespace liecoh
