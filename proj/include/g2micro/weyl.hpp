#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2micro/intmat.hpp"

namespace g2micro {

// A word in the simple reflections; letters are 1-based generator indices.
struct WeylWord {
    std::vector<int> letters;

    WeylWord() = default;
    explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    std::string str() const;              // "e" or e.g. "s2s1s2"
    std::string compact() const;          // "e" or e.g. "212"
    static WeylWord parse(const std::string& s); // accepts "e", "212", "s2s1s2"
};

// Finite rank <= 2 Coxeter group realized by its reflection representation on
// the rank-2 lattice in the simple-root basis. Elements are small integer ids;
// canonical words are ShortLex (shortest, then lexicographically least with
// generator order 1 < 2).
class WeylGroup {
public:
    // cartan[i][j] = <coroot_i, alpha_j>; rank 0 and 1 ignore the unused part.
    static WeylGroup from_cartan(int rank, std::array<std::array<long long, 2>, 2> cartan);
    static WeylGroup g2();
    static WeylGroup a2();
    static WeylGroup a1xa1();
    static WeylGroup a1();
    static WeylGroup trivial();

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(mats_.size()); }
    int identity() const { return 0; }
    int generator(int s) const;                  // s in 1..rank
    int mult(int x, int y) const;
    int from_word(const WeylWord& w) const;
    const WeylWord& canonical(int e) const { return canon_[e]; }
    int length(int e) const { return static_cast<int>(canon_[e].size()); }
    const IntMat& matrix(int e) const { return mats_[e]; }
    int braid_order() const { return braid_order_; }    // order of s1*s2 (0 if rank < 2)
    long long cartan(int i, int j) const { return cartan_[i][j]; }

    // action on a lattice vector in the simple-root basis, word applied
    // right-to-left: s_{w1}(s_{w2}(...(v)))
    std::array<long long, 2> apply(const WeylWord& w, std::array<long long, 2> v) const;

private:
    int rank_ = 0;
    std::array<std::array<long long, 2>, 2> cartan_{};
    int braid_order_ = 0;
    std::vector<IntMat> mats_;
    std::vector<WeylWord> canon_;
    std::vector<std::vector<int>> mult_; // [x][y]
    int lookup(const IntMat& m) const;
};

} // namespace g2micro
