#include "g2micro/weyl.hpp"

#include <map>
#include <stdexcept>

namespace g2micro {

std::string WeylWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (int g : letters) s += "s" + std::to_string(g);
    return s;
}

std::string WeylWord::compact() const {
    if (letters.empty()) return "e";
    std::string s;
    for (int g : letters) s += std::to_string(g);
    return s;
}

WeylWord WeylWord::parse(const std::string& s) {
    WeylWord w;
    if (s == "e" || s.empty()) return w;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == 's') continue;
        if (c < '1' || c > '2') throw std::invalid_argument("bad Weyl word: " + s);
        w.letters.push_back(c - '0');
    }
    return w;
}

WeylGroup WeylGroup::from_cartan(int rank, std::array<std::array<long long, 2>, 2> cartan) {
    WeylGroup g;
    g.rank_ = rank;
    g.cartan_ = cartan;

    std::vector<IntMat> gens;
    for (int s = 0; s < rank; ++s) {
        IntMat m = IntMat::identity(2);
        for (int j = 0; j < 2; ++j) m.at(s, j) = (s == j ? 1 : 0) - cartan[s][j];
        gens.push_back(m);
    }

    // BFS in ShortLex order; the prefix of a ShortLex-least word is itself least,
    // so appending generators to canonical words in order enumerates canonically.
    std::map<std::vector<long long>, int> seen;
    g.mats_.push_back(IntMat::identity(2));
    g.canon_.push_back(WeylWord{});
    seen[g.mats_[0].a] = 0;
    std::vector<int> level{0};
    while (!level.empty()) {
        std::vector<int> next;
        for (int e : level)
            for (int s = 0; s < rank; ++s) {
                IntMat m = g.mats_[e] * gens[s];
                auto it = seen.find(m.a);
                if (it != seen.end()) continue;
                int id = static_cast<int>(g.mats_.size());
                seen[m.a] = id;
                g.mats_.push_back(m);
                WeylWord w = g.canon_[e];
                w.letters.push_back(s + 1);
                g.canon_.push_back(std::move(w));
                next.push_back(id);
            }
        level = std::move(next);
    }

    int n = g.size();
    g.mult_.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) g.mult_[x][y] = g.lookup(g.mats_[x] * g.mats_[y]);

    if (rank == 2) {
        int r = g.mult(g.generator(1), g.generator(2));
        int p = r, k = 1;
        while (p != g.identity()) { p = g.mult(p, r); ++k; }
        g.braid_order_ = k;
    }
    return g;
}

WeylGroup WeylGroup::g2() { return from_cartan(2, {{{2, -1}, {-3, 2}}}); }
WeylGroup WeylGroup::a2() { return from_cartan(2, {{{2, -1}, {-1, 2}}}); }
WeylGroup WeylGroup::a1xa1() { return from_cartan(2, {{{2, 0}, {0, 2}}}); }
WeylGroup WeylGroup::a1() { return from_cartan(1, {{{2, 0}, {0, 2}}}); }
WeylGroup WeylGroup::trivial() { return from_cartan(0, {{{2, 0}, {0, 2}}}); }

int WeylGroup::lookup(const IntMat& m) const {
    for (int i = 0; i < size(); ++i)
        if (mats_[i] == m) return i;
    throw std::logic_error("element not in group");
}

int WeylGroup::generator(int s) const {
    if (s < 1 || s > rank_) throw std::invalid_argument("no such generator");
    // generators are found at length 1 in BFS order
    for (int e = 0; e < size(); ++e)
        if (canon_[e].letters == std::vector<int>{s}) return e;
    throw std::logic_error("generator missing");
}

int WeylGroup::mult(int x, int y) const { return mult_[x][y]; }

int WeylGroup::from_word(const WeylWord& w) const {
    int e = identity();
    for (int g : w.letters) e = mult(e, generator(g));
    return e;
}

std::array<long long, 2> WeylGroup::apply(const WeylWord& w, std::array<long long, 2> v) const {
    const IntMat& m = matrix(from_word(w));
    return {m.at(0, 0) * v[0] + m.at(0, 1) * v[1], m.at(1, 0) * v[0] + m.at(1, 1) * v[1]};
}

} // namespace g2micro
