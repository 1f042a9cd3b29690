#include "g2micro/rootsys.hpp"

namespace g2micro::rootsys {

const RootSystem& RootSystem::g2() {
    static const RootSystem rs = [] {
        RootSystem r;
        r.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
        r.positive_coroots = {{1, 0}, {0, 1}, {3, 1}, {3, 2}, {1, 1}, {2, 1}};
        return r;
    }();
    return rs;
}

bool RootSystem::is_long(const Vec2& root) const {
    // long roots: alpha1, alpha1+3alpha2, 2alpha1+3alpha2
    return root == Vec2{1, 0} || root == Vec2{1, 3} || root == Vec2{2, 3};
}

long long RootSystem::pairing(const Vec2& coroot, const Vec2& weight) const {
    long long r = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r += coroot[i] * weyl.cartan(i, j) * weight[j];
    return r;
}

Rat RootSystem::pairing(const Vec2& coroot, const QVec2& weight) const {
    Rat r(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = r + (coroot[i] * weyl.cartan(i, j)) * weight[j];
    return r;
}

Vec2 RootSystem::reflect(const Vec2& root, const Vec2& coroot, const Vec2& v) const {
    long long p = pairing(coroot, v);
    return {v[0] - p * root[0], v[1] - p * root[1]};
}

std::vector<long long> torus_component_group(const WeylGroup& weyl, int elem) {
    IntMat m = weyl.matrix(elem);
    for (int i = 0; i < 2; ++i) m.at(i, i) -= 1;
    std::vector<long long> out;
    for (long long d : smith_normal_form(std::move(m)))
        if (d > 1) out.push_back(d);
    return out;
}

std::vector<long long> torus_component_group(const WeylWord& w) {
    const WeylGroup& g = RootSystem::g2().weyl;
    return torus_component_group(g, g.from_word(w));
}

} // namespace g2micro::rootsys
