#pragma once

#include <array>
#include <vector>

#include "g2micro/rational.hpp"
#include "g2micro/weyl.hpp"

namespace g2micro::rootsys {

// Lattice vector in the simple-root basis (alpha1 long, alpha2 short).
using Vec2 = std::array<long long, 2>;
// Point of the rational Cartan in the same basis.
using QVec2 = std::array<Rat, 2>;

// The G2 root datum: six positive roots, the aligned positive coroots (in the
// simple-coroot basis), rho, and the Weyl group of order 12.
struct RootSystem {
    WeylGroup weyl = WeylGroup::g2();
    std::vector<Vec2> positive_roots;
    std::vector<Vec2> positive_coroots; // positive_coroots[k] is the coroot of positive_roots[k]
    Vec2 rho{3, 5};

    static const RootSystem& g2();

    bool is_long(const Vec2& root) const;
    // <coroot, weight> with coroot in the simple-coroot basis
    long long pairing(const Vec2& coroot, const Vec2& weight) const;
    Rat pairing(const Vec2& coroot, const QVec2& weight) const;
    // reflection in an arbitrary root: s_beta(v) = v - <coroot(beta), v> beta
    Vec2 reflect(const Vec2& root, const Vec2& coroot, const Vec2& v) const;
};

inline Vec2 weyl_apply(const WeylWord& w, Vec2 v) { return RootSystem::g2().weyl.apply(w, v); }

inline WeylWord weyl_canonical(const WeylWord& w) {
    const WeylGroup& g = RootSystem::g2().weyl;
    return g.canonical(g.from_word(w));
}

// Elementary divisors > 1 of the torsion of X_*(T)/(w-1)X_*(T); the trivial
// group is the empty list.
std::vector<long long> torus_component_group(const WeylGroup& weyl, int elem);
std::vector<long long> torus_component_group(const WeylWord& w);

} // namespace g2micro::rootsys
