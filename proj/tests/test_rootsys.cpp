#include <doctest.h>

#include <set>

#include "g2micro/rootsys.hpp"

using namespace g2micro;
using rootsys::RootSystem;
using rootsys::Vec2;

namespace {
WeylWord w(const std::string& s) { return WeylWord::parse(s); }
}

TEST_CASE("root datum basics") {
    const auto& rs = RootSystem::g2();
    CHECK(rs.positive_roots.size() == 6);
    CHECK(rs.positive_coroots.size() == 6);
    CHECK(rs.rho == Vec2{3, 5});
    // Cartan matrix of (alpha1 long, alpha2 short)
    CHECK(rs.weyl.cartan(0, 0) == 2);
    CHECK(rs.weyl.cartan(0, 1) == -1);
    CHECK(rs.weyl.cartan(1, 0) == -3);
    CHECK(rs.weyl.cartan(1, 1) == 2);
    for (size_t k = 0; k < 6; ++k)
        CHECK(rs.pairing(rs.positive_coroots[k], rs.positive_roots[k]) == 2);
    // rho pairs to one against both simple coroots
    CHECK(rs.pairing({1, 0}, rs.rho) == 1);
    CHECK(rs.pairing({0, 1}, rs.rho) == 1);
}

TEST_CASE("weyl apply") {
    const auto& rs = RootSystem::g2();
    // short reflection on the short simple root, long reflection on the long one
    CHECK(rootsys::weyl_apply(w("1"), Vec2{0, 1}) == Vec2{1, 1});
    CHECK(rootsys::weyl_apply(w("2"), Vec2{1, 0}) == Vec2{1, 3});
    CHECK(rootsys::weyl_apply(w("1"), Vec2{1, 0}) == Vec2{-1, 0});
    CHECK(rootsys::weyl_apply(w("2"), Vec2{0, 1}) == Vec2{0, -1});
    CHECK(rootsys::weyl_apply(w("e"), rs.rho) == rs.rho);

    // brute force: exactly one element negates every positive root, and it is
    // the length-6 element; it sends rho to -rho
    const auto& weyl = rs.weyl;
    int negating = 0;
    int w0 = -1;
    for (int e = 0; e < weyl.size(); ++e) {
        bool all = true;
        for (const auto& r : rs.positive_roots) {
            auto img = weyl.apply(weyl.canonical(e), r);
            if (img != Vec2{-r[0], -r[1]}) all = false;
        }
        if (all) {
            ++negating;
            w0 = e;
        }
    }
    CHECK(negating == 1);
    CHECK(weyl.length(w0) == 6);
    CHECK(weyl.apply(weyl.canonical(w0), rs.rho) == Vec2{-rs.rho[0], -rs.rho[1]});
    CHECK(weyl.from_word(w("212121")) == w0);
}

TEST_CASE("canonical forms") {
    const auto& weyl = RootSystem::g2().weyl;
    CHECK(rootsys::weyl_canonical(w("11")).compact() == "e");
    CHECK(rootsys::weyl_canonical(w("121212121212")).compact() == "e"); // (s1 s2)^6
    CHECK(rootsys::weyl_canonical(w("21212")).compact() == "21212");
    CHECK(rootsys::weyl_canonical(w("12121")).compact() == "12121");
    // the long element has two reduced words; ShortLex picks the s1-first one
    CHECK(rootsys::weyl_canonical(w("212121")).compact() == "121212");
    CHECK(weyl.from_word(w("212121")) == weyl.from_word(w("121212")));
    std::set<std::string> all;
    for (int e = 0; e < weyl.size(); ++e) all.insert(weyl.canonical(e).compact());
    CHECK(all.size() == 12);
}

TEST_CASE("smith normal form") {
    CHECK(smith_normal_form(IntMat::identity(2)) == std::vector<long long>{1, 1});

    const auto& weyl = RootSystem::g2().weyl;
    // w0 - 1 = -2 id on the rank-2 lattice
    IntMat m = weyl.matrix(weyl.from_word(WeylWord::parse("212121")));
    for (int i = 0; i < 2; ++i) {
        m.at(i, i) -= 1;
        CHECK(m.at(i, i) == -2);
        CHECK(m.at(i, 1 - i) == 0);
    }
    CHECK(smith_normal_form(m) == std::vector<long long>{2, 2});

    IntMat s2 = weyl.matrix(weyl.from_word(WeylWord::parse("2")));
    s2.at(0, 0) -= 1;
    s2.at(1, 1) -= 1;
    CHECK(smith_normal_form(s2) == std::vector<long long>{1, 0});

    // invariance under unimodular row/column operations
    IntMat a(3, 3);
    long long vals[9] = {2, 4, 4, -6, 6, 12, 10, 4, 16};
    for (int i = 0; i < 9; ++i) a.a[i] = vals[i];
    auto d = smith_normal_form(a);
    IntMat b = a;
    for (int j = 0; j < 3; ++j) b.at(1, j) += 3 * b.at(0, j); // row op
    for (int i = 0; i < 3; ++i) b.at(i, 2) -= 2 * b.at(i, 0); // col op
    CHECK(smith_normal_form(b) == d);
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i - 1] != 0) CHECK(d[i] % d[i - 1] == 0);

    auto t = smith_with_transforms(a);
    CHECK(t.u * a * t.v == t.d);
}

TEST_CASE("diophantine solver") {
    IntMat a(2, 2);
    a.at(0, 0) = 3; a.at(0, 1) = 2;
    a.at(1, 0) = 0; a.at(1, 1) = 0;
    auto sol = solve_diophantine(a, {1, 0});
    REQUIRE(sol.has_value());
    CHECK(3 * (*sol)[0] + 2 * (*sol)[1] == 1);
    CHECK(!solve_diophantine(a, {1, 1}).has_value());
    IntMat b(1, 1);
    b.at(0, 0) = 2;
    CHECK(!solve_diophantine(b, {3}).has_value());
}

TEST_CASE("torus component groups") {
    using rootsys::torus_component_group;
    CHECK(torus_component_group(w("e")).empty());
    CHECK(torus_component_group(w("2")).empty());
    CHECK(torus_component_group(w("1")).empty());
    CHECK(torus_component_group(w("212121")) == std::vector<long long>{2, 2});
}

TEST_CASE("even pairing against rho") {
    const auto& rs = RootSystem::g2();
    std::set<Vec2> even;
    for (const auto& coroot : rs.positive_coroots)
        if (rs.pairing(coroot, rs.rho) % 2 == 0) even.insert(coroot);
    CHECK(even == std::set<Vec2>{{1, 1}, {3, 1}});
}
