#include <doctest.h>

#include <cstdio>
#include <cstdlib>

#include "g2micro/fixtures.hpp"
#include "g2micro/grothendieck.hpp"
#include "g2micro/pipeline.hpp"

using namespace g2micro;
using namespace g2micro::grothendieck;
using orbitgeom::GroupType;

namespace {
const std::string kData = G2MICRO_DATA_DIR;

pipeline::PairData g2_pair() {
    return pipeline::load_pair({GroupType::G2, GroupType::SL2xSL2}, kData);
}
pipeline::PairData sl3_pair() {
    return pipeline::load_pair({GroupType::SL3, GroupType::GL2}, kData);
}

KVector basis(int i) {
    KVector v;
    v.add(i, 1);
    return v;
}
}

TEST_CASE("integral coherent table rows") {
    auto d = g2_pair();
    const auto& a = d.action;
    CHECK(a.nparams == 13);

    // s1 . P7 = P6 + P7 + P9 + P10
    auto img = coherent_apply(a, WeylWord::parse("1"), basis(7));
    KVector want;
    want.add(6, 1); want.add(7, 1); want.add(9, 1); want.add(10, 1);
    CHECK(img == want);

    // involution through P0
    auto twice = coherent_apply(a, WeylWord::parse("11"), basis(0));
    CHECK(twice == basis(0));

    // s2 . P9 = -P9
    auto neg = coherent_apply(a, WeylWord::parse("2"), basis(9));
    KVector mneg;
    mneg.add(9, -1);
    CHECK(neg == mneg);

    // (s1 s2)^6 is the identity on every class
    for (int xi = 0; xi < 13; ++xi)
        CHECK(coherent_apply(a, WeylWord::parse("121212121212"), basis(xi)) == basis(xi));

    // identity word
    CHECK(coherent_apply(a, WeylWord::parse("e"), basis(5)) == basis(5));
}

TEST_CASE("sl3 coherent table rows") {
    auto d = sl3_pair();
    auto img = coherent_apply(d.action, WeylWord::parse("2"), basis(3));
    KVector want;
    want.add(2, 1); want.add(3, 1); want.add(5, 1);
    CHECK(img == want);
    CHECK((d.action.mats[0] * d.action.mats[1]).pow(3).is_identity());
}

TEST_CASE("tau invariants") {
    auto d = g2_pair();
    CHECK(tau_invariant(d.action, 9) == std::set<int>{1, 2});
    CHECK(tau_invariant(d.action, 0).empty());
    CHECK(tau_invariant(d.action, 10) == std::set<int>{1});
    CHECK(tau_invariant(d.action, 12) == std::set<int>{1, 2});
    for (int s = 1; s <= 2; ++s)
        for (int xi = 0; xi < 13; ++xi)
            CHECK(std::abs(d.action.entry(s, xi, xi)) == 1);
}

TEST_CASE("harish-chandra cells") {
    auto d = g2_pair();
    auto cells = hc_cells(d.action);
    std::vector<std::vector<int>> want = {{0}, {1, 3, 6, 7, 10}, {2, 4, 5, 8, 11}, {9}, {12}};
    CHECK(cells == want);

    auto sl3 = sl3_pair();
    auto cells3 = hc_cells(sl3.action);
    std::vector<std::vector<int>> want3 = {{0}, {1, 4}, {2, 3}, {5}};
    CHECK(cells3 == want3);

    // a single class with s . P = -P forms a singleton cell
    CoherentAction tiny;
    tiny.nparams = 1;
    tiny.ngens = 1;
    tiny.mats = {IntMat(1, 1)};
    tiny.mats[0].at(0, 0) = -1;
    CHECK(hc_cells(tiny) == std::vector<std::vector<int>>{{0}});

    // tau-invariants are nonempty inside the middle cells
    for (const auto& cell : {want[1], want[2]})
        for (int xi : cell) CHECK(!tau_invariant(d.action, xi).empty());
}

TEST_CASE("coherent action factors through the group") {
    auto d = g2_pair();
    const auto& weyl = rootsys::RootSystem::g2().weyl;
    for (int e = 0; e < weyl.size(); ++e) {
        WeylWord padded;
        padded.letters = {2, 2};
        for (int l : weyl.canonical(e).letters) padded.letters.push_back(l);
        for (int xi = 0; xi < 13; ++xi)
            CHECK(coherent_apply(d.action, weyl.canonical(e), basis(xi)) ==
                  coherent_apply(d.action, padded, basis(xi)));
    }
}

TEST_CASE("synthesized actions for forced pairs") {
    auto gl2 = pipeline::load_pair({GroupType::GL2, GroupType::Torus}, kData);
    CHECK(gl2.action.ngens == 1);
    auto img = coherent_apply(gl2.action, WeylWord::parse("1"), basis(0));
    KVector want;
    want.add(0, 1); want.add(2, 1);
    CHECK(img == want);
    auto open_img = coherent_apply(gl2.action, WeylWord::parse("1"), basis(2));
    KVector neg;
    neg.add(2, -1);
    CHECK(open_img == neg);

    auto sl2 = pipeline::load_pair({GroupType::SL2xSL2, GroupType::GL2}, kData);
    CHECK(sl2.action.ngens == 2);
    for (int xi = 0; xi < 3; ++xi)
        CHECK(sl2.action.entry(1, xi, xi) == -1); // the K-factor root is in every tau
}

TEST_CASE("fixture validation rejects a broken table") {
    std::string dir = "/tmp/g2micro_badcoh";
    std::system(("mkdir -p " + dir).c_str());
    std::system(("cp " + kData + "/orbits_sl3.tsv " + dir + "/").c_str());
    // swap one coefficient so that s2^2 != 1
    {
        FILE* f = fopen((dir + "/coherent_sl3.tsv").c_str(), "w");
        fputs("1\t0\t0\t1\n1\t0\t3\t1\n1\t1\t1\t-1\n1\t2\t2\t1\n1\t2\t3\t1\n1\t3\t3\t-1\n", f);
        fputs("1\t4\t1\t1\n1\t4\t4\t1\n1\t4\t5\t1\n1\t5\t5\t-1\n", f);
        fputs("2\t0\t0\t1\n2\t0\t3\t1\n2\t1\t1\t1\n2\t1\t4\t1\n2\t2\t2\t-1\n", f);
        fputs("2\t3\t2\t1\n2\t3\t3\t1\n2\t3\t5\t1\n2\t4\t4\t-1\n2\t5\t5\t-1\n", f);
        fclose(f);
    }
    CHECK_THROWS_AS(pipeline::load_pair({GroupType::SL3, GroupType::GL2}, dir), FixtureError);

    // missing diagonal rows are rejected too
    {
        FILE* f = fopen((dir + "/coherent_sl3.tsv").c_str(), "w");
        fputs("1\t0\t0\t1\n", f);
        fclose(f);
    }
    CHECK_THROWS_AS(pipeline::load_pair({GroupType::SL3, GroupType::GL2}, dir), FixtureError);
}
