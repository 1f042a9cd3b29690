#include <doctest.h>

#include "g2micro/ccsolver.hpp"
#include "g2micro/pipeline.hpp"

using namespace g2micro;
using namespace g2micro::ccsolver;
using orbitgeom::GroupType;

namespace {
const std::string kData = G2MICRO_DATA_DIR;

ccsolver::CCMatrix expected_cc() {
    CCMatrix cc;
    cc.norbits = 10;
    cc.nparams = 13;
    cc.chi.assign(10, std::vector<long long>(13, 0));
    for (int i = 0; i <= 5; ++i) cc.chi[i][i] = 1;
    cc.chi[1][6] = 2; cc.chi[6][6] = 1;
    cc.chi[3][7] = 1; cc.chi[7][7] = 1;
    cc.chi[4][8] = 1; cc.chi[6][8] = 1; cc.chi[8][8] = 1;
    cc.chi[9][9] = 1;
    cc.chi[1][10] = 1; cc.chi[6][10] = 1; cc.chi[8][10] = 1; cc.chi[9][10] = 1;
    cc.chi[2][11] = 1; cc.chi[7][11] = 1; cc.chi[9][11] = 1;
    cc.chi[9][12] = 1;
    return cc;
}
}

TEST_CASE("assemble builds the masked unknown set") {
    auto g2 = pipeline::solve_integral(kData);
    const auto& sys = g2.system;

    auto has = [&](Unknown u) { return sys.find_unknown(u).has_value(); };
    CHECK(has({Unknown::Kind::Chi, 0, 2, 5}));   // chi(S2, P5)
    CHECK(has({Unknown::Kind::Chi, 0, 1, 6}));   // chi(S1, P6)
    CHECK(has({Unknown::Kind::N, 1, 5, 4}));     // n(S5, S4) for s1
    CHECK(!has({Unknown::Kind::Chi, 0, 3, 5}));  // excluded by the containment mask

    // forced columns carry no unknowns
    for (int xi : {3, 4, 9, 12})
        for (const auto& u : sys.unknowns)
            if (u.kind == Unknown::Kind::Chi) CHECK(u.b != xi);

    int chi_unknowns = 0, n_unknowns = 0;
    for (const auto& u : sys.unknowns)
        (u.kind == Unknown::Kind::Chi ? chi_unknowns : n_unknowns) += 1;
    CHECK(chi_unknowns == 11);
    CHECK(n_unknowns == 16);
    REQUIRE(sys.complement_var.has_value());
    CHECK(sys.unknowns[*sys.complement_var] == Unknown{Unknown::Kind::Chi, 0, 2, 5});
}

TEST_CASE("solve reproduces the cycles and the W-action") {
    auto g2 = pipeline::solve_integral(kData);
    CHECK(g2.solved.cc == expected_cc());
    CHECK(g2.solved.equivariance_solutions == 3); // the lemma is genuinely needed

    const auto& w = g2.solved.wact;
    // s1 . [T_S3] = 3[T_S1] + [T_S3] + [T_S6]
    CHECK(w.entry(1, 1, 3) == 3);
    CHECK(w.entry(1, 3, 3) == 1);
    CHECK(w.entry(1, 6, 3) == 1);
    // s2 . [T_S8] = [T_S8] + 2[T_S9]
    CHECK(w.entry(2, 8, 8) == 1);
    CHECK(w.entry(2, 9, 8) == 2);
    // s1 . [T_S5] = 2[T_S4] + [T_S5] + [T_S6] + [T_S8]
    CHECK(w.entry(1, 4, 5) == 2);
    CHECK(w.entry(1, 6, 5) == 1);
    CHECK(w.entry(1, 8, 5) == 1);
    // vertical diagonals
    for (int orbit : {1, 4, 6, 8, 9}) CHECK(w.entry(1, orbit, orbit) == -1);
    for (int orbit : {2, 3, 5, 7, 9}) CHECK(w.entry(2, orbit, orbit) == -1);

    // CC(P10) = [T_S1] + [T_S6] + [T_S8] + [T_S9]
    std::vector<int> support;
    for (int orbit = 0; orbit < 10; ++orbit)
        if (g2.solved.cc.chi[orbit][10] != 0) support.push_back(orbit);
    CHECK(support == std::vector<int>{1, 6, 8, 9});

    // same unique answer at a larger bound
    auto again = pipeline::solve_integral(kData, 8);
    CHECK(again.solved.cc == g2.solved.cc);
    for (int s = 0; s < 2; ++s) CHECK(again.solved.wact.mats[s] == g2.solved.wact.mats[s]);
}

TEST_CASE("W-action on conormal vectors") {
    auto g2 = pipeline::solve_integral(kData);
    conormal::LVector t3;
    t3.add(3, 1);
    auto img = wact_apply(g2.solved.wact, 1, t3);
    conormal::LVector want;
    want.add(1, 3); want.add(3, 1); want.add(6, 1);
    CHECK(img == want);

    conormal::LVector t8;
    t8.add(8, 1);
    auto img2 = wact_apply(g2.solved.wact, 2, t8);
    conormal::LVector want2;
    want2.add(8, 1); want2.add(9, 2);
    CHECK(img2 == want2);

    // CC(P10) as a conormal vector
    auto col = cc_column(g2.solved.cc, 10);
    conormal::LVector want10;
    want10.add(1, 1); want10.add(6, 1); want10.add(8, 1); want10.add(9, 1);
    CHECK(col == want10);

    // applying a generator twice returns the vector
    for (int s = 1; s <= 2; ++s)
        CHECK(wact_apply(g2.solved.wact, s, wact_apply(g2.solved.wact, s, col)) == col);
}

TEST_CASE("complement check") {
    CHECK(complement_check(0));
    CHECK(!complement_check(1));
    CHECK(!complement_check(2));
    int accepted = 0;
    for (long long chi = 0; chi <= 2; ++chi) accepted += complement_check(chi);
    CHECK(accepted == 1);
}

TEST_CASE("equivariance gate") {
    auto g2 = pipeline::solve_integral(kData);
    CHECK(verify_equivariance(g2.solved.cc, g2.pair.action, g2.solved.wact));

    auto mutated = g2.solved.wact;
    mutated.mats[0].at(1, 3) += 1;
    CHECK(!verify_equivariance(g2.solved.cc, g2.pair.action, mutated));

    mutated = g2.solved.wact;
    mutated.mats[1].at(9, 8) -= 1;
    CHECK(!verify_equivariance(g2.solved.cc, g2.pair.action, mutated));
}

TEST_CASE("non-integral cycles are the identity") {
    for (const char* name : {"sl3", "sl2xsl2", "gl2", "torus", "gl2_full", "sl3_full"}) {
        auto pr = orbitgeom::pair_from_name(name);
        REQUIRE(pr.has_value());
        auto d = pipeline::load_pair(*pr, kData);
        auto cc = cc_nonintegral(d.orbits, d.params);
        for (int i = 0; i < cc.norbits; ++i)
            for (int j = 0; j < cc.nparams; ++j)
                CHECK(cc.chi[i][j] == (d.params[j].orbit == i ? 1 : 0));
        auto w = wact_nonintegral(d.orbits, d.action, d.params);
        CHECK(verify_equivariance(cc, d.action, w));
    }
    // the transported action for (SL3, GL2) equals its coherent matrices
    auto d = pipeline::load_pair({GroupType::SL3, GroupType::GL2}, kData);
    auto w = wact_nonintegral(d.orbits, d.action, d.params);
    for (int s = 0; s < 2; ++s) CHECK(w.mats[s] == d.action.mats[s]);
}

TEST_CASE("solved action is graded and Coxeter") {
    auto g2 = pipeline::solve_integral(kData);
    for (int s = 0; s < 2; ++s) {
        const auto& m = g2.solved.wact.mats[s];
        CHECK((m * m).is_identity());
        for (int tgt = 0; tgt < 10; ++tgt)
            for (int src = 0; src < 10; ++src) {
                if (tgt == src || m.at(tgt, src) == 0) continue;
                CHECK(m.at(tgt, src) > 0);
                CHECK(g2.poset.contained(g2.images.at(tgt), g2.images.at(src)));
            }
    }
    CHECK((g2.solved.wact.mats[0] * g2.solved.wact.mats[1]).pow(6).is_identity());
    for (int xi = 0; xi < 13; ++xi) {
        CHECK(g2.solved.cc.chi[g2.pair.params[xi].orbit][xi] == 1);
        for (int orbit = 0; orbit < 10; ++orbit) {
            CHECK(g2.solved.cc.chi[orbit][xi] >= 0);
            CHECK(g2.solved.cc.chi[orbit][xi] <= 3);
        }
    }
}
