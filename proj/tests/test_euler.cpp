#include <doctest.h>

#include <random>

#include "g2micro/euler.hpp"
#include "g2micro/pipeline.hpp"
#include "g2micro/rational.hpp"
#include "g2micro/translation.hpp"

using namespace g2micro;
using namespace g2micro::euler;

namespace {
const std::string kData = G2MICRO_DATA_DIR;

struct Setup {
    pipeline::IntegralData g2;
    ClosureLeq leq;
    std::vector<int> dims;
    std::vector<int> triv;
    EulerMatrix seed;
};

Setup integral_setup() {
    Setup s{pipeline::solve_integral(kData), {}, {}, {}, {}};
    s.leq = closure_leq(s.g2.pair.orbits);
    s.dims = pipeline::orbit_dims(s.g2.pair.orbits);
    s.triv.resize(10);
    for (int i = 0; i < 10; ++i) s.triv[i] = orbitgeom::trivial_parameter(s.g2.pair.params, i);
    s.seed = load_euler(kData + "/euler_g2.tsv", s.leq, 10);
    return s;
}

// independent oracle: solve each row by exact Gaussian elimination over the
// rationals on the pivot columns, no dimension recursion
EulerMatrix solve_by_elimination(const LocalMultMatrix& chi_loc, const ccsolver::CCMatrix& cc,
                                 const std::vector<int>& dims, const ClosureLeq& leq,
                                 const std::vector<int>& triv) {
    int n = cc.norbits;
    EulerMatrix e;
    e.n = n;
    e.a.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if (leq[i][j]) cols.push_back(j);
        int m = static_cast<int>(cols.size());
        // rows: one equation per pivot parameter
        std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1));
        for (int r = 0; r < m; ++r) {
            int g = triv[cols[r]];
            for (int cidx = 0; cidx < m; ++cidx) {
                int j = cols[cidx];
                long long sign = dims[j] % 2 == 0 ? 1 : -1;
                aug[r][cidx] = Rat(sign * cc.chi[j][g]);
            }
            aug[r][m] = Rat(chi_loc.chi_loc[i][g]);
        }
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int r = col; r < m; ++r)
                if (aug[r][col] != Rat(0)) { pivot = r; break; }
            REQUIRE(pivot >= 0);
            std::swap(aug[col], aug[pivot]);
            for (int r = 0; r < m; ++r) {
                if (r == col || aug[r][col] == Rat(0)) continue;
                Rat f = aug[r][col] * Rat(aug[col][col].den, aug[col][col].num);
                for (int cidx = 0; cidx <= m; ++cidx)
                    aug[r][cidx] = aug[r][cidx] - f * aug[col][cidx];
            }
        }
        for (int cidx = 0; cidx < m; ++cidx) {
            Rat v = aug[cidx][m] * Rat(aug[cidx][cidx].den, aug[cidx][cidx].num);
            REQUIRE(v.is_integer());
            e.a[i][cols[cidx]] = v.num;
        }
    }
    return e;
}
}

TEST_CASE("index formula evaluation") {
    auto s = integral_setup();
    auto chi_loc = local_mult_from_paper(s.g2.solved.cc, s.seed, s.dims);

    // single-term product on the open orbit
    CHECK(chi_loc.chi_loc[9][9] == 1);
    // unit stalk on the parameter's own orbit, up to the sign normalization
    for (int i = 0; i < 10; ++i) {
        long long sign = s.dims[i] % 2 == 0 ? 1 : -1;
        CHECK(chi_loc.chi_loc[i][s.triv[i]] == sign);
    }
    // triangular support
    for (int i = 0; i < 10; ++i)
        for (int g = 0; g < 13; ++g)
            if (!s.leq[i][s.g2.pair.params[g].orbit]) CHECK(chi_loc.chi_loc[i][g] == 0);
    // the closed-orbit row against the two-term column: 2 - 1
    CHECK(chi_loc.chi_loc[1][6] == 1);
}

TEST_CASE("obstruction matrices recovered") {
    auto s = integral_setup();
    auto chi_loc = local_mult_from_paper(s.g2.solved.cc, s.seed, s.dims);
    auto solved = solve_euler(chi_loc, s.g2.solved.cc, s.dims, s.leq, s.triv);
    CHECK(solved == s.seed);

    // independent route: full elimination instead of the dimension recursion
    auto oracle = solve_by_elimination(chi_loc, s.g2.solved.cc, s.dims, s.leq, s.triv);
    CHECK(oracle == solved);

    auto report = obstruction_report(solved, s.leq);
    REQUIRE(report.size() == 3);
    CHECK(report[0].upper == 6);
    CHECK(report[0].lower == 1);
    CHECK(report[0].value == -1);
    CHECK(report[1].upper == 7);
    CHECK(report[1].lower == 2);
    CHECK(report[1].value == 2);
    CHECK(report[2].upper == 8);
    CHECK(report[2].lower == 1);
    CHECK(report[2].value == 2);
}

TEST_CASE("subregular obstruction matrix") {
    auto s = integral_setup();
    auto block = translation::subregular_block(s.g2.pair.orbits, s.g2.pair.params);
    ClosureLeq qleq(5, std::vector<bool>(5, false));
    for (int q = 0; q < 5; ++q) qleq[q][q] = true;
    for (auto [lo, hi] : block.q_covers) qleq[lo][hi] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                if (qleq[a][b])
                    for (int d = 0; d < 5; ++d)
                        if (qleq[b][d] && !qleq[a][d]) { qleq[a][d] = true; changed = true; }
    }
    auto qseed = load_euler(kData + "/euler_subregular.tsv", qleq, 5);
    auto qcc = translation::singular_cc(block, s.g2.solved.cc);
    auto qchi = local_mult_from_paper(qcc, qseed, block.q_dims);
    auto qsolved = solve_euler(qchi, qcc, block.q_dims, qleq, {0, 1, 2, 3, 4});
    CHECK(qsolved == qseed);
    CHECK(qsolved.a[1][2] == -1);
    CHECK(qsolved.a[2][3] == 2);

    auto report = obstruction_report(qsolved, qleq);
    REQUIRE(report.size() == 2);
    CHECK(report[0].upper == 2);
    CHECK(report[0].lower == 1);
    CHECK(report[0].value == -1);
    CHECK(report[1].upper == 3);
    CHECK(report[1].lower == 2);
    CHECK(report[1].value == 2);

    // identity cycles with signed-identity stalks give the identity matrix
    ccsolver::CCMatrix id;
    id.norbits = id.nparams = 5;
    id.chi.assign(5, std::vector<long long>(5, 0));
    for (int i = 0; i < 5; ++i) id.chi[i][i] = 1;
    EulerMatrix unit;
    unit.n = 5;
    unit.a.assign(5, std::vector<long long>(5, 0));
    for (int i = 0; i < 5; ++i) unit.a[i][i] = 1;
    auto stalks = local_mult_from_paper(id, unit, block.q_dims);
    auto back = solve_euler(stalks, id, block.q_dims, qleq, {0, 1, 2, 3, 4});
    CHECK(back == unit);
}

TEST_CASE("non-integral obstructions are all one") {
    auto sl3 = pipeline::load_pair({orbitgeom::GroupType::SL3, orbitgeom::GroupType::GL2}, kData);
    auto leq = closure_leq(sl3.orbits);
    auto dims = pipeline::orbit_dims(sl3.orbits);
    auto cc = ccsolver::cc_nonintegral(sl3.orbits, sl3.params);
    // smooth closures: every obstruction inside a closure equals one
    EulerMatrix ones;
    ones.n = 6;
    ones.a.assign(6, std::vector<long long>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (leq[i][j]) ones.a[i][j] = 1;
    std::vector<int> triv = {0, 1, 2, 3, 4, 5};
    auto chi_loc = local_mult_from_paper(cc, ones, dims);
    auto back = solve_euler(chi_loc, cc, dims, leq, triv);
    CHECK(back == ones);
    CHECK(obstruction_report(back, leq).empty());
}

TEST_CASE("random unit-triangular round trips") {
    auto s = integral_setup();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        EulerMatrix rnd;
        rnd.n = 10;
        rnd.a.assign(10, std::vector<long long>(10, 0));
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                if (i == j) rnd.a[i][j] = 1;
                else if (s.leq[i][j]) rnd.a[i][j] = entry(rng);
            }
        auto chi_loc = local_mult_from_paper(s.g2.solved.cc, rnd, s.dims);
        auto back = solve_euler(chi_loc, s.g2.solved.cc, s.dims, s.leq, s.triv);
        REQUIRE(back == rnd);
    }
}

TEST_CASE("chi_loc fixture round trip") {
    auto s = integral_setup();
    auto chi_loc = local_mult_from_paper(s.g2.solved.cc, s.seed, s.dims);
    std::string path = "/tmp/g2micro_chi_loc.tsv";
    write_chi_loc(path, chi_loc);
    auto loaded = load_chi_loc(path, 10, 13);
    CHECK(loaded == chi_loc);
    auto solved = solve_euler(loaded, s.g2.solved.cc, s.dims, s.leq, s.triv);
    CHECK(solved == s.seed);
}
