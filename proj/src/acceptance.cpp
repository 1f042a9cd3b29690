#include "g2micro/acceptance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "g2micro/euler.hpp"
#include "g2micro/packets.hpp"
#include "g2micro/pipeline.hpp"
#include "g2micro/translation.hpp"

namespace g2micro::acceptance {

namespace {

using orbitgeom::GroupType;
using orbitgeom::RootNature;
using conormal::NilpOrbit;

constexpr RootNature CI = RootNature::CompactImaginary;
constexpr RootNature NCI = RootNature::NoncompactImaginary;
constexpr RootNature RE = RootNature::Real;
constexpr RootNature CX = RootNature::Complex;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& msg) {
        if (!cond) {
            if (!ok) why << "; ";
            why << msg;
            ok = false;
        }
    }
};

// ---- frozen expected tables ------------------------------------------------

const std::vector<std::string> kG2PWords = {"e", "e", "e", "2", "1", "212", "121", "21212", "12121", "212121"};
const std::vector<std::array<RootNature, 2>> kG2Natures = {
    {NCI, NCI}, {CI, NCI}, {NCI, CI}, {CX, RE}, {RE, CX},
    {CX, CX},   {CX, CX},  {NCI, CX}, {CX, NCI}, {RE, RE}};

struct EdgeSpec { int lower, upper, label; bool solid; };
const std::vector<EdgeSpec> kG2Covers = {
    {0, 3, 2, true}, {0, 4, 1, true}, {1, 3, 2, true}, {2, 4, 1, true},
    {3, 5, 0, false}, {3, 6, 1, true}, {4, 5, 2, true}, {4, 6, 0, false},
    {5, 7, 0, false}, {5, 8, 1, true}, {6, 7, 2, true}, {6, 8, 0, false},
    {7, 9, 1, true}, {8, 9, 2, true}};
const std::vector<EdgeSpec> kSl3Covers = {
    {0, 3, 1, true}, {0, 4, 2, true}, {1, 4, 2, true},
    {2, 3, 1, true}, {3, 5, 2, true}, {4, 5, 1, true}};

const std::set<int> kTau1 = {1, 4, 6, 8, 9, 10};
const std::set<int> kTau2 = {2, 3, 5, 7, 9, 11};
const std::vector<std::vector<int>> kCells = {{0}, {1, 3, 6, 7, 10}, {2, 4, 5, 8, 11}, {9}, {12}};

const std::map<int, NilpOrbit> kImages = {
    {0, NilpOrbit::O6},  {1, NilpOrbit::O51}, {2, NilpOrbit::O52}, {3, NilpOrbit::O51},
    {4, NilpOrbit::O52}, {5, NilpOrbit::O52}, {6, NilpOrbit::O4},  {7, NilpOrbit::O4},
    {8, NilpOrbit::O3},  {9, NilpOrbit::O0}};

ccsolver::CCMatrix expected_cc() {
    ccsolver::CCMatrix cc;
    cc.norbits = 10;
    cc.nparams = 13;
    cc.chi.assign(10, std::vector<long long>(13, 0));
    auto set = [&](int orbit, int xi, long long v) { cc.chi[orbit][xi] = v; };
    for (int i = 0; i <= 5; ++i) set(i, i, 1);
    set(1, 6, 2); set(6, 6, 1);
    set(3, 7, 1); set(7, 7, 1);
    set(4, 8, 1); set(6, 8, 1); set(8, 8, 1);
    set(9, 9, 1);
    set(1, 10, 1); set(6, 10, 1); set(8, 10, 1); set(9, 10, 1);
    set(2, 11, 1); set(7, 11, 1); set(9, 11, 1);
    set(9, 12, 1);
    return cc;
}

ccsolver::WActionOnL expected_wact() {
    ccsolver::WActionOnL w;
    w.norbits = 10;
    w.ngens = 2;
    w.mats.assign(2, IntMat(10, 10));
    auto set = [&](int s, int src, std::vector<std::pair<int, long long>> img) {
        for (auto [tgt, c] : img) w.mats[s - 1].at(tgt, src) = c;
    };
    set(1, 0, {{0, 1}, {4, 1}});
    set(1, 1, {{1, -1}});
    set(1, 2, {{2, 1}, {4, 1}});
    set(1, 3, {{1, 3}, {3, 1}, {6, 1}});
    set(1, 4, {{4, -1}});
    set(1, 5, {{4, 2}, {5, 1}, {6, 1}, {8, 1}});
    set(1, 6, {{6, -1}});
    set(1, 7, {{6, 1}, {7, 1}, {8, 1}, {9, 2}});
    set(1, 8, {{8, -1}});
    set(1, 9, {{9, -1}});
    set(2, 0, {{0, 1}, {3, 1}});
    set(2, 1, {{1, 1}, {3, 1}});
    set(2, 2, {{2, -1}});
    set(2, 3, {{3, -1}});
    set(2, 4, {{2, 1}, {4, 1}, {5, 1}});
    set(2, 5, {{5, -1}});
    set(2, 6, {{6, 1}, {7, 1}});
    set(2, 7, {{7, -1}});
    set(2, 8, {{8, 1}, {9, 2}});
    set(2, 9, {{9, -1}});
    return w;
}

struct PacketSpec {
    int orbit;
    std::map<int, long long> eta;
};
const std::vector<PacketSpec> kPackets = {
    {0, {{0, 1}}},
    {1, {{1, 1}, {6, 2}, {10, 1}}},
    {2, {{2, 1}, {11, 1}}},
    {3, {{3, 1}, {7, 1}}},
    {4, {{4, 1}, {8, 1}}},
    {5, {{5, 1}}},
    {6, {{6, 1}, {8, -1}, {10, 1}}},
    {7, {{7, 1}, {11, -1}}},
    {8, {{8, 1}, {10, -1}}},
    {9, {{9, 1}, {10, 1}, {11, 1}, {12, -1}}}};

std::string edges_str(const std::vector<orbitgeom::CoverEdge>& edges) {
    std::ostringstream out;
    for (const auto& e : edges)
        out << "(" << e.lower << "," << e.upper << "," << (e.solid ? "s" + std::to_string(e.label) : "dot")
            << ") ";
    return out.str();
}

bool covers_match(const std::vector<orbitgeom::CoverEdge>& got, const std::vector<EdgeSpec>& want) {
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i) {
        const auto& g = got[i];
        const auto& w = want[i];
        if (g.lower != w.lower || g.upper != w.upper || g.solid != w.solid) return false;
        if (g.solid && g.label != w.label) return false;
    }
    return true;
}

// ---- criteria ---------------------------------------------------------------

Criterion criterion_orbit_table(const pipeline::IntegralData& g2) {
    Check c;
    const auto& orbits = g2.pair.orbits.orbits;
    c.expect(orbits.size() == 10, "expected 10 orbits");
    const auto& weyl = g2.pair.orbits.weyl;
    for (int i = 0; i < 10 && c.ok; ++i) {
        c.expect(weyl.from_word(orbits[i].p) == weyl.from_word(WeylWord::parse(kG2PWords[i])),
                 "p(S" + std::to_string(i) + ") mismatch");
        c.expect(orbits[i].nature == kG2Natures[i], "nature of S" + std::to_string(i) + " mismatch");
    }
    c.expect(orbits[0].closed && orbits[1].closed && orbits[2].closed, "S0,S1,S2 must be closed");
    c.expect(orbits[9].open, "S9 must be open");
    return {1, "orbit table matches the K-orbit and root-nature data", c.ok, c.why.str()};
}

Criterion criterion_bruhat(const pipeline::IntegralData& g2, const pipeline::PairData& sl3) {
    Check c;
    auto poset = orbitgeom::bruhat_order(g2.pair.orbits);
    c.expect(covers_match(poset.covers, kG2Covers), "integral poset: got " + edges_str(poset.covers));
    auto poset3 = orbitgeom::bruhat_order(sl3.orbits);
    c.expect(covers_match(poset3.covers, kSl3Covers), "(SL3,GL2) poset: got " + edges_str(poset3.covers));
    return {2, "Bruhat order reproduces both Hasse diagrams", c.ok, c.why.str()};
}

Criterion criterion_coherent(const pipeline::IntegralData& g2, const pipeline::PairData& sl3) {
    Check c;
    try {
        grothendieck::validate_action(g2.pair.action, 6);
        grothendieck::validate_action(sl3.action, 3);
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    for (const auto* action : {&g2.pair.action, &sl3.action}) {
        for (const auto& m : action->mats) c.expect((m * m).is_identity(), "involution fails");
        c.expect((action->mats[0] * action->mats[1]).pow(6).is_identity(), "braid relation fails");
    }
    return {3, "coherent continuation matrices satisfy the Coxeter relations", c.ok, c.why.str()};
}

Criterion criterion_tau_cells(const pipeline::IntegralData& g2) {
    Check c;
    std::set<int> tau1, tau2;
    for (int p = 0; p <= 11; ++p) {
        auto tau = grothendieck::tau_invariant(g2.pair.action, p);
        if (tau.count(1)) tau1.insert(p);
        if (tau.count(2)) tau2.insert(p);
    }
    c.expect(tau1 == kTau1, "tau list of s1 mismatch");
    c.expect(tau2 == kTau2, "tau list of s2 mismatch");
    c.expect(g2.cells == kCells, "Harish-Chandra cells mismatch");
    return {4, "tau-invariants and Harish-Chandra cells match", c.ok, c.why.str()};
}

Criterion criterion_moment(const pipeline::IntegralData& g2, const std::string& fdir) {
    Check c;
    c.expect(g2.moment_solutions == 1, "moment assignment not unique");
    for (const auto& [orbit, img] : kImages) {
        auto it = g2.images.find(orbit);
        c.expect(it != g2.images.end() && it->second == img,
                 "image of S" + std::to_string(orbit) + " mismatch");
    }
    auto counts = conormal::springer_counts(fdir);
    c.expect((counts.count == std::array<int, 6>{1, 2, 3, 2, 1, 1}), "multiplicity counts mismatch");
    return {5, "moment-map images are the unique assignment with the stated counts", c.ok, c.why.str()};
}

Criterion criterion_solve(const pipeline::IntegralData& g2, const std::string& fdir) {
    Check c;
    c.expect(g2.solved.cc == expected_cc(), "solved multiplicities differ from the expected cycles");
    auto want = expected_wact();
    for (int s = 0; s < 2; ++s)
        c.expect(g2.solved.wact.mats[s] == want.mats[s],
                 "solved W-action differs at s" + std::to_string(s + 1));
    c.expect(ccsolver::complement_check(0), "complement check must accept 0");
    c.expect(!ccsolver::complement_check(1), "complement check must reject 1");
    c.expect(!ccsolver::complement_check(2), "complement check must reject 2");
    // pinned coefficients
    c.expect(g2.solved.wact.entry(1, 1, 3) == 3, "n(S3,S1) must be 3");
    c.expect(g2.solved.wact.entry(1, 4, 5) == 2, "n(S5,S4) must be 2");
    c.expect(g2.solved.wact.entry(1, 9, 7) == 2, "n(S7,S9) must be 2");
    c.expect(g2.solved.wact.entry(2, 9, 8) == 2, "n(S8,S9) must be 2");
    try {
        auto again = pipeline::solve_integral(fdir, 8);
        c.expect(again.solved.cc == g2.solved.cc, "bound 8 changes the solution");
        for (int s = 0; s < 2; ++s)
            c.expect(again.solved.wact.mats[s] == g2.solved.wact.mats[s], "bound 8 changes the W-action");
    } catch (const std::exception& e) {
        c.expect(false, std::string("bound 8 re-solve failed: ") + e.what());
    }
    return {6, "core solve yields the unique expected cycles and W-action at bounds 4 and 8", c.ok,
            c.why.str()};
}

Criterion criterion_equivariance(const pipeline::IntegralData& g2) {
    Check c;
    c.expect(ccsolver::verify_equivariance(g2.solved.cc, g2.pair.action, g2.solved.wact),
             "equivariance gate fails on the solved data");
    int undetected = 0;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
                for (long long d : {1, -1}) {
                    auto mutated = g2.solved.wact;
                    mutated.mats[s].at(i, j) += d;
                    if (ccsolver::verify_equivariance(g2.solved.cc, g2.pair.action, mutated))
                        ++undetected;
                }
    c.expect(undetected == 0, std::to_string(undetected) + " single-entry mutations slip through");
    return {7, "equivariance gate passes and rejects every single-entry mutation", c.ok, c.why.str()};
}

Criterion criterion_packets(const pipeline::IntegralData& g2) {
    Check c;
    for (const auto& spec : kPackets) {
        auto p = packets::micro_packet(g2.solved.cc, g2.pair.orbits, g2.pair.params, spec.orbit);
        std::vector<int> want_members;
        for (const auto& [xi, coeff] : spec.eta) {
            (void)coeff;
            want_members.push_back(xi);
        }
        c.expect(p.members == want_members && p.eta == spec.eta,
                 "packet of S" + std::to_string(spec.orbit) + " mismatch (" +
                     packets::eta_string(p) + ")");
    }
    return {8, "micro-packets and stable sums match all ten rows", c.ok, c.why.str()};
}

Criterion criterion_nonintegral(const std::string& fdir) {
    Check c;
    for (const auto& pr : orbitgeom::all_pairs()) {
        if (pr.group == GroupType::G2 && pr.k == GroupType::SL2xSL2) continue;
        auto d = pipeline::load_pair(pr, fdir);
        auto cc = ccsolver::cc_nonintegral(d.orbits, d.params);
        for (int i = 0; i < cc.norbits; ++i)
            for (int j = 0; j < cc.nparams; ++j)
                c.expect(cc.chi[i][j] == (d.params[j].orbit == i ? 1 : 0),
                         orbitgeom::pair_name(pr) + ": cycle matrix is not the identity");
        auto wact = ccsolver::wact_nonintegral(d.orbits, d.action, d.params);
        c.expect(ccsolver::verify_equivariance(cc, d.action, wact),
                 orbitgeom::pair_name(pr) + ": transported W-action not equivariant");
        for (int orbit = 0; orbit < d.orbits.size(); ++orbit) {
            auto p = packets::l_packet_nonintegral(d.orbits, d.params, orbit);
            c.expect(p.members.size() == 1 &&
                         p.members[0] == orbitgeom::trivial_parameter(d.params, orbit) &&
                         p.eta.at(p.members[0]) == 1,
                     orbitgeom::pair_name(pr) + ": packet not a singleton");
        }
    }
    return {9, "non-integral pairs have identity cycles and singleton packets", c.ok, c.why.str()};
}

Criterion criterion_singular(const pipeline::IntegralData& g2) {
    Check c;
    auto block = translation::subregular_block(g2.pair.orbits, g2.pair.params);
    c.expect(block.pushforward == std::vector<int>({1, 4, 6, 8, 9, 10}), "pushforward map mismatch");
    auto qcc = translation::singular_cc(block, g2.solved.cc);
    auto col = [&](int g) {
        std::map<int, long long> m;
        for (int q = 0; q < qcc.norbits; ++q)
            if (qcc.chi[q][g] != 0) m[q] = qcc.chi[q][g];
        return m;
    };
    c.expect(col(2) == std::map<int, long long>({{0, 2}, {2, 1}}), "cycle of gamma2 mismatch");
    c.expect(col(3) == std::map<int, long long>({{1, 1}, {2, 1}, {3, 1}}), "cycle of gamma3 mismatch");
    c.expect(col(5) == std::map<int, long long>({{0, 1}, {2, 1}, {3, 1}, {4, 1}}),
             "cycle of gamma5 mismatch");
    for (int g : {0, 1, 4})
        c.expect(col(g).size() == 1, "cycle of gamma" + std::to_string(g) + " must be a single class");
    auto pa = translation::singular_packet(block, qcc, block.psi_a);
    c.expect(pa.eta == std::map<int, long long>({{1, 1}, {3, 1}}), "psi_a stable sum mismatch");
    auto pb = translation::singular_packet(block, qcc, block.psi_b);
    c.expect(pb.eta == std::map<int, long long>({{0, 1}, {2, 2}, {5, 1}}), "psi_b stable sum mismatch");
    return {10, "singular block reproduces the translated cycles and packets", c.ok, c.why.str()};
}

Criterion criterion_euler(const pipeline::IntegralData& g2, const std::string& fdir) {
    Check c;
    try {
        auto leq = euler::closure_leq(g2.pair.orbits);
        auto dims = pipeline::orbit_dims(g2.pair.orbits);
        auto seed = euler::load_euler(fdir + "/euler_g2.tsv", leq, 10);
        auto chi_loc = euler::local_mult_from_paper(g2.solved.cc, seed, dims);
        std::vector<int> triv(10);
        for (int i = 0; i < 10; ++i) triv[i] = orbitgeom::trivial_parameter(g2.pair.params, i);
        auto solved = euler::solve_euler(chi_loc, g2.solved.cc, dims, leq, triv);
        c.expect(solved == seed, "10x10 obstruction matrix not recovered");

        auto block = translation::subregular_block(g2.pair.orbits, g2.pair.params);
        euler::ClosureLeq qleq(block.nq(), std::vector<bool>(block.nq(), false));
        for (int q = 0; q < block.nq(); ++q) qleq[q][q] = true;
        for (auto [lo, hi] : block.q_covers) qleq[lo][hi] = true;
        // transitive closure of the cover relation
        for (bool changed = true; changed;) {
            changed = false;
            for (int a = 0; a < block.nq(); ++a)
                for (int b = 0; b < block.nq(); ++b)
                    if (qleq[a][b])
                        for (int d = 0; d < block.nq(); ++d)
                            if (qleq[b][d] && !qleq[a][d]) { qleq[a][d] = true; changed = true; }
        }
        auto qseed = euler::load_euler(fdir + "/euler_subregular.tsv", qleq, 5);
        auto qcc = translation::singular_cc(block, g2.solved.cc);
        auto qchi_loc = euler::local_mult_from_paper(qcc, qseed, block.q_dims);
        std::vector<int> qtriv = {0, 1, 2, 3, 4};
        auto qsolved = euler::solve_euler(qchi_loc, qcc, block.q_dims, qleq, qtriv);
        c.expect(qsolved == qseed, "5x5 obstruction matrix not recovered");

        auto report = euler::obstruction_report(solved, leq);
        c.expect(report.size() == 3 && report[0].upper == 6 && report[0].lower == 1 &&
                     report[0].value == -1 && report[1].upper == 7 && report[1].lower == 2 &&
                     report[1].value == 2 && report[2].upper == 8 && report[2].lower == 1 &&
                     report[2].value == 2,
                 "obstruction report mismatch");

        // round trip on random unit-triangular matrices over the closure order
        std::mt19937 rng(20250810);
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            euler::EulerMatrix rnd;
            rnd.n = 10;
            rnd.a.assign(10, std::vector<long long>(10, 0));
            for (int i = 0; i < 10; ++i)
                for (int j = 0; j < 10; ++j) {
                    if (i == j) rnd.a[i][j] = 1;
                    else if (leq[i][j]) rnd.a[i][j] = entry(rng);
                }
            auto cl = euler::local_mult_from_paper(g2.solved.cc, rnd, dims);
            auto back = euler::solve_euler(cl, g2.solved.cc, dims, leq, triv);
            if (!(back == rnd)) {
                c.expect(false, "random round trip failed at trial " + std::to_string(trial));
                break;
            }
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    return {11, "both obstruction matrices are recovered and the round trip holds", c.ok, c.why.str()};
}

Criterion criterion_properties(const pipeline::IntegralData& g2, const std::string& fdir) {
    Check c;
    const auto& rs = rootsys::RootSystem::g2();
    const auto& weyl = rs.weyl;

    // Weyl group: 12 elements, closed under composition, long element negates rho
    c.expect(weyl.size() == 12, "Weyl group must have order 12");
    std::set<std::string> canon;
    for (int x = 0; x < weyl.size(); ++x)
        for (int y = 0; y < weyl.size(); ++y) canon.insert(weyl.canonical(weyl.mult(x, y)).compact());
    c.expect(canon.size() == 12, "canonical forms not closed under composition");
    c.expect(rootsys::weyl_apply(WeylWord::parse("121212"), rs.rho) ==
                 rootsys::Vec2({-rs.rho[0], -rs.rho[1]}),
             "long element must negate rho");

    // reflections negate their roots and permute the root set
    std::set<rootsys::Vec2> roots;
    for (const auto& r : rs.positive_roots) {
        roots.insert(r);
        roots.insert({-r[0], -r[1]});
    }
    for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
        const auto& alpha = rs.positive_roots[k];
        const auto& coroot = rs.positive_coroots[k];
        c.expect(rs.reflect(alpha, coroot, alpha) == rootsys::Vec2({-alpha[0], -alpha[1]}),
                 "reflection must negate its root");
        for (const auto& beta : roots)
            c.expect(roots.count(rs.reflect(alpha, coroot, beta)) == 1,
                     "reflection must permute the roots");
    }

    // component groups are conjugation invariant; the evenness set is the K-system
    for (int w = 0; w < weyl.size(); ++w)
        for (int g = 0; g < weyl.size(); ++g) {
            int ginv = 0;
            for (int h = 0; h < weyl.size(); ++h)
                if (weyl.mult(g, h) == weyl.identity()) ginv = h;
            int conj = weyl.mult(weyl.mult(g, w), ginv);
            c.expect(rootsys::torus_component_group(weyl, w) ==
                         rootsys::torus_component_group(weyl, conj),
                     "component group must be conjugation invariant");
        }
    std::set<rootsys::Vec2> even;
    for (const auto& coroot : rs.positive_coroots)
        if (rs.pairing(coroot, rs.rho) % 2 == 0) even.insert(coroot);
    c.expect(even == std::set<rootsys::Vec2>({{1, 1}, {3, 1}}),
             "even-pairing coroots must be the two orthogonal ones");

    // coherent action factors through the group
    for (int e = 0; e < weyl.size(); ++e) {
        WeylWord alt;
        alt.letters = {1, 1};
        for (int l : weyl.canonical(e).letters) alt.letters.push_back(l);
        for (int xi = 0; xi < 13; ++xi) {
            grothendieck::KVector v;
            v.add(xi, 1);
            c.expect(grothendieck::coherent_apply(g2.pair.action, weyl.canonical(e), v) ==
                         grothendieck::coherent_apply(g2.pair.action, alt, v),
                     "coherent action must respect the presentation");
        }
    }

    // vertical/horizontal split and its match with the fixed-point behaviour of m
    std::set<int> v1, v2;
    for (int orbit = 0; orbit < 10; ++orbit) {
        if (conormal::vertical(g2.pair.action, g2.pair.params, orbit, 1)) v1.insert(orbit);
        if (conormal::vertical(g2.pair.action, g2.pair.params, orbit, 2)) v2.insert(orbit);
        for (int s = 1; s <= 2; ++s)
            c.expect(conormal::vertical(g2.pair.action, g2.pair.params, orbit, s) ==
                         (g2.pair.orbits.m_action(s, orbit) == orbit),
                     "vertical orbits must be exactly the m-fixed ones");
    }
    c.expect(v1 == std::set<int>({1, 4, 6, 8, 9}) && v2 == std::set<int>({2, 3, 5, 7, 9}),
             "vertical lists mismatch");

    // RS compatibility: p(m(s)S) lies in {p, s p, s p s} and is an involution
    for (int orbit = 0; orbit < 10; ++orbit)
        for (int s = 1; s <= 2; ++s) {
            int p = weyl.from_word(g2.pair.orbits.orbits[orbit].p);
            int q = weyl.from_word(g2.pair.orbits.orbits[g2.pair.orbits.m_action(s, orbit)].p);
            int gen = weyl.generator(s);
            bool compatible = q == p || q == weyl.mult(gen, p) || q == weyl.mult(weyl.mult(gen, p), gen);
            c.expect(compatible && weyl.mult(q, q) == weyl.identity(), "m-action p-compatibility fails");
        }

    // solved W-action is graded and Coxeter
    for (int s = 0; s < 2; ++s) {
        const IntMat& m = g2.solved.wact.mats[s];
        c.expect((m * m).is_identity(), "solved W-action involution fails");
        for (int tgt = 0; tgt < 10; ++tgt)
            for (int src = 0; src < 10; ++src) {
                if (tgt == src || m.at(tgt, src) == 0) continue;
                c.expect(m.at(tgt, src) > 0, "off-diagonal coefficients must be non-negative");
                c.expect(conormal::vertical(g2.pair.action, g2.pair.params, tgt, s + 1),
                         "coefficients must land on vertical classes");
                c.expect(g2.poset.contained(g2.images.at(tgt), g2.images.at(src)),
                         "coefficients must respect the moment grading");
            }
    }
    c.expect((g2.solved.wact.mats[0] * g2.solved.wact.mats[1]).pow(6).is_identity(),
             "solved W-action braid relation fails");

    // multiplicities: range, pinned units, single-support columns
    std::set<int> covered;
    for (int xi = 0; xi < 13; ++xi) {
        int support = 0;
        for (int orbit = 0; orbit < 10; ++orbit) {
            long long v = g2.solved.cc.chi[orbit][xi];
            c.expect(v >= 0 && v <= 3, "multiplicities must lie in 0..3");
            if (v != 0) ++support;
        }
        c.expect(g2.solved.cc.chi[g2.pair.params[xi].orbit][xi] == 1,
                 "the parameter's own orbit must carry multiplicity one");
        if (support == 1)
            c.expect(g2.solved.cc.chi[g2.pair.params[xi].orbit][xi] == 1,
                     "single-support columns must be basis vectors");
    }

    // packets: covering, sign rule, one member on the orbit itself
    for (int orbit = 0; orbit < 10; ++orbit) {
        auto p = packets::micro_packet(g2.solved.cc, g2.pair.orbits, g2.pair.params, orbit);
        int own = 0;
        for (int xi : p.members) {
            covered.insert(xi);
            int ddiff = g2.pair.orbits.orbits[g2.pair.params[xi].orbit].dim -
                        g2.pair.orbits.orbits[orbit].dim;
            bool negative = p.eta.at(xi) < 0;
            c.expect(negative == ((ddiff % 2 != 0) != g2.pair.params[xi].compact_form),
                     "stable-sum sign rule fails");
            if (g2.pair.params[xi].orbit == orbit && g2.pair.params[xi].local_system == "triv") {
                ++own;
                c.expect(p.eta.at(xi) == 1, "own-orbit member must carry +1");
            }
        }
        c.expect(own == 1, "each packet needs exactly one member on its orbit");
    }
    c.expect(covered.size() == 13, "packet members must cover all parameters");

    // parameter counts follow the component groups
    long long total = 0;
    for (int orbit = 0; orbit < 10; ++orbit) {
        long long chars = 1;
        for (long long d : orbitgeom::parameter_component_group(g2.pair.orbits, orbit)) chars *= d;
        total += chars;
    }
    c.expect(total == 13, "parameter count must match the component groups");

    // translation kills exactly the parameters outside the pushforward image;
    // multiplicities transport unchanged
    auto block = translation::subregular_block(g2.pair.orbits, g2.pair.params);
    std::set<int> image(block.pushforward.begin(), block.pushforward.end());
    c.expect(image.size() == 6, "pushforward must be injective");
    c.expect(13 - static_cast<int>(image.size()) == 7, "translation must kill seven parameters");
    auto qcc = translation::singular_cc(block, g2.solved.cc);
    for (int g = 0; g < block.ngamma(); ++g)
        for (int q = 0; q < block.nq(); ++q)
            c.expect(qcc.chi[q][g] == g2.solved.cc.chi[block.f_star_orbit[q]][block.pushforward[g]],
                     "multiplicities must transport unchanged");
    for (int q = 0; q < block.nq(); ++q) {
        int open_members = 0;
        for (int s : block.fiber[q])
            if (g2.pair.orbits.orbits[s].dim == block.q_dims[q] + 1) ++open_members;
        c.expect(open_members == 1, "each fiber needs a unique open member");
    }

    // nilpotent poset sanity and moment monotonicity along solid edges
    c.expect(!g2.poset.contained(NilpOrbit::O51, NilpOrbit::O52) &&
                 !g2.poset.contained(NilpOrbit::O52, NilpOrbit::O51),
             "the five-dimensional orbits must be incomparable");
    for (int orbit = 0; orbit < 10; ++orbit)
        for (int s = 1; s <= 2; ++s) {
            int up = g2.pair.orbits.m_action(s, orbit);
            if (up == orbit) continue;
            c.expect(g2.poset.contained(g2.images.at(up), g2.images.at(orbit)),
                     "moment images must shrink along solid edges");
        }

    // closure order is graded with closed orbits exactly the minimal ones
    for (int orbit = 0; orbit < 10; ++orbit)
        c.expect(g2.pair.orbits.orbits[orbit].closed == (g2.pair.orbits.closure[orbit].size() == 1),
                 "closed orbits must be exactly the minimal ones");

    // the complement check accepts exactly one candidate
    int accepted = 0;
    for (long long chi = 0; chi <= 2; ++chi)
        if (ccsolver::complement_check(chi)) ++accepted;
    c.expect(accepted == 1, "complement check must accept exactly one candidate");

    (void)fdir;
    return {12, "property suite holds across all modules", c.ok, c.why.str()};
}

} // namespace

std::vector<Criterion> run_all(const std::string& fixtures_dir) {
    std::vector<Criterion> results;
    auto guard = [&](int number, const std::string& name, auto&& fn) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({number, name, false, e.what()});
        }
    };

    pipeline::IntegralData g2;
    pipeline::PairData sl3;
    try {
        g2 = pipeline::solve_integral(fixtures_dir, 4);
        sl3 = pipeline::load_pair({GroupType::SL3, GroupType::GL2}, fixtures_dir);
    } catch (const std::exception& e) {
        for (int n = 1; n <= 12; ++n)
            results.push_back({n, "setup", false, std::string("pipeline failed: ") + e.what()});
        return results;
    }

    guard(1, "orbit table", [&] { return criterion_orbit_table(g2); });
    guard(2, "Bruhat order", [&] { return criterion_bruhat(g2, sl3); });
    guard(3, "coherent validation", [&] { return criterion_coherent(g2, sl3); });
    guard(4, "tau and cells", [&] { return criterion_tau_cells(g2); });
    guard(5, "moment images", [&] { return criterion_moment(g2, fixtures_dir); });
    guard(6, "core solve", [&] { return criterion_solve(g2, fixtures_dir); });
    guard(7, "equivariance gate", [&] { return criterion_equivariance(g2); });
    guard(8, "micro-packets", [&] { return criterion_packets(g2); });
    guard(9, "non-integral pairs", [&] { return criterion_nonintegral(fixtures_dir); });
    guard(10, "singular block", [&] { return criterion_singular(g2); });
    guard(11, "local Euler obstructions", [&] { return criterion_euler(g2, fixtures_dir); });
    guard(12, "property suite", [&] { return criterion_properties(g2, fixtures_dir); });
    return results;
}

bool all_passed(const std::vector<Criterion>& results) {
    for (const auto& c : results)
        if (!c.pass) return false;
    return true;
}

} // namespace g2micro::acceptance
