#include "g2micro/translation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "g2micro/fixtures.hpp"

namespace g2micro::translation {

SingularBlock subregular_block(const orbitgeom::OrbitSet& os,
                               const std::vector<orbitgeom::GeometricParameter>& params) {
    using orbitgeom::GroupType;
    if (!(os.pair.group == GroupType::G2 && os.pair.k == GroupType::SL2xSL2))
        throw std::invalid_argument("subregular block is built over the integral pair");

    SingularBlock block;

    // fibers = P_{s1}-classes, keyed by the open (m(s1)-fixed, maximal) member
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < os.size(); ++i) classes[os.m_action(1, i)].push_back(i);

    std::vector<std::pair<int, int>> by_dim; // (dim of open member, open member)
    for (const auto& [open, members] : classes) {
        (void)members;
        by_dim.push_back({os.orbits[open].dim, open});
    }
    std::sort(by_dim.begin(), by_dim.end());
    for (size_t q = 1; q < by_dim.size(); ++q)
        if (by_dim[q].first == by_dim[q - 1].first)
            throw FixtureError("fiber blocks are not separated by dimension");

    for (auto [dim, open] : by_dim) {
        block.q_dims.push_back(dim - 1); // the fibration has one-dimensional fibers
        auto members = classes[open];
        std::sort(members.begin(), members.end());
        block.fiber.push_back(members);
        block.f_star_orbit.push_back(open);
        bool stated = members == std::vector<int>{1} || members == std::vector<int>{0, 2, 4};
        block.fiber_provenance.push_back(stated ? "paper" : "derived");
    }

    for (int q = 0; q < block.nq(); ++q) {
        if (block.fiber[q] == std::vector<int>{1}) block.psi_b = q;
        if (block.fiber[q] == std::vector<int>{0, 2, 4}) block.psi_a = q;
    }
    if (block.psi_a < 0 || block.psi_b < 0)
        throw FixtureError("subregular block misses the stated closed fibers");

    // gamma-parameters: one trivial parameter per Q-orbit, plus the extra
    // local systems of the open Q-orbit, matched with those of its open fiber
    // orbit that survive the translation (component group Z/2 on Q4, so one)
    for (int q = 0; q < block.nq(); ++q) {
        block.gamma_orbit.push_back(q);
        block.pushforward.push_back(orbitgeom::trivial_parameter(params, block.f_star_orbit[q]));
    }
    int open_q = block.nq() - 1;
    int open_orbit = block.f_star_orbit[open_q];
    for (const auto& p : params)
        if (p.orbit == open_orbit && p.local_system != "triv" && !p.compact_form) {
            block.gamma_orbit.push_back(open_q);
            block.pushforward.push_back(p.id);
            break; // exactly one nontrivial system survives on the open Q-orbit
        }

    // closure order transported through the fibration: Q inside the closure
    // of Q' iff the open fiber orbit of Q lies in the closure of that of Q'
    auto q_leq = [&](int a, int b) {
        return os.in_closure(block.f_star_orbit[a], block.f_star_orbit[b]);
    };
    for (int hi = 0; hi < block.nq(); ++hi)
        for (int lo = 0; lo < block.nq(); ++lo) {
            if (lo == hi || !q_leq(lo, hi)) continue;
            bool cover = true;
            for (int mid = 0; mid < block.nq(); ++mid)
                if (mid != lo && mid != hi && q_leq(lo, mid) && q_leq(mid, hi)) cover = false;
            if (cover) block.q_covers.push_back({lo, hi});
        }
    std::sort(block.q_covers.begin(), block.q_covers.end());
    return block;
}

ccsolver::CCMatrix singular_cc(const SingularBlock& block, const ccsolver::CCMatrix& cc) {
    ccsolver::CCMatrix out;
    out.norbits = block.nq();
    out.nparams = block.ngamma();
    out.chi.assign(out.norbits, std::vector<long long>(out.nparams, 0));
    for (int g = 0; g < out.nparams; ++g)
        for (int q = 0; q < out.norbits; ++q)
            out.chi[q][g] = cc.chi[block.f_star_orbit[q]][block.pushforward[g]];
    return out;
}

packets::MicroPacket singular_packet(const SingularBlock& block, const ccsolver::CCMatrix& qcc,
                                     int q_orbit) {
    if (q_orbit < 0 || q_orbit >= block.nq()) throw std::invalid_argument("unknown Q-orbit");
    packets::MicroPacket p;
    p.orbit = q_orbit;
    for (int g = 0; g < qcc.nparams; ++g) {
        long long chi = qcc.chi[q_orbit][g];
        if (chi == 0) continue;
        p.members.push_back(g);
        int ddiff = block.q_dims[block.gamma_orbit[g]] - block.q_dims[q_orbit];
        p.eta[g] = (ddiff % 2 == 0 ? 1 : -1) * chi;
    }
    return p;
}

} // namespace g2micro::translation
