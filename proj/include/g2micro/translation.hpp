#pragma once

#include <string>
#include <vector>

#include "g2micro/ccsolver.hpp"
#include "g2micro/orbitgeom.hpp"
#include "g2micro/packets.hpp"

namespace g2micro::translation {

// Singular-infinitesimal-character block of the subregular example: the
// partial flag variety collapses the alpha1 direction, so the fibers of the
// projection are exactly the P_{s1}-classes of K-orbits.
struct SingularBlock {
    std::vector<int> q_dims;                    // per Q-orbit
    std::vector<std::vector<int>> fiber;        // per Q-orbit: the K-orbits over it
    std::vector<int> f_star_orbit;              // per Q-orbit: open member of its fiber
    std::vector<std::string> fiber_provenance;  // "paper" or "derived" per Q-orbit
    std::vector<int> gamma_orbit;               // per gamma-parameter: its Q-orbit
    std::vector<int> pushforward;               // per gamma-parameter: the parameter it pulls back to
    std::vector<std::pair<int, int>> q_covers;  // closure covers (lower, upper)
    int psi_a = -1;                             // Q-orbit of the subregular parameter psi_a
    int psi_b = -1;

    int nq() const { return static_cast<int>(fiber.size()); }
    int ngamma() const { return static_cast<int>(gamma_orbit.size()); }
};

// Derives the block from the integral orbit set: fibers are the P_{s1}
// classes, Q-orbits are numbered by dimension, gamma-parameters are the
// parameters of the block, and the pushforward sends each gamma to the
// parameter of the open fiber orbit (matching local systems on the open
// Q-orbit). psi_a is the Q-orbit with fiber {S0, S2, S4}, psi_b the one with
// fiber {S1}.
SingularBlock subregular_block(const orbitgeom::OrbitSet& os,
                               const std::vector<orbitgeom::GeometricParameter>& params);

// chi_Q(gamma) = chi_{f*Q}(f* gamma): multiplicities transport unchanged.
ccsolver::CCMatrix singular_cc(const SingularBlock& block, const ccsolver::CCMatrix& cc);

// Micro-packet over the gamma-parameters with the sign rule on Q-dimensions
// (all members live on the split form here).
packets::MicroPacket singular_packet(const SingularBlock& block, const ccsolver::CCMatrix& qcc,
                                     int q_orbit);

} // namespace g2micro::translation
