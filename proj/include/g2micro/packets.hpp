#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2micro/ccsolver.hpp"
#include "g2micro/orbitgeom.hpp"

namespace g2micro::packets {

struct MicroPacket {
    int orbit = 0;
    std::vector<int> members;           // parameter ids, ascending
    std::map<int, long long> eta;       // parameter id -> signed coefficient

    bool operator==(const MicroPacket&) const = default;
};

// Members are the parameters with nonzero multiplicity along the orbit; the
// stable-sum coefficient of xi is e(xi) (-1)^(dim S_xi - dim S) chi_S(P_xi)
// with Kottwitz sign +1 on the split form and -1 on the compact form.
MicroPacket micro_packet(const ccsolver::CCMatrix& cc, const orbitgeom::OrbitSet& os,
                         const std::vector<orbitgeom::GeometricParameter>& params, int orbit);

// Non-integral case: the micro-packet is the L-packet, a singleton.
MicroPacket l_packet_nonintegral(const orbitgeom::OrbitSet& os,
                                 const std::vector<orbitgeom::GeometricParameter>& params, int orbit);

enum class ArthurClass { Trivial, LongRoot, ShortRoot, SubregularA, SubregularB, Regular };

std::string arthur_class_name(ArthurClass c);

struct ArthurTarget {
    bool singular = false;
    int orbit = -1;           // K-orbit index when not singular
    std::string handle;       // "psi_a" / "psi_b" for the singular subregular parameters
};

// The orbit whose micro-packet realizes each Arthur parameter class; the
// subregular classes have singular infinitesimal character and point at the
// partial-flag orbits instead.
ArthurTarget arthur_target(ArthurClass c);

std::string eta_string(const MicroPacket& p, const std::string& symbol = "xi");

} // namespace g2micro::packets
