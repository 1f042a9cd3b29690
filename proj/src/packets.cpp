#include "g2micro/packets.hpp"

#include <sstream>
#include <stdexcept>

namespace g2micro::packets {

MicroPacket micro_packet(const ccsolver::CCMatrix& cc, const orbitgeom::OrbitSet& os,
                         const std::vector<orbitgeom::GeometricParameter>& params, int orbit) {
    if (orbit < 0 || orbit >= os.size()) throw std::invalid_argument("unknown orbit id");
    MicroPacket p;
    p.orbit = orbit;
    for (int xi = 0; xi < cc.nparams; ++xi) {
        long long chi = cc.chi[orbit][xi];
        if (chi == 0) continue;
        p.members.push_back(xi);
        int ddiff = os.orbits[params[xi].orbit].dim - os.orbits[orbit].dim;
        long long sign = ddiff % 2 == 0 ? 1 : -1;
        if (params[xi].compact_form) sign = -sign;
        p.eta[xi] = sign * chi;
    }
    return p;
}

MicroPacket l_packet_nonintegral(const orbitgeom::OrbitSet& os,
                                 const std::vector<orbitgeom::GeometricParameter>& params, int orbit) {
    if (orbit < 0 || orbit >= os.size()) throw std::invalid_argument("unknown orbit id");
    MicroPacket p;
    p.orbit = orbit;
    int xi = orbitgeom::trivial_parameter(params, orbit);
    p.members = {xi};
    p.eta[xi] = 1;
    return p;
}

std::string arthur_class_name(ArthurClass c) {
    switch (c) {
        case ArthurClass::Trivial: return "trivial";
        case ArthurClass::LongRoot: return "long-root";
        case ArthurClass::ShortRoot: return "short-root";
        case ArthurClass::SubregularA: return "subregular-a";
        case ArthurClass::SubregularB: return "subregular-b";
        case ArthurClass::Regular: return "regular";
    }
    return "?";
}

ArthurTarget arthur_target(ArthurClass c) {
    switch (c) {
        case ArthurClass::Trivial: return {false, 9, ""};
        case ArthurClass::LongRoot: return {false, 8, ""};
        case ArthurClass::ShortRoot: return {false, 7, ""};
        case ArthurClass::Regular: return {false, 0, ""};
        case ArthurClass::SubregularA: return {true, -1, "psi_a"};
        case ArthurClass::SubregularB: return {true, -1, "psi_b"};
    }
    return {};
}

std::string eta_string(const MicroPacket& p, const std::string& symbol) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [xi, c] : p.eta) {
        long long a = c < 0 ? -c : c;
        out << (c < 0 ? "-" : (first ? "" : "+"));
        if (a != 1) out << a << "*";
        out << "pi(" << symbol << xi << ")";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace g2micro::packets
