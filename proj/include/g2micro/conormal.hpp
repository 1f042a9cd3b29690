#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2micro/grothendieck.hpp"
#include "g2micro/orbitgeom.hpp"

namespace g2micro::conormal {

// Integer vector on the conormal classes [T_S].
struct LVector {
    std::map<int, long long> coeffs;

    long long at(int id) const {
        auto it = coeffs.find(id);
        return it == coeffs.end() ? 0 : it->second;
    }
    void add(int id, long long c) {
        if (c == 0) return;
        auto [it, _] = coeffs.try_emplace(id, 0);
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
    bool operator==(const LVector&) const = default;
};

// The six nilpotent K-orbits of the integral case.
enum class NilpOrbit { O6 = 0, O51 = 1, O52 = 2, O4 = 3, O3 = 4, O0 = 5 };

std::string nilp_name(NilpOrbit o);

struct NilpotentPoset {
    std::vector<int> dims;                        // (6,5,5,4,3,0)
    std::vector<std::pair<int, int>> covers;      // (lower, upper) by enum index
    std::vector<std::string> component_group;     // "trivial", "S3", "Z2"
    std::vector<bool> special;                    // special G-saturation
    std::vector<std::vector<bool>> leq;           // leq[a][b]: O_a inside closure of O_b

    bool contained(NilpOrbit a, NilpOrbit b) const {
        return leq[static_cast<int>(a)][static_cast<int>(b)];
    }
};

NilpotentPoset nilpotent_poset();

struct SpringerCounts {
    std::array<int, 6> count{};
    std::array<std::string, 6> component_group{};
};

// springer_g2.tsv: rows nilp_orbit, count, component_group; counts must sum to
// the number of K-orbits on X and component groups must match the poset.
SpringerCounts springer_counts(const std::string& fixtures_dir);

// S is s-vertical iff s lies in the tau-invariant of its trivial parameter.
bool vertical(const grothendieck::CoherentAction& action,
              const std::vector<orbitgeom::GeometricParameter>& params, int orbit, int s);

struct MomentResult {
    std::map<int, NilpOrbit> image;  // orbit id -> nilpotent orbit
    int solution_count = 0;
};

// Solves for the moment-map images of the conormal closures from the seeds,
// the per-orbit multiplicities, weak-order monotonicity along solid edges,
// and cell/associated-variety consistency for the orbits whose trivial
// parameter is already pinned to a single conormal class by the masks.
MomentResult moment_images(const std::map<int, NilpOrbit>& seeds, const SpringerCounts& counts,
                           const NilpotentPoset& poset, const orbitgeom::OrbitSet& os,
                           const grothendieck::CoherentAction& action,
                           const std::vector<orbitgeom::GeometricParameter>& params);

// Seed data of the integral case.
std::map<int, NilpOrbit> default_seeds();

// True when the support and tau/vertical masks already pin the cycle of the
// orbit's trivial parameter to the single class [T_S]; for such an orbit the
// associated variety equals the moment image of that class.
bool single_class_forced(const orbitgeom::OrbitSet& os,
                         const grothendieck::CoherentAction& action,
                         const std::vector<orbitgeom::GeometricParameter>& params, int orbit);

// Associated variety per Harish-Chandra cell, read off the seeded orbits
// whose trivial parameter is mask-forced to a single conormal class (cells
// without one get nothing).
std::map<int, NilpOrbit> cell_av(const std::vector<std::vector<int>>& cells,
                                 const std::map<int, NilpOrbit>& seeds,
                                 const orbitgeom::OrbitSet& os,
                                 const grothendieck::CoherentAction& action,
                                 const std::vector<orbitgeom::GeometricParameter>& params);

} // namespace g2micro::conormal
