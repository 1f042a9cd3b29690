#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "g2micro/intmat.hpp"
#include "g2micro/orbitgeom.hpp"

namespace g2micro::grothendieck {

// Integer vector on the basis of irreducible classes P(xi).
struct KVector {
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
    bool operator==(const KVector&) const = default;
};

// Action of the simple reflections on the parameter basis. mats[s-1] column j
// is the expansion of s . P_j.
struct CoherentAction {
    int nparams = 0;
    int ngens = 0;
    std::vector<IntMat> mats;

    long long entry(int s, int target, int source) const { return mats[s - 1].at(target, source); }
};

// Reads coherent_<pair>.tsv (rows: generator, source, target, coeff) and
// validates involutivity, the braid relation, and that every parameter has a
// +-1 diagonal entry for every generator.
CoherentAction load_coherent_table(const orbitgeom::SymmetricPair& pair,
                                   const std::vector<orbitgeom::GeometricParameter>& params,
                                   const std::string& fixtures_dir);

void validate_action(const CoherentAction& action, int braid_order);

// For pairs whose action is forced (every orbit carries only its trivial
// parameter and no cross terms beyond the m-image): s.P = -P when m(s) fixes
// the orbit, s.P = P + P' with P' on m(s)S otherwise.
CoherentAction synthesize_coherent(const orbitgeom::OrbitSet& os,
                                   const std::vector<orbitgeom::GeometricParameter>& params);

// Either loads the transcribed fixture (integral G2 and (SL3,GL2)) or
// synthesizes the forced action.
CoherentAction coherent_action(const orbitgeom::OrbitSet& os,
                               const std::vector<orbitgeom::GeometricParameter>& params,
                               const std::string& fixtures_dir);

// Left action, word applied right-to-left.
KVector coherent_apply(const CoherentAction& action, const WeylWord& w, const KVector& v);

// Generators acting by -1 on the parameter's basis vector.
std::set<int> tau_invariant(const CoherentAction& action, int param);

// Harish-Chandra cells: strongly connected components of the reachability
// preorder, sorted by least member.
std::vector<std::vector<int>> hc_cells(const CoherentAction& action);

} // namespace g2micro::grothendieck
