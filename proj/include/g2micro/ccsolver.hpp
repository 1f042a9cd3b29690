#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2micro/conormal.hpp"
#include "g2micro/grothendieck.hpp"
#include "g2micro/orbitgeom.hpp"

namespace g2micro::ccsolver {

// Microlocal multiplicities chi[orbit][param] >= 0.
struct CCMatrix {
    int norbits = 0;
    int nparams = 0;
    std::vector<std::vector<long long>> chi;

    IntMat as_matrix() const;
    bool operator==(const CCMatrix&) const = default;
};

// Action of the simple reflections on the conormal basis; mats[s-1] column S
// is the expansion of s . [T_S].
struct WActionOnL {
    int norbits = 0;
    int ngens = 0;
    std::vector<IntMat> mats;

    long long entry(int s, int target, int source) const { return mats[s - 1].at(target, source); }
};

struct Unknown {
    enum class Kind { Chi, N };
    Kind kind = Kind::Chi;
    int s = 0;       // generator, N only
    int a = 0;       // Chi: orbit; N: source orbit
    int b = 0;       // Chi: parameter; N: target orbit
    std::string name() const;
    bool operator==(const Unknown&) const = default;
};

// value = c + x_var (var < 0: constant)
struct AffEntry {
    long long c = 0;
    int var = -1;
};

struct Term {
    long long c = 0;
    int v1 = -1;
    int v2 = -1;
};

struct Equation {
    long long c0 = 0;
    std::vector<Term> terms;
    std::string label;
};

struct ConstraintSystem {
    int norbits = 0;
    int nparams = 0;
    int ngens = 0;
    std::vector<Unknown> unknowns;
    std::vector<std::vector<AffEntry>> chi_entry;              // [orbit][param]
    std::vector<std::vector<std::vector<AffEntry>>> a_entry;   // [s-1][target][source]
    std::vector<Equation> equations;
    std::optional<int> complement_var;   // the chi unknown the lattice-complement check decides

    std::optional<int> find_unknown(const Unknown& u) const;
};

// Builds the bilinear system CC(s.P) = s.CC(P) with the support, tau/vertical,
// containment and special-saturation masks applied to the chi entries, and
// the graded W-action shape applied to the n entries.
ConstraintSystem assemble(const orbitgeom::OrbitSet& os,
                          const grothendieck::CoherentAction& action,
                          const std::vector<orbitgeom::GeometricParameter>& params,
                          const std::map<int, conormal::NilpOrbit>& images,
                          const conormal::NilpotentPoset& poset,
                          const std::vector<std::vector<int>>& cells,
                          const std::map<int, conormal::NilpOrbit>& cell_av);

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    CCMatrix cc;
    WActionOnL wact;
    int equivariance_solutions = 0;      // candidates before the complement filter
    std::vector<std::string> notes;      // which constraints were active
};

// Exhausts the search space (constraint propagation + branching, every unknown
// in 0..bound), applies the lattice-complement check when the equivariance
// equations leave more than one candidate, and requires a unique survivor.
SolveResult solve(const ConstraintSystem& sys, int bound = 4);

// True iff a rank-2 lattice complement of the invariant vector
// v = (chi-2) q2 + q5 closed under both sigma actions exists.
bool complement_check(long long chi_candidate);

// Every parameter's cycle is its own conormal class.
CCMatrix cc_nonintegral(const orbitgeom::OrbitSet& os,
                        const std::vector<orbitgeom::GeometricParameter>& params);

// W-action on conormal classes for pairs with identity CC: the coherent
// matrices transported along the trivial parameters.
WActionOnL wact_nonintegral(const orbitgeom::OrbitSet& os,
                            const grothendieck::CoherentAction& action,
                            const std::vector<orbitgeom::GeometricParameter>& params);

// (CC o coherent_s) == (waction_s o CC) for every generator.
bool verify_equivariance(const CCMatrix& cc, const grothendieck::CoherentAction& action,
                         const WActionOnL& wact);

// s . v on the conormal basis.
conormal::LVector wact_apply(const WActionOnL& wact, int s, const conormal::LVector& v);

// the cycle of a parameter as a conormal-class vector
conormal::LVector cc_column(const CCMatrix& cc, int param);

} // namespace g2micro::ccsolver
