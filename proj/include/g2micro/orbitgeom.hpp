#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2micro/rootsys.hpp"
#include "g2micro/weyl.hpp"

namespace g2micro::orbitgeom {

enum class GroupType { Torus, GL2, SL2xSL2, SL3, G2 };

std::string group_name(GroupType t);

// A (group, symmetric subgroup) pair; only the rows of the classification
// table are valid.
struct SymmetricPair {
    GroupType group;
    GroupType k;

    bool operator==(const SymmetricPair&) const = default;
};

bool pair_valid(const SymmetricPair& p);
std::string pair_name(const SymmetricPair& p);              // e.g. "g2", "sl3", "g2_full"
std::optional<SymmetricPair> pair_from_name(const std::string& name);
std::vector<SymmetricPair> all_pairs();

enum class RootNature { CompactImaginary, NoncompactImaginary, Real, Complex, None };

std::string nature_token(RootNature n);
RootNature nature_from_token(const std::string& tok);

struct OrbitRecord {
    int id = 0;
    WeylWord p;
    int dim = 0;
    std::array<RootNature, 2> nature{RootNature::None, RootNature::None};
    bool closed = false;
    bool open = false;
};

// A validated orbit table together with everything derived from it: the
// m-action of the simple reflections, the P_s fibers, and the closure order.
struct OrbitSet {
    SymmetricPair pair{GroupType::Torus, GroupType::Torus};
    WeylGroup weyl = WeylGroup::trivial();
    std::vector<OrbitRecord> orbits;
    std::vector<std::array<int, 2>> m;            // m[orbit][s-1]
    std::vector<std::vector<int>> closure;        // sorted orbit ids

    int size() const { return static_cast<int>(orbits.size()); }
    int m_action(int s, int orbit) const { return m[orbit][s - 1]; }
    bool in_closure(int lower, int upper) const;
    std::vector<int> p_class(int s, int orbit) const;  // orbits with the same m(s)-image
    int dim_x() const;                                 // dimension of the flag variety
};

// Loads (or synthesizes, for the single-orbit pairs) the orbit table and runs
// the cross-validation: involutivity of p, nature/p compatibility, the
// m-action recursion, dimension grading, and reachability from closed orbits.
OrbitSet orbit_table(const SymmetricPair& pair, const std::string& fixtures_dir);

struct CoverEdge {
    int lower = 0;
    int upper = 0;
    int label = 0;   // generator 1/2 for solid edges, 0 for dotted
    bool solid = false;
};

struct OrbitPoset {
    SymmetricPair pair{GroupType::Torus, GroupType::Torus};
    std::vector<OrbitRecord> orbits;
    std::vector<CoverEdge> covers;   // sorted by (lower, upper, label)
};

OrbitPoset bruhat_order(const OrbitSet& os);
std::string hasse_dot(const OrbitPoset& poset);

enum class SubsystemType { Torus, A1, A1xA1, A2, G2 };

std::string subsystem_name(SubsystemType t);

// Type of the integral root subsystem {coroot : <coroot, lambda> integral}.
SubsystemType integral_subsystem(const rootsys::QVec2& lambda);

// The possible symmetric subgroups for each centralizer type.
std::vector<SymmetricPair> k_lambda_options(SubsystemType t);

// Langlands component group of the parameter attached to an orbit: elementary
// divisors > 1, empty when connected. Trivial for every non-integral pair.
std::vector<long long> parameter_component_group(const OrbitSet& os, int orbit);

struct GeometricParameter {
    int id = 0;
    int orbit = 0;
    std::string local_system; // "triv" or "L<id>"
    bool compact_form = false;
};

// One trivial-system parameter per orbit plus one parameter per nontrivial
// component-group character (13 in the integral G2 case, the last flagged as
// the compact-form parameter).
std::vector<GeometricParameter> geometric_parameters(const OrbitSet& os);

// id of the trivial-system parameter on an orbit
int trivial_parameter(const std::vector<GeometricParameter>& params, int orbit);

} // namespace g2micro::orbitgeom
