#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2micro/ccsolver.hpp"
#include "g2micro/conormal.hpp"
#include "g2micro/grothendieck.hpp"
#include "g2micro/orbitgeom.hpp"

namespace g2micro::pipeline {

// Everything attached to one symmetric pair.
struct PairData {
    orbitgeom::OrbitSet orbits;
    std::vector<orbitgeom::GeometricParameter> params;
    grothendieck::CoherentAction action;
};

PairData load_pair(const orbitgeom::SymmetricPair& pair, const std::string& fixtures_dir);

// The full integral-pair computation: orbit data, cells, moment images, and
// the solved multiplicities and W-action.
struct IntegralData {
    PairData pair;
    conormal::NilpotentPoset poset;
    conormal::SpringerCounts counts;
    std::vector<std::vector<int>> cells;
    std::map<int, conormal::NilpOrbit> images;
    int moment_solutions = 0;
    ccsolver::ConstraintSystem system;
    ccsolver::SolveResult solved;
};

IntegralData solve_integral(const std::string& fixtures_dir, int bound = 4);

std::vector<int> orbit_dims(const orbitgeom::OrbitSet& os);

} // namespace g2micro::pipeline
