#include "g2micro/pipeline.hpp"

namespace g2micro::pipeline {

PairData load_pair(const orbitgeom::SymmetricPair& pair, const std::string& fixtures_dir) {
    PairData d;
    d.orbits = orbitgeom::orbit_table(pair, fixtures_dir);
    d.params = orbitgeom::geometric_parameters(d.orbits);
    d.action = grothendieck::coherent_action(d.orbits, d.params, fixtures_dir);
    return d;
}

IntegralData solve_integral(const std::string& fixtures_dir, int bound) {
    IntegralData d;
    d.pair = load_pair({orbitgeom::GroupType::G2, orbitgeom::GroupType::SL2xSL2}, fixtures_dir);
    d.poset = conormal::nilpotent_poset();
    d.counts = conormal::springer_counts(fixtures_dir);
    d.cells = grothendieck::hc_cells(d.pair.action);

    auto seeds = conormal::default_seeds();
    auto moment = conormal::moment_images(seeds, d.counts, d.poset, d.pair.orbits, d.pair.action,
                                          d.pair.params);
    if (moment.solution_count != 1)
        throw ccsolver::SolveError("moment-map image assignment is not unique (" +
                                   std::to_string(moment.solution_count) + " solutions)");
    d.images = moment.image;
    d.moment_solutions = moment.solution_count;

    auto av = conormal::cell_av(d.cells, seeds, d.pair.orbits, d.pair.action, d.pair.params);
    d.system = ccsolver::assemble(d.pair.orbits, d.pair.action, d.pair.params, d.images, d.poset,
                                  d.cells, av);
    d.solved = ccsolver::solve(d.system, bound);
    return d;
}

std::vector<int> orbit_dims(const orbitgeom::OrbitSet& os) {
    std::vector<int> dims;
    for (const auto& rec : os.orbits) dims.push_back(rec.dim);
    return dims;
}

} // namespace g2micro::pipeline
