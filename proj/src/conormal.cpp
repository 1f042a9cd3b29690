#include "g2micro/conormal.hpp"

#include <algorithm>
#include <functional>

#include "g2micro/fixtures.hpp"

namespace g2micro::conormal {

std::string nilp_name(NilpOrbit o) {
    switch (o) {
        case NilpOrbit::O6: return "O6";
        case NilpOrbit::O51: return "O5,1";
        case NilpOrbit::O52: return "O5,2";
        case NilpOrbit::O4: return "O4";
        case NilpOrbit::O3: return "O3";
        case NilpOrbit::O0: return "O0";
    }
    return "?";
}

NilpotentPoset nilpotent_poset() {
    NilpotentPoset p;
    p.dims = {6, 5, 5, 4, 3, 0};
    // covers upward: O51 < O6, O52 < O6, O4 < O51, O4 < O52, O3 < O4, O0 < O3
    p.covers = {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {4, 3}, {5, 4}};
    p.component_group = {"trivial", "S3", "Z2", "trivial", "trivial", "trivial"};
    // the two five-dimensional orbits share the special G-saturation; the
    // four- and three-dimensional saturations are not special
    p.special = {true, true, true, false, false, true};
    p.leq.assign(6, std::vector<bool>(6, false));
    for (int i = 0; i < 6; ++i) p.leq[i][i] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : p.covers)
            for (int a = 0; a < 6; ++a)
                if (p.leq[a][lo] && !p.leq[a][hi]) { p.leq[a][hi] = true; changed = true; }
    }
    return p;
}

namespace {

NilpOrbit nilp_from_name(const std::string& s) {
    if (s == "O6") return NilpOrbit::O6;
    if (s == "O5,1" || s == "O51") return NilpOrbit::O51;
    if (s == "O5,2" || s == "O52") return NilpOrbit::O52;
    if (s == "O4") return NilpOrbit::O4;
    if (s == "O3") return NilpOrbit::O3;
    if (s == "O0") return NilpOrbit::O0;
    throw FixtureError("unknown nilpotent orbit: " + s);
}

} // namespace

SpringerCounts springer_counts(const std::string& fixtures_dir) {
    SpringerCounts c;
    std::array<bool, 6> seen{};
    for (const auto& row : read_tsv(fixtures_dir + "/springer_g2.tsv")) {
        if (row.size() != 3) throw FixtureError("springer fixture row needs 3 fields");
        int idx = static_cast<int>(nilp_from_name(row[0]));
        c.count[idx] = static_cast<int>(to_int(row[1], "springer count"));
        c.component_group[idx] = row[2];
        seen[idx] = true;
    }
    int total = 0;
    NilpotentPoset poset = nilpotent_poset();
    for (int i = 0; i < 6; ++i) {
        if (!seen[i]) throw FixtureError("springer fixture misses " + nilp_name(static_cast<NilpOrbit>(i)));
        if (c.component_group[i] != poset.component_group[i])
            throw FixtureError("springer fixture component group mismatch at " +
                               nilp_name(static_cast<NilpOrbit>(i)));
        total += c.count[i];
    }
    if (total != 10) throw FixtureError("springer counts must sum to 10");
    return c;
}

bool vertical(const grothendieck::CoherentAction& action,
              const std::vector<orbitgeom::GeometricParameter>& params, int orbit, int s) {
    int p = orbitgeom::trivial_parameter(params, orbit);
    return grothendieck::tau_invariant(action, p).count(s) > 0;
}

std::map<int, NilpOrbit> default_seeds() {
    return {{0, NilpOrbit::O6}, {1, NilpOrbit::O51}, {2, NilpOrbit::O52},
            {8, NilpOrbit::O3}, {9, NilpOrbit::O0}};
}

bool single_class_forced(const orbitgeom::OrbitSet& os,
                         const grothendieck::CoherentAction& action,
                         const std::vector<orbitgeom::GeometricParameter>& params, int orbit) {
    int param = orbitgeom::trivial_parameter(params, orbit);
    auto tau = grothendieck::tau_invariant(action, param);
    for (int s_orbit : os.closure[orbit]) {
        if (s_orbit == orbit) continue;
        bool masked = false;
        for (int s : tau)
            if (!vertical(action, params, s_orbit, s)) masked = true;
        if (!masked) return false;
    }
    return true;
}

std::map<int, NilpOrbit> cell_av(const std::vector<std::vector<int>>& cells,
                                 const std::map<int, NilpOrbit>& seeds,
                                 const orbitgeom::OrbitSet& os,
                                 const grothendieck::CoherentAction& action,
                                 const std::vector<orbitgeom::GeometricParameter>& params) {
    std::map<int, NilpOrbit> av;
    for (size_t c = 0; c < cells.size(); ++c) {
        std::optional<NilpOrbit> found;
        for (int param : cells[c]) {
            if (params[param].local_system != "triv") continue;
            int orbit = params[param].orbit;
            auto it = seeds.find(orbit);
            if (it == seeds.end()) continue;
            if (!single_class_forced(os, action, params, orbit)) continue;
            if (found && *found != it->second)
                throw FixtureError("seeds disagree on the associated variety of a cell");
            found = it->second;
        }
        if (found) av[static_cast<int>(c)] = *found;
    }
    return av;
}

MomentResult moment_images(const std::map<int, NilpOrbit>& seeds, const SpringerCounts& counts,
                           const NilpotentPoset& poset, const orbitgeom::OrbitSet& os,
                           const grothendieck::CoherentAction& action,
                           const std::vector<orbitgeom::GeometricParameter>& params) {
    const int n = os.size();
    auto cells = grothendieck::hc_cells(action);
    auto av = cell_av(cells, seeds, os, action, params);

    // cell/AV consistency applies to each orbit whose trivial parameter is
    // forced to the single class [T_S] by the support and tau masks alone
    std::map<int, NilpOrbit> forced = seeds;
    for (int orbit = 0; orbit < n; ++orbit) {
        if (!single_class_forced(os, action, params, orbit)) continue;
        int param = orbitgeom::trivial_parameter(params, orbit);
        int cell = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (std::find(cells[c].begin(), cells[c].end(), param) != cells[c].end())
                cell = static_cast<int>(c);
        auto it = av.find(cell);
        if (it == av.end()) continue;
        auto [fit, inserted] = forced.try_emplace(orbit, it->second);
        if (!inserted && fit->second != it->second)
            throw FixtureError("cell/AV constraint contradicts a seed");
    }

    // solid weak-order edges
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int s = 1; s <= os.weyl.rank(); ++s)
            if (os.m_action(s, i) != i) edges.push_back({i, os.m_action(s, i)});

    std::vector<int> unassigned;
    for (int i = 0; i < n; ++i)
        if (!forced.count(i)) unassigned.push_back(i);

    MomentResult result;
    std::map<int, NilpOrbit> current = forced;
    std::array<int, 6> used{};
    for (const auto& [orbit, o] : forced) {
        (void)orbit;
        ++used[static_cast<int>(o)];
    }
    for (int i = 0; i < 6; ++i)
        if (used[i] > counts.count[i]) throw FixtureError("seeds exceed the Springer counts");

    auto consistent = [&](int /*orbit*/) {
        for (auto [lo, hi] : edges) {
            auto a = current.find(lo);
            auto b = current.find(hi);
            if (a == current.end() || b == current.end()) continue;
            if (!poset.contained(b->second, a->second)) return false;
        }
        return true;
    };

    std::function<void(size_t)> search = [&](size_t idx) {
        if (idx == unassigned.size()) {
            ++result.solution_count;
            if (result.solution_count == 1) result.image = current;
            return;
        }
        int orbit = unassigned[idx];
        for (int o = 0; o < 6; ++o) {
            if (used[o] >= counts.count[o]) continue;
            current[orbit] = static_cast<NilpOrbit>(o);
            ++used[o];
            if (consistent(orbit)) search(idx + 1);
            --used[o];
            current.erase(orbit);
        }
    };
    search(0);
    return result;
}

} // namespace g2micro::conormal
