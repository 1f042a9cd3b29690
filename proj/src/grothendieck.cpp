#include "g2micro/grothendieck.hpp"

#include <algorithm>
#include <functional>

#include "g2micro/fixtures.hpp"

namespace g2micro::grothendieck {

void validate_action(const CoherentAction& action, int braid_order) {
    for (int s = 1; s <= action.ngens; ++s) {
        const IntMat& m = action.mats[s - 1];
        for (int j = 0; j < action.nparams; ++j)
            if (m.at(j, j) != 1 && m.at(j, j) != -1)
                throw FixtureError("coherent action: diagonal entry of s" + std::to_string(s) +
                                   " at parameter " + std::to_string(j) + " must be +-1");
        if (!(m * m).is_identity())
            throw FixtureError("coherent action: s" + std::to_string(s) + " is not an involution");
    }
    if (action.ngens == 2) {
        IntMat prod = action.mats[0] * action.mats[1];
        if (!prod.pow(braid_order).is_identity())
            throw FixtureError("coherent action: braid relation of order " +
                               std::to_string(braid_order) + " fails");
        if (!prod.pow(6).is_identity())
            throw FixtureError("coherent action: (s1 s2)^6 is not the identity");
    }
}

CoherentAction load_coherent_table(const orbitgeom::SymmetricPair& pair,
                                   const std::vector<orbitgeom::GeometricParameter>& params,
                                   const std::string& fixtures_dir) {
    int n = static_cast<int>(params.size());
    WeylGroup w = WeylGroup::g2();
    int ngens;
    switch (pair.group) {
        case orbitgeom::GroupType::G2: ngens = 2; break;
        case orbitgeom::GroupType::SL3: w = WeylGroup::a2(); ngens = 2; break;
        default: throw FixtureError("no coherent fixture for pair " + orbitgeom::pair_name(pair));
    }
    CoherentAction action;
    action.nparams = n;
    action.ngens = ngens;
    action.mats.assign(ngens, IntMat(n, n));

    auto rows = read_tsv(fixtures_dir + "/coherent_" + orbitgeom::pair_name(pair) + ".tsv");
    for (const auto& row : rows) {
        if (row.size() != 4) throw FixtureError("coherent fixture row needs 4 fields");
        int s = static_cast<int>(to_int(row[0], "generator"));
        int src = static_cast<int>(to_int(row[1], "source"));
        int tgt = static_cast<int>(to_int(row[2], "target"));
        long long c = to_int(row[3], "coefficient");
        if (s < 1 || s > ngens || src < 0 || src >= n || tgt < 0 || tgt >= n)
            throw FixtureError("coherent fixture row out of range");
        action.mats[s - 1].at(tgt, src) = c;
    }
    validate_action(action, w.braid_order());
    return action;
}

CoherentAction synthesize_coherent(const orbitgeom::OrbitSet& os,
                                   const std::vector<orbitgeom::GeometricParameter>& params) {
    int n = static_cast<int>(params.size());
    if (n != os.size()) throw FixtureError("synthesized coherent action needs trivial parameters only");
    CoherentAction action;
    action.nparams = n;
    action.ngens = os.weyl.rank();
    action.mats.assign(action.ngens, IntMat(n, n));
    for (int s = 1; s <= action.ngens; ++s)
        for (int j = 0; j < n; ++j) {
            int target = os.m_action(s, params[j].orbit);
            if (target == params[j].orbit) {
                action.mats[s - 1].at(j, j) = -1;
            } else {
                action.mats[s - 1].at(j, j) = 1;
                action.mats[s - 1].at(orbitgeom::trivial_parameter(params, target), j) = 1;
            }
        }
    validate_action(action, os.weyl.braid_order());
    return action;
}

CoherentAction coherent_action(const orbitgeom::OrbitSet& os,
                               const std::vector<orbitgeom::GeometricParameter>& params,
                               const std::string& fixtures_dir) {
    using G = orbitgeom::GroupType;
    bool fixture = (os.pair.group == G::G2 && os.pair.k == G::SL2xSL2) ||
                   (os.pair.group == G::SL3 && os.pair.k == G::GL2);
    if (fixture) return load_coherent_table(os.pair, params, fixtures_dir);
    return synthesize_coherent(os, params);
}

KVector coherent_apply(const CoherentAction& action, const WeylWord& w, const KVector& v) {
    KVector cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int s = *it;
        if (s < 1 || s > action.ngens) throw std::invalid_argument("generator out of range");
        KVector next;
        for (const auto& [src, c] : cur.coeffs)
            for (int tgt = 0; tgt < action.nparams; ++tgt)
                next.add(tgt, c * action.entry(s, tgt, src));
        cur = std::move(next);
    }
    return cur;
}

std::set<int> tau_invariant(const CoherentAction& action, int param) {
    std::set<int> tau;
    for (int s = 1; s <= action.ngens; ++s)
        if (action.entry(s, param, param) == -1) tau.insert(s);
    return tau;
}

std::vector<std::vector<int>> hc_cells(const CoherentAction& action) {
    int n = action.nparams;
    // edges src -> tgt whenever P_tgt appears in s . P_src
    std::vector<std::vector<int>> adj(n);
    for (int s = 1; s <= action.ngens; ++s)
        for (int src = 0; src < n; ++src)
            for (int tgt = 0; tgt < n; ++tgt)
                if (action.entry(s, tgt, src) != 0) adj[src].push_back(tgt);

    // Tarjan
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> cells;
    int counter = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int u : adj[v]) {
            if (index[u] < 0) {
                strongconnect(u);
                low[v] = std::min(low[v], low[u]);
            } else if (on_stack[u]) {
                low[v] = std::min(low[v], index[u]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int u;
            do {
                u = stack.back();
                stack.pop_back();
                on_stack[u] = false;
                comp.push_back(u);
            } while (u != v);
            std::sort(comp.begin(), comp.end());
            cells.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) strongconnect(v);
    std::sort(cells.begin(), cells.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return cells;
}

} // namespace g2micro::grothendieck
