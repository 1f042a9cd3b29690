#include "g2micro/orbitgeom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "g2micro/fixtures.hpp"

namespace g2micro::orbitgeom {

std::string group_name(GroupType t) {
    switch (t) {
        case GroupType::Torus: return "Torus";
        case GroupType::GL2: return "GL2";
        case GroupType::SL2xSL2: return "SL2xSL2";
        case GroupType::SL3: return "SL3";
        case GroupType::G2: return "G2";
    }
    return "?";
}

bool pair_valid(const SymmetricPair& p) {
    using G = GroupType;
    static const std::vector<SymmetricPair> rows = {
        {G::Torus, G::Torus},  {G::GL2, G::Torus}, {G::GL2, G::GL2},
        {G::SL2xSL2, G::GL2},  {G::SL3, G::GL2},   {G::SL3, G::SL3},
        {G::G2, G::SL2xSL2},   {G::G2, G::G2},
    };
    return std::find(rows.begin(), rows.end(), p) != rows.end();
}

std::vector<SymmetricPair> all_pairs() {
    using G = GroupType;
    return {{G::Torus, G::Torus}, {G::GL2, G::Torus}, {G::GL2, G::GL2},
            {G::SL2xSL2, G::GL2}, {G::SL3, G::GL2},   {G::SL3, G::SL3},
            {G::G2, G::SL2xSL2},  {G::G2, G::G2}};
}

std::string pair_name(const SymmetricPair& p) {
    using G = GroupType;
    if (p == SymmetricPair{G::G2, G::SL2xSL2}) return "g2";
    if (p == SymmetricPair{G::SL3, G::GL2}) return "sl3";
    if (p == SymmetricPair{G::SL2xSL2, G::GL2}) return "sl2xsl2";
    if (p == SymmetricPair{G::GL2, G::Torus}) return "gl2";
    if (p == SymmetricPair{G::Torus, G::Torus}) return "torus";
    if (p == SymmetricPair{G::G2, G::G2}) return "g2_full";
    if (p == SymmetricPair{G::SL3, G::SL3}) return "sl3_full";
    if (p == SymmetricPair{G::GL2, G::GL2}) return "gl2_full";
    return "invalid";
}

std::optional<SymmetricPair> pair_from_name(const std::string& name) {
    for (const auto& p : all_pairs())
        if (pair_name(p) == name) return p;
    return std::nullopt;
}

std::string nature_token(RootNature n) {
    switch (n) {
        case RootNature::CompactImaginary: return "ci";
        case RootNature::NoncompactImaginary: return "nci";
        case RootNature::Real: return "real";
        case RootNature::Complex: return "cx";
        case RootNature::None: return "-";
    }
    return "?";
}

RootNature nature_from_token(const std::string& tok) {
    if (tok == "ci") return RootNature::CompactImaginary;
    if (tok == "nci") return RootNature::NoncompactImaginary;
    if (tok == "real") return RootNature::Real;
    if (tok == "cx") return RootNature::Complex;
    if (tok == "-") return RootNature::None;
    throw FixtureError("unknown root nature token: " + tok);
}

namespace {

WeylGroup weyl_for(GroupType g) {
    switch (g) {
        case GroupType::G2: return WeylGroup::g2();
        case GroupType::SL3: return WeylGroup::a2();
        case GroupType::SL2xSL2: return WeylGroup::a1xa1();
        case GroupType::GL2: return WeylGroup::a1();
        case GroupType::Torus: return WeylGroup::trivial();
    }
    return WeylGroup::trivial();
}

int positive_root_count(GroupType g) {
    switch (g) {
        case GroupType::G2: return 6;
        case GroupType::SL3: return 3;
        case GroupType::SL2xSL2: return 2;
        case GroupType::GL2: return 1;
        case GroupType::Torus: return 0;
    }
    return 0;
}

int closed_orbit_dim(const SymmetricPair& p) {
    if (p.group == p.k) return positive_root_count(p.group);
    return positive_root_count(p.k);
}

} // namespace

bool OrbitSet::in_closure(int lower, int upper) const {
    const auto& c = closure[upper];
    return std::binary_search(c.begin(), c.end(), lower);
}

std::vector<int> OrbitSet::p_class(int s, int orbit) const {
    std::vector<int> out;
    int target = m_action(s, orbit);
    for (int i = 0; i < size(); ++i)
        if (m_action(s, i) == target) out.push_back(i);
    return out;
}

int OrbitSet::dim_x() const { return positive_root_count(pair.group); }

namespace {

// m(s) target and the nature/p compatibility checks. For an involution p:
//   s p s == p with l(sp) > l(p)  <=>  s imaginary,
//   s p s == p with l(sp) < l(p)  <=>  s real,
//   s p s != p                    <=>  s complex.
void validate_nature(const OrbitSet& os, const OrbitRecord& rec, int s) {
    const WeylGroup& w = os.weyl;
    int p = w.from_word(rec.p);
    int g = w.generator(s);
    int sps = w.mult(w.mult(g, p), g);
    int sp = w.mult(g, p);
    RootNature n = rec.nature[s - 1];
    bool imaginary = sps == p && w.length(sp) > w.length(p);
    bool real = sps == p && w.length(sp) < w.length(p);
    bool ok = false;
    switch (n) {
        case RootNature::CompactImaginary:
        case RootNature::NoncompactImaginary: ok = imaginary; break;
        case RootNature::Real: ok = real; break;
        case RootNature::Complex: ok = sps != p; break;
        case RootNature::None: ok = false; break;
    }
    if (!ok)
        throw FixtureError("orbit " + std::to_string(rec.id) + ": nature of s" + std::to_string(s) +
                           " inconsistent with p = " + rec.p.str());
}

} // namespace

OrbitSet orbit_table(const SymmetricPair& pair, const std::string& fixtures_dir) {
    if (!pair_valid(pair))
        throw FixtureError("not a symmetric pair from the classification: (" + group_name(pair.group) +
                           ", " + group_name(pair.k) + ")");
    OrbitSet os;
    os.pair = pair;
    os.weyl = weyl_for(pair.group);

    if (pair.group == pair.k) {
        // whole flag variety: a single orbit, both closed and open
        OrbitRecord rec;
        rec.id = 0;
        rec.dim = positive_root_count(pair.group);
        rec.closed = rec.open = true;
        for (int s = 1; s <= os.weyl.rank(); ++s) rec.nature[s - 1] = RootNature::CompactImaginary;
        os.orbits.push_back(rec);
    } else {
        auto rows = read_tsv(fixtures_dir + "/orbits_" + pair_name(pair) + ".tsv");
        for (const auto& row : rows) {
            if (row.size() != 6) throw FixtureError("orbit fixture row needs 6 fields");
            OrbitRecord rec;
            rec.id = static_cast<int>(to_int(row[0], "orbit id"));
            rec.p = WeylWord::parse(row[1]);
            rec.dim = static_cast<int>(to_int(row[2], "orbit dim"));
            rec.nature[0] = nature_from_token(row[3]);
            rec.nature[1] = nature_from_token(row[4]);
            rec.closed = to_int(row[5], "closed flag") != 0;
            if (rec.id != static_cast<int>(os.orbits.size()))
                throw FixtureError("orbit ids must be consecutive from 0");
            os.orbits.push_back(rec);
        }
    }

    const WeylGroup& w = os.weyl;
    const int n = os.size();

    // p must be an involution; natures must match p; only rank-many natures set
    for (auto& rec : os.orbits) {
        int p = w.from_word(rec.p);
        if (w.mult(p, p) != w.identity())
            throw FixtureError("p(S" + std::to_string(rec.id) + ") is not an involution");
        for (int s = 1; s <= 2; ++s) {
            bool in_rank = s <= w.rank();
            if (in_rank != (rec.nature[s - 1] != RootNature::None))
                throw FixtureError("orbit " + std::to_string(rec.id) + ": nature arity mismatch");
            if (in_rank) validate_nature(os, rec, s);
        }
    }

    // m-action: fixed for compact-imaginary/real/complex-descent; otherwise the
    // target is the orbit whose p equals s*p (imaginary) or s*p*s (complex).
    os.m.assign(n, {0, 0});
    for (int i = 0; i < n; ++i) {
        os.m[i] = {i, i};
        for (int s = 1; s <= w.rank(); ++s) {
            const OrbitRecord& rec = os.orbits[i];
            RootNature nat = rec.nature[s - 1];
            int p = w.from_word(rec.p);
            int g = w.generator(s);
            int target_p = -1;
            if (nat == RootNature::NoncompactImaginary) {
                target_p = w.mult(g, p);
            } else if (nat == RootNature::Complex) {
                int sps = w.mult(w.mult(g, p), g);
                if (w.length(sps) > w.length(p)) target_p = sps;
            }
            if (target_p < 0) { os.m[i][s - 1] = i; continue; }
            int found = -1;
            for (int j = 0; j < n; ++j)
                if (j != i && w.from_word(os.orbits[j].p) == target_p &&
                    os.orbits[j].dim == rec.dim + 1) {
                    if (found >= 0) throw FixtureError("ambiguous m-action target");
                    found = j;
                }
            if (found < 0)
                throw FixtureError("m(s" + std::to_string(s) + ") target of orbit " +
                                   std::to_string(i) + " missing from table");
            os.m[i][s - 1] = found;
        }
    }

    // dimension grading: closed orbits carry the pair's base dimension and
    // every proper m-edge raises dimension by one
    int base = closed_orbit_dim(pair);
    for (const auto& rec : os.orbits)
        if (rec.closed && rec.dim != base)
            throw FixtureError("closed orbit dimension must be " + std::to_string(base));
    std::vector<int> depth(n, -1);
    std::vector<int> queue;
    for (const auto& rec : os.orbits)
        if (rec.closed) { depth[rec.id] = rec.dim; queue.push_back(rec.id); }
    for (size_t q = 0; q < queue.size(); ++q) {
        int i = queue[q];
        for (int s = 1; s <= w.rank(); ++s) {
            int j = os.m_action(s, i);
            if (j == i) continue;
            if (depth[j] < 0) { depth[j] = depth[i] + 1; queue.push_back(j); }
            else if (depth[j] != depth[i] + 1)
                throw FixtureError("inconsistent dimension grading");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (depth[i] < 0) throw FixtureError("orbit " + std::to_string(i) + " unreachable from closed orbits");
        if (depth[i] != os.orbits[i].dim)
            throw FixtureError("orbit " + std::to_string(i) + " has dim " + std::to_string(os.orbits[i].dim) +
                               ", recursion gives " + std::to_string(depth[i]));
    }
    for (auto& rec : os.orbits) rec.open = rec.dim == os.dim_x();

    // closures by the P_s recursion: closure(m(s)S') = union of P_s-fibers over
    // closure(S'), computed over every m-parent and checked for agreement
    os.closure.assign(n, {});
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return os.orbits[a].dim < os.orbits[b].dim; });
    for (int i : order) {
        if (os.orbits[i].closed) { os.closure[i] = {i}; continue; }
        std::vector<int> result;
        bool have = false;
        for (int s = 1; s <= w.rank(); ++s)
            for (int parent = 0; parent < n; ++parent) {
                if (parent == i || os.m_action(s, parent) != i) continue;
                std::set<int> acc;
                for (int t : os.closure[parent]) {
                    auto fiber = os.p_class(s, t);
                    acc.insert(fiber.begin(), fiber.end());
                }
                std::vector<int> cl(acc.begin(), acc.end());
                if (!have) { result = cl; have = true; }
                else if (result != cl) throw FixtureError("closure recursion disagrees between m-chains");
            }
        if (!have) throw FixtureError("no m-parent for non-closed orbit " + std::to_string(i));
        os.closure[i] = result;
    }

    // closures are down-sets in the grading
    for (int i = 0; i < n; ++i)
        for (int t : os.closure[i])
            if (os.orbits[t].dim > os.orbits[i].dim ||
                (os.orbits[t].dim == os.orbits[i].dim && t != i))
                throw FixtureError("closure of orbit " + std::to_string(i) + " is not a down-set");

    return os;
}

OrbitPoset bruhat_order(const OrbitSet& os) {
    OrbitPoset poset;
    poset.pair = os.pair;
    poset.orbits = os.orbits;
    for (int upper = 0; upper < os.size(); ++upper)
        for (int lower : os.closure[upper]) {
            if (os.orbits[lower].dim != os.orbits[upper].dim - 1) continue;
            bool solid = false;
            for (int s = 1; s <= os.weyl.rank(); ++s)
                if (os.m_action(s, lower) == upper) {
                    poset.covers.push_back({lower, upper, s, true});
                    solid = true;
                }
            if (!solid) poset.covers.push_back({lower, upper, 0, false});
        }
    std::sort(poset.covers.begin(), poset.covers.end(), [](const CoverEdge& a, const CoverEdge& b) {
        return std::tie(a.lower, a.upper, a.label) < std::tie(b.lower, b.upper, b.label);
    });
    return poset;
}

std::string hasse_dot(const OrbitPoset& poset) {
    std::ostringstream out;
    out << "digraph bruhat_" << pair_name(poset.pair) << " {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& rec : poset.orbits)
        out << "  S" << rec.id << " [label=\"S" << rec.id << " (dim " << rec.dim << ")\"];\n";
    for (const auto& e : poset.covers) {
        out << "  S" << e.lower << " -> S" << e.upper;
        if (e.solid) out << " [label=\"s" << e.label << "\"];\n";
        else out << " [style=dashed, arrowhead=none];\n";
    }
    out << "}\n";
    return out.str();
}

std::string subsystem_name(SubsystemType t) {
    switch (t) {
        case SubsystemType::Torus: return "Torus";
        case SubsystemType::A1: return "A1";
        case SubsystemType::A1xA1: return "A1xA1";
        case SubsystemType::A2: return "A2";
        case SubsystemType::G2: return "G2";
    }
    return "?";
}

SubsystemType integral_subsystem(const rootsys::QVec2& lambda) {
    const auto& rs = rootsys::RootSystem::g2();
    int integral = 0;
    for (const auto& coroot : rs.positive_coroots)
        if (rs.pairing(coroot, lambda).is_integer()) ++integral;
    switch (integral) {
        case 0: return SubsystemType::Torus;
        case 1: return SubsystemType::A1;
        case 2: return SubsystemType::A1xA1;
        case 3: return SubsystemType::A2;
        case 6: return SubsystemType::G2;
        default:
            throw std::logic_error("impossible integral subsystem size " + std::to_string(integral));
    }
}

std::vector<SymmetricPair> k_lambda_options(SubsystemType t) {
    using G = GroupType;
    switch (t) {
        case SubsystemType::Torus: return {{G::Torus, G::Torus}};
        case SubsystemType::A1: return {{G::GL2, G::Torus}, {G::GL2, G::GL2}};
        case SubsystemType::A1xA1: return {{G::SL2xSL2, G::GL2}};
        case SubsystemType::A2: return {{G::SL3, G::GL2}, {G::SL3, G::SL3}};
        case SubsystemType::G2: return {{G::G2, G::SL2xSL2}, {G::G2, G::G2}};
    }
    return {};
}

std::vector<long long> parameter_component_group(const OrbitSet& os, int orbit) {
    if (!(os.pair.group == GroupType::G2 && os.pair.k == GroupType::SL2xSL2)) return {};
    return rootsys::torus_component_group(os.weyl, os.weyl.from_word(os.orbits[orbit].p));
}

std::vector<GeometricParameter> geometric_parameters(const OrbitSet& os) {
    std::vector<GeometricParameter> params;
    for (const auto& rec : os.orbits)
        params.push_back({rec.id, rec.id, "triv", false});
    // one extra parameter per nontrivial component-group character
    std::vector<std::pair<int, int>> extras; // (orbit, count)
    for (const auto& rec : os.orbits) {
        long long chars = 1;
        for (long long d : parameter_component_group(os, rec.id)) chars *= d;
        if (chars > 1) extras.push_back({rec.id, static_cast<int>(chars - 1)});
    }
    for (auto [orbit, count] : extras)
        for (int c = 0; c < count; ++c) {
            int id = static_cast<int>(params.size());
            params.push_back({id, orbit, "L" + std::to_string(id), false});
        }
    // the unique compact-form parameter of the integral G2 case
    if (os.pair.group == GroupType::G2 && os.pair.k == GroupType::SL2xSL2) {
        if (params.size() != 13) throw FixtureError("integral G2 pair must have 13 parameters");
        params.back().compact_form = true;
    }
    return params;
}

int trivial_parameter(const std::vector<GeometricParameter>& params, int orbit) {
    for (const auto& p : params)
        if (p.orbit == orbit && p.local_system == "triv") return p.id;
    throw std::invalid_argument("no trivial parameter on orbit " + std::to_string(orbit));
}

} // namespace g2micro::orbitgeom
