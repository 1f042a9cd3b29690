#include "g2micro/ccsolver.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace g2micro::ccsolver {

using conormal::NilpOrbit;
using conormal::NilpotentPoset;

IntMat CCMatrix::as_matrix() const {
    IntMat m(norbits, nparams);
    for (int i = 0; i < norbits; ++i)
        for (int j = 0; j < nparams; ++j) m.at(i, j) = chi[i][j];
    return m;
}

std::string Unknown::name() const {
    if (kind == Kind::Chi)
        return "chi(S" + std::to_string(a) + ",P" + std::to_string(b) + ")";
    return "n" + std::to_string(s) + "(S" + std::to_string(a) + ",S" + std::to_string(b) + ")";
}

std::optional<int> ConstraintSystem::find_unknown(const Unknown& u) const {
    for (size_t i = 0; i < unknowns.size(); ++i)
        if (unknowns[i] == u) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

// the two five-dimensional orbits share their saturation class
int saturation(NilpOrbit o) {
    if (o == NilpOrbit::O52) return static_cast<int>(NilpOrbit::O51);
    return static_cast<int>(o);
}

void add_term(Equation& eq, long long c, int v1, int v2) {
    if (c == 0) return;
    if (v1 > v2) std::swap(v1, v2);
    for (auto& t : eq.terms)
        if (t.v1 == v1 && t.v2 == v2) {
            t.c += c;
            return;
        }
    eq.terms.push_back({c, v1, v2});
}

void tidy(Equation& eq) {
    eq.terms.erase(std::remove_if(eq.terms.begin(), eq.terms.end(),
                                  [](const Term& t) { return t.c == 0; }),
                   eq.terms.end());
}

} // namespace

ConstraintSystem assemble(const orbitgeom::OrbitSet& os,
                          const grothendieck::CoherentAction& action,
                          const std::vector<orbitgeom::GeometricParameter>& params,
                          const std::map<int, NilpOrbit>& images,
                          const NilpotentPoset& poset,
                          const std::vector<std::vector<int>>& cells,
                          const std::map<int, NilpOrbit>& cell_av) {
    ConstraintSystem sys;
    sys.norbits = os.size();
    sys.nparams = static_cast<int>(params.size());
    sys.ngens = os.weyl.rank();

    auto image_of = [&](int orbit) {
        auto it = images.find(orbit);
        if (it == images.end()) throw std::invalid_argument("missing moment image");
        return it->second;
    };
    auto is_vertical = [&](int orbit, int s) { return conormal::vertical(action, params, orbit, s); };

    std::map<int, int> cell_of;
    for (size_t c = 0; c < cells.size(); ++c)
        for (int p : cells[c]) cell_of[p] = static_cast<int>(c);

    // chi entries: fixed 1 on the parameter's own orbit, 0 outside the masks,
    // an unknown elsewhere
    sys.chi_entry.assign(sys.norbits, std::vector<AffEntry>(sys.nparams));
    for (int xi = 0; xi < sys.nparams; ++xi) {
        int home = params[xi].orbit;
        auto tau = grothendieck::tau_invariant(action, xi);
        std::optional<NilpOrbit> av;
        if (auto it = cell_av.find(cell_of.at(xi)); it != cell_av.end()) av = it->second;
        for (int s_orbit = 0; s_orbit < sys.norbits; ++s_orbit) {
            if (s_orbit == home) {
                // pinned unit multiplicity on the parameter's own orbit
                sys.chi_entry[s_orbit][xi] = {1, -1};
                continue;
            }
            if (!os.in_closure(s_orbit, home)) continue; // support mask
            bool masked = false;
            for (int s : tau)
                if (!is_vertical(s_orbit, s)) masked = true; // tau/vertical mask
            if (av && !masked) {
                NilpOrbit img = image_of(s_orbit);
                if (!poset.contained(img, *av)) masked = true; // containment mask
                if (poset.special[static_cast<int>(img)] && saturation(img) != saturation(*av))
                    masked = true; // special-saturation mask
            }
            if (masked) continue;
            int var = static_cast<int>(sys.unknowns.size());
            sys.unknowns.push_back({Unknown::Kind::Chi, 0, s_orbit, xi});
            sys.chi_entry[s_orbit][xi] = {0, var};
        }
    }

    // the unknown the lattice-complement check decides: the closed orbit and
    // the trivial parameter of a non-closed orbit sharing its moment image
    for (size_t u = 0; u < sys.unknowns.size(); ++u) {
        const Unknown& un = sys.unknowns[u];
        if (un.kind != Unknown::Kind::Chi) continue;
        if (!os.orbits[un.a].closed) continue;
        if (params[un.b].local_system != "triv") continue;
        if (image_of(un.a) != image_of(params[un.b].orbit)) continue;
        if (sys.complement_var) throw std::logic_error("ambiguous complement unknown");
        sys.complement_var = static_cast<int>(u);
    }

    // W-action entries: -1 on vertical diagonals, +1 plus graded unknowns on
    // horizontal rows
    sys.a_entry.assign(sys.ngens,
                       std::vector<std::vector<AffEntry>>(sys.norbits, std::vector<AffEntry>(sys.norbits)));
    for (int s = 1; s <= sys.ngens; ++s)
        for (int src = 0; src < sys.norbits; ++src) {
            if (is_vertical(src, s)) {
                sys.a_entry[s - 1][src][src] = {-1, -1};
                continue;
            }
            sys.a_entry[s - 1][src][src] = {1, -1};
            std::set<int> reach;
            for (int t : os.p_class(s, src))
                for (int c : os.closure[t]) reach.insert(c);
            for (int tgt : reach) {
                if (tgt == src || !is_vertical(tgt, s)) continue;
                if (!poset.contained(image_of(tgt), image_of(src))) continue;
                int var = static_cast<int>(sys.unknowns.size());
                sys.unknowns.push_back({Unknown::Kind::N, s, src, tgt});
                sys.a_entry[s - 1][tgt][src] = {0, var};
            }
        }

    // CC(s.P_xi) = s.CC(P_xi), one equation per (generator, parameter, orbit)
    for (int s = 1; s <= sys.ngens; ++s)
        for (int xi = 0; xi < sys.nparams; ++xi)
            for (int t = 0; t < sys.norbits; ++t) {
                Equation eq;
                eq.label = "s" + std::to_string(s) + ",P" + std::to_string(xi) + ",[T_S" +
                           std::to_string(t) + "]";
                for (int eta = 0; eta < sys.nparams; ++eta) {
                    long long k = action.entry(s, eta, xi);
                    if (k == 0) continue;
                    const AffEntry& e = sys.chi_entry[t][eta];
                    eq.c0 += k * e.c;
                    if (e.var >= 0) add_term(eq, k, e.var, -1);
                }
                for (int src = 0; src < sys.norbits; ++src) {
                    const AffEntry& a = sys.a_entry[s - 1][t][src];
                    const AffEntry& x = sys.chi_entry[src][xi];
                    if (a.var < 0 && a.c == 0) continue;
                    if (x.var < 0 && x.c == 0) continue;
                    eq.c0 -= a.c * x.c;
                    if (x.var >= 0) add_term(eq, -a.c, x.var, -1);
                    if (a.var >= 0) add_term(eq, -x.c, a.var, -1);
                    if (a.var >= 0 && x.var >= 0) add_term(eq, -1, a.var, x.var);
                }
                tidy(eq);
                if (eq.c0 != 0 && eq.terms.empty())
                    throw SolveError("mask inconsistency at " + eq.label);
                if (!eq.terms.empty() || eq.c0 != 0) sys.equations.push_back(std::move(eq));
            }
    return sys;
}

namespace {

struct SearchState {
    std::vector<long long> vals;
    std::vector<bool> set;
};

// Propagates to a fixed point. Returns false on contradiction.
bool propagate(const ConstraintSystem& sys, SearchState& st, long long bound) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& eq : sys.equations) {
            long long known = eq.c0;
            int pending_var = -1;
            long long pending_coeff = 0;
            bool hard = false;
            for (const auto& t : eq.terms) {
                bool s1 = t.v1 < 0 || st.set[t.v1];
                bool s2 = t.v2 < 0 || st.set[t.v2];
                long long f1 = t.v1 < 0 ? 1 : (s1 ? st.vals[t.v1] : 0);
                long long f2 = t.v2 < 0 ? 1 : (s2 ? st.vals[t.v2] : 0);
                if (s1 && s2) {
                    known += t.c * f1 * f2;
                } else if (s1 || s2) {
                    int v = s1 ? t.v2 : t.v1;
                    long long coeff = t.c * (s1 ? f1 : f2);
                    if (coeff == 0) continue;
                    if (pending_var >= 0 && pending_var != v) { hard = true; break; }
                    pending_var = v;
                    pending_coeff += coeff;
                } else {
                    hard = true;
                    break;
                }
            }
            if (hard) continue;
            if (pending_var < 0 || pending_coeff == 0) {
                // no unknown left (or it dropped out): the equation is decided
                if (known != 0) return false;
                continue;
            }
            if (known % pending_coeff != 0) return false;
            long long x = -known / pending_coeff;
            if (x < 0 || x > bound) return false;
            st.vals[pending_var] = x;
            st.set[pending_var] = true;
            changed = true;
        }
    }
    return true;
}

bool all_satisfied(const ConstraintSystem& sys, const SearchState& st) {
    for (const auto& eq : sys.equations) {
        long long v = eq.c0;
        for (const auto& t : eq.terms) {
            long long f1 = t.v1 < 0 ? 1 : st.vals[t.v1];
            long long f2 = t.v2 < 0 ? 1 : st.vals[t.v2];
            v += t.c * f1 * f2;
        }
        if (v != 0) return false;
    }
    return true;
}

void enumerate(const ConstraintSystem& sys, SearchState st, long long bound,
               std::vector<std::vector<long long>>& out, size_t cap) {
    if (out.size() >= cap) return;
    if (!propagate(sys, st, bound)) return;
    int branch = -1;
    for (size_t i = 0; i < st.set.size(); ++i)
        if (!st.set[i]) { branch = static_cast<int>(i); break; }
    if (branch < 0) {
        if (all_satisfied(sys, st)) out.push_back(st.vals);
        return;
    }
    for (long long x = 0; x <= bound; ++x) {
        SearchState next = st;
        next.vals[branch] = x;
        next.set[branch] = true;
        enumerate(sys, std::move(next), bound, out, cap);
    }
}

} // namespace

SolveResult solve(const ConstraintSystem& sys, int bound) {
    SearchState st;
    st.vals.assign(sys.unknowns.size(), 0);
    st.set.assign(sys.unknowns.size(), false);
    std::vector<std::vector<long long>> solutions;
    enumerate(sys, std::move(st), bound, solutions, 64);

    SolveResult result;
    result.equivariance_solutions = static_cast<int>(solutions.size());
    if (solutions.empty())
        throw SolveError("no solution within bound " + std::to_string(bound));

    if (solutions.size() > 1) {
        if (!sys.complement_var)
            throw SolveError("multiple solutions and no complement unknown to decide them");
        int cv = *sys.complement_var;
        std::vector<std::vector<long long>> kept;
        for (const auto& sol : solutions)
            if (complement_check(sol[cv])) kept.push_back(sol);
        result.notes.push_back("equivariance left " + std::to_string(solutions.size()) +
                               " candidates; lattice-complement check on " +
                               sys.unknowns[cv].name() + " kept " + std::to_string(kept.size()));
        solutions = std::move(kept);
    } else {
        result.notes.push_back("equivariance equations determined every unknown");
    }
    if (solutions.size() != 1)
        throw SolveError("solution not unique within bound " + std::to_string(bound) + " (" +
                         std::to_string(solutions.size()) + " candidates)");

    const auto& sol = solutions.front();
    auto value = [&](const AffEntry& e) { return e.c + (e.var >= 0 ? sol[e.var] : 0); };

    result.cc.norbits = sys.norbits;
    result.cc.nparams = sys.nparams;
    result.cc.chi.assign(sys.norbits, std::vector<long long>(sys.nparams, 0));
    for (int i = 0; i < sys.norbits; ++i)
        for (int j = 0; j < sys.nparams; ++j) result.cc.chi[i][j] = value(sys.chi_entry[i][j]);

    result.wact.norbits = sys.norbits;
    result.wact.ngens = sys.ngens;
    result.wact.mats.assign(sys.ngens, IntMat(sys.norbits, sys.norbits));
    for (int s = 0; s < sys.ngens; ++s)
        for (int t = 0; t < sys.norbits; ++t)
            for (int src = 0; src < sys.norbits; ++src)
                result.wact.mats[s].at(t, src) = value(sys.a_entry[s][t][src]);
    return result;
}

namespace {

// component i of an affine expression c + cn n + cm m
struct Aff {
    long long c = 0, n = 0, m = 0;
};

using AffVec = std::array<Aff, 3>;

AffVec const_vec(std::array<long long, 3> v) {
    return {Aff{v[0], 0, 0}, Aff{v[1], 0, 0}, Aff{v[2], 0, 0}};
}

AffVec add_scaled(AffVec a, std::array<long long, 3> v, long long cn, long long cm) {
    for (int i = 0; i < 3; ++i) {
        a[i].n += cn * v[i];
        a[i].m += cm * v[i];
    }
    return a;
}

std::array<long long, 3> mat_apply(const std::array<std::array<long long, 3>, 3>& m,
                                   std::array<long long, 3> v) {
    std::array<long long, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

} // namespace

bool complement_check(long long chi) {
    // sigma action on (q2, q4, q5)
    std::array<std::array<long long, 3>, 3> s1 = {{{1, 0, 0}, {1, -1, 2 - chi}, {0, 0, 1}}};
    std::array<std::array<long long, 3>, 3> s2 = {{{-1, 1 + chi, 0}, {0, 1, 0}, {0, 1, -1}}};
    std::array<long long, 3> v = {chi - 2, 0, 1};
    assert(mat_apply(s1, v) == v);
    {
        auto neg = mat_apply(s2, v);
        assert((std::array<long long, 3>{-neg[0], -neg[1], -neg[2]} == v));
    }
    std::array<long long, 3> u1 = chi == 2 ? std::array<long long, 3>{1, 0, 0}
                                           : std::array<long long, 3>{1, 0, 1};
    std::array<long long, 3> u2 = {0, 1, 0};

    // candidate complements <u1 + n v, u2 + m v>; stability of the span under
    // both reflections gives conditions affine in (n, m)
    std::vector<std::array<long long, 3>> eqs; // a n + b m = c
    auto add_membership = [&](const std::array<std::array<long long, 3>, 3>& sig, long long eps,
                              std::array<long long, 3> u, bool uses_n) {
        // image of u + k v where k is n or m; sigma v = eps v
        AffVec x = const_vec(mat_apply(sig, u));
        x = add_scaled(x, v, uses_n ? eps : 0, uses_n ? 0 : eps);
        AffVec w1 = add_scaled(const_vec(u1), v, 1, 0);
        AffVec w2 = add_scaled(const_vec(u2), v, 0, 1);
        // r = x - beta w2 with beta = x[1] (constant: v has no q4 component)
        assert(x[1].n == 0 && x[1].m == 0);
        long long beta = x[1].c;
        AffVec r;
        for (int i = 0; i < 3; ++i) {
            r[i].c = x[i].c - beta * w2[i].c;
            r[i].n = x[i].n - beta * w2[i].n;
            r[i].m = x[i].m - beta * w2[i].m;
        }
        // cross(r, w1) = 0; v-parallel parts cancel, so each component is affine
        const int pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
        for (auto [i, j] : pairs) {
            long long c = r[i].c * w1[j].c - r[j].c * w1[i].c;
            long long cn = r[i].c * w1[j].n + r[i].n * w1[j].c - r[j].c * w1[i].n - r[j].n * w1[i].c;
            long long cm = r[i].m * w1[j].c - r[j].m * w1[i].c;
            long long cnn = r[i].n * w1[j].n - r[j].n * w1[i].n;
            long long cnm = r[i].m * w1[j].n - r[j].m * w1[i].n;
            if (cnn != 0 || cnm != 0) throw std::logic_error("complement conditions not affine");
            if (cn == 0 && cm == 0 && c == 0) continue;
            eqs.push_back({cn, cm, -c});
        }
    };
    add_membership(s1, 1, u1, true);
    add_membership(s1, 1, u2, false);
    add_membership(s2, -1, u1, true);
    add_membership(s2, -1, u2, false);

    IntMat a(static_cast<int>(eqs.size()), 2);
    std::vector<long long> b(eqs.size());
    for (size_t i = 0; i < eqs.size(); ++i) {
        a.at(static_cast<int>(i), 0) = eqs[i][0];
        a.at(static_cast<int>(i), 1) = eqs[i][1];
        b[i] = eqs[i][2];
    }
    std::vector<std::vector<long long>> kernel;
    auto sol = solve_diophantine(a, b, &kernel);
    if (!sol) return false;

    auto member = [&](std::array<long long, 3> x, std::array<long long, 3> w1,
                      std::array<long long, 3> w2) {
        IntMat span(3, 2);
        for (int i = 0; i < 3; ++i) {
            span.at(i, 0) = w1[i];
            span.at(i, 1) = w2[i];
        }
        return solve_diophantine(span, {x[0], x[1], x[2]}).has_value();
    };
    auto stable_at = [&](long long n, long long m) {
        std::array<long long, 3> w1{u1[0] + n * v[0], u1[1] + n * v[1], u1[2] + n * v[2]};
        std::array<long long, 3> w2{u2[0] + m * v[0], u2[1] + m * v[1], u2[2] + m * v[2]};
        for (auto w : {w1, w2}) {
            if (!member(mat_apply(s1, w), w1, w2)) return false;
            if (!member(mat_apply(s2, w), w1, w2)) return false;
        }
        return true;
    };

    if (kernel.empty()) return stable_at((*sol)[0], (*sol)[1]);
    // underdetermined affine system: scan a window of the solution lattice
    long long hi1 = kernel.size() > 1 ? 8 : 0;
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -hi1; t1 <= hi1; ++t1) {
            long long n = (*sol)[0] + t0 * kernel[0][0];
            long long m = (*sol)[1] + t0 * kernel[0][1];
            if (kernel.size() > 1) {
                n += t1 * kernel[1][0];
                m += t1 * kernel[1][1];
            }
            if (stable_at(n, m)) return true;
        }
    return false;
}

CCMatrix cc_nonintegral(const orbitgeom::OrbitSet& os,
                        const std::vector<orbitgeom::GeometricParameter>& params) {
    CCMatrix cc;
    cc.norbits = os.size();
    cc.nparams = static_cast<int>(params.size());
    cc.chi.assign(cc.norbits, std::vector<long long>(cc.nparams, 0));
    for (int j = 0; j < cc.nparams; ++j) cc.chi[params[j].orbit][j] = 1;
    return cc;
}

WActionOnL wact_nonintegral(const orbitgeom::OrbitSet& os,
                            const grothendieck::CoherentAction& action,
                            const std::vector<orbitgeom::GeometricParameter>& params) {
    WActionOnL w;
    w.norbits = os.size();
    w.ngens = action.ngens;
    w.mats.assign(w.ngens, IntMat(w.norbits, w.norbits));
    for (int s = 1; s <= w.ngens; ++s)
        for (int t = 0; t < w.norbits; ++t)
            for (int src = 0; src < w.norbits; ++src)
                w.mats[s - 1].at(t, src) = action.entry(s, orbitgeom::trivial_parameter(params, t),
                                                        orbitgeom::trivial_parameter(params, src));
    return w;
}

bool verify_equivariance(const CCMatrix& cc, const grothendieck::CoherentAction& action,
                         const WActionOnL& wact) {
    IntMat c = cc.as_matrix();
    for (int s = 0; s < wact.ngens; ++s)
        if (!(c * action.mats[s] == wact.mats[s] * c)) return false;
    return true;
}

conormal::LVector wact_apply(const WActionOnL& wact, int s, const conormal::LVector& v) {
    if (s < 1 || s > wact.ngens) throw std::invalid_argument("generator out of range");
    conormal::LVector out;
    for (const auto& [src, c] : v.coeffs)
        for (int tgt = 0; tgt < wact.norbits; ++tgt) out.add(tgt, c * wact.entry(s, tgt, src));
    return out;
}

conormal::LVector cc_column(const CCMatrix& cc, int param) {
    conormal::LVector out;
    for (int orbit = 0; orbit < cc.norbits; ++orbit) out.add(orbit, cc.chi[orbit][param]);
    return out;
}

} // namespace g2micro::ccsolver
