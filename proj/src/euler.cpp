#include "g2micro/euler.hpp"

#include <algorithm>
#include <fstream>

#include "g2micro/fixtures.hpp"

namespace g2micro::euler {

ClosureLeq closure_leq(const orbitgeom::OrbitSet& os) {
    ClosureLeq leq(os.size(), std::vector<bool>(os.size(), false));
    for (int j = 0; j < os.size(); ++j)
        for (int i : os.closure[j]) leq[i][j] = true;
    return leq;
}

void validate_euler(const EulerMatrix& e, const ClosureLeq& leq) {
    for (int i = 0; i < e.n; ++i) {
        if (e.a[i][i] != 1) throw FixtureError("obstruction matrix needs unit diagonal");
        for (int j = 0; j < e.n; ++j)
            if (e.a[i][j] != 0 && !leq[i][j])
                throw FixtureError("obstruction outside the closure order at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
    }
}

EulerMatrix load_euler(const std::string& path, const ClosureLeq& leq, int n) {
    auto rows = read_tsv(path);
    if (static_cast<int>(rows.size()) != n) throw FixtureError("obstruction grid needs " + std::to_string(n) + " rows");
    EulerMatrix e;
    e.n = n;
    e.a.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw FixtureError("obstruction grid row needs " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) e.a[i][j] = to_int(rows[i][j], "obstruction entry");
    }
    validate_euler(e, leq);
    return e;
}

LocalMultMatrix load_chi_loc(const std::string& path, int norbits, int nparams) {
    LocalMultMatrix m;
    m.norbits = norbits;
    m.nparams = nparams;
    m.chi_loc.assign(norbits, std::vector<long long>(nparams, 0));
    for (const auto& row : read_tsv(path)) {
        if (row.size() != 3) throw FixtureError("chi_loc row needs 3 fields");
        int i = static_cast<int>(to_int(row[0], "orbit id"));
        int j = static_cast<int>(to_int(row[1], "param id"));
        if (i < 0 || i >= norbits || j < 0 || j >= nparams)
            throw FixtureError("chi_loc row out of range");
        m.chi_loc[i][j] = to_int(row[2], "chi_loc value");
    }
    return m;
}

void write_chi_loc(const std::string& path, const LocalMultMatrix& m) {
    std::ofstream out(path);
    out << "# orbit_id\tparam_id\tvalue\n";
    for (int i = 0; i < m.norbits; ++i)
        for (int j = 0; j < m.nparams; ++j)
            if (m.chi_loc[i][j] != 0) out << i << "\t" << j << "\t" << m.chi_loc[i][j] << "\n";
}

LocalMultMatrix local_mult_from_paper(const ccsolver::CCMatrix& cc, const EulerMatrix& seed,
                                      const std::vector<int>& dims) {
    if (seed.n != cc.norbits || static_cast<int>(dims.size()) != cc.norbits)
        throw std::invalid_argument("dimension mismatch between cycles and obstruction matrix");
    LocalMultMatrix m;
    m.norbits = cc.norbits;
    m.nparams = cc.nparams;
    m.chi_loc.assign(m.norbits, std::vector<long long>(m.nparams, 0));
    for (int i = 0; i < m.norbits; ++i)
        for (int g = 0; g < m.nparams; ++g) {
            long long v = 0;
            for (int j = 0; j < m.norbits; ++j) {
                long long sign = dims[j] % 2 == 0 ? 1 : -1;
                v += seed.a[i][j] * sign * cc.chi[j][g];
            }
            m.chi_loc[i][g] = v;
        }
    return m;
}

EulerMatrix solve_euler(const LocalMultMatrix& chi_loc, const ccsolver::CCMatrix& cc,
                        const std::vector<int>& dims, const ClosureLeq& leq,
                        const std::vector<int>& trivial_param) {
    int n = cc.norbits;
    if (chi_loc.norbits != n || chi_loc.nparams != cc.nparams)
        throw std::invalid_argument("dimension mismatch between chi_loc and cycles");
    EulerMatrix e;
    e.n = n;
    e.a.assign(n, std::vector<long long>(n, 0));

    // columns ordered by dimension: the cycle of the trivial parameter on the
    // smallest undetermined orbit has all other support already solved
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dims[a] < dims[b]; });

    for (int i = 0; i < n; ++i) {
        for (int j : order) {
            if (!leq[i][j]) continue;
            int g = trivial_param[j];
            long long rest = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j || !leq[i][k]) continue;
                long long sign = dims[k] % 2 == 0 ? 1 : -1;
                rest += e.a[i][k] * sign * cc.chi[k][g];
            }
            long long sign = dims[j] % 2 == 0 ? 1 : -1;
            if (cc.chi[j][g] != 1) throw std::invalid_argument("cycle lacks its pinned unit multiplicity");
            e.a[i][j] = sign * (chi_loc.chi_loc[i][g] - rest);
        }
        // the row must reproduce every column, not just the pivots
        for (int g = 0; g < cc.nparams; ++g) {
            long long v = 0;
            for (int k = 0; k < n; ++k) {
                if (!leq[i][k]) continue;
                long long sign = dims[k] % 2 == 0 ? 1 : -1;
                v += e.a[i][k] * sign * cc.chi[k][g];
            }
            if (v != chi_loc.chi_loc[i][g])
                throw FixtureError("local multiplicities inconsistent with the index formula");
        }
    }
    validate_euler(e, leq);
    return e;
}

std::vector<Obstruction> obstruction_report(const EulerMatrix& e, const ClosureLeq& leq) {
    std::vector<Obstruction> out;
    for (int j = 0; j < e.n; ++j)
        for (int i = 0; i < e.n; ++i) {
            if (i == j || !leq[i][j]) continue;
            if (e.a[i][j] != 1 && e.a[i][j] != 0) out.push_back({j, i, e.a[i][j]});
        }
    std::sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) {
        return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
    });
    return out;
}

} // namespace g2micro::euler
