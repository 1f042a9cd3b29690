#pragma once

#include <string>
#include <vector>

#include "g2micro/ccsolver.hpp"

namespace g2micro::euler {

// Local Euler obstructions in the printed grid layout: a[i][j] is the
// obstruction of the closure of orbit j along orbit i, nonzero only when
// orbit i lies in that closure, with unit diagonal.
struct EulerMatrix {
    int n = 0;
    std::vector<std::vector<long long>> a;

    bool operator==(const EulerMatrix&) const = default;
};

// closure_leq[i][j]: orbit i lies in the closure of orbit j.
using ClosureLeq = std::vector<std::vector<bool>>;

ClosureLeq closure_leq(const orbitgeom::OrbitSet& os);
void validate_euler(const EulerMatrix& e, const ClosureLeq& leq);

// Grid fixture: n rows of n tab-separated integers.
EulerMatrix load_euler(const std::string& path, const ClosureLeq& leq, int n);

// Local multiplicities chi_loc[orbit][param].
struct LocalMultMatrix {
    int norbits = 0;
    int nparams = 0;
    std::vector<std::vector<long long>> chi_loc;

    bool operator==(const LocalMultMatrix&) const = default;
};

// chi_loc_<case>.tsv rows: orbit_id, param_id, value.
LocalMultMatrix load_chi_loc(const std::string& path, int norbits, int nparams);
void write_chi_loc(const std::string& path, const LocalMultMatrix& m);

// Kashiwara's index formula evaluated from a known obstruction matrix:
// chi_loc[i][g] = sum_j a[i][j] (-1)^{dim_j} chi[j][g].
LocalMultMatrix local_mult_from_paper(const ccsolver::CCMatrix& cc, const EulerMatrix& seed,
                                      const std::vector<int>& dims);

// Inverts the formula by recursion on dimension; trivial_param[j] is the
// parameter whose cycle is pinned to multiplicity one on orbit j.
EulerMatrix solve_euler(const LocalMultMatrix& chi_loc, const ccsolver::CCMatrix& cc,
                        const std::vector<int>& dims, const ClosureLeq& leq,
                        const std::vector<int>& trivial_param);

struct Obstruction {
    int upper = 0;   // orbit whose closure is probed
    int lower = 0;   // orbit along which it deviates
    long long value = 0;
};

// Pairs with obstruction different from 0 and 1 ("no obstruction detected"
// elsewhere; this cannot certify smoothness).
std::vector<Obstruction> obstruction_report(const EulerMatrix& e, const ClosureLeq& leq);

} // namespace g2micro::euler
