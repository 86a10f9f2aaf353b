#pragma once

#include "weights/char_lattice.hpp"

#include <set>
#include <vector>

namespace serre {

/// The combinatorial core: a nontrivial character chi with chi != chi^q,
/// a subset J of Z/2f, and an integer list x_0..x_{2f-1} bounded by the
/// ramification index e.
struct WeightDatum {
    TameCharCtx ctx;
    TameChar chi;
    std::vector<int64_t> c;  // cached digits(chi)
    std::set<int64_t> J;     // subset of Z/2f
    std::vector<int64_t> x;  // length 2f, entries in [0, e]
    int64_t e = 0;

    WeightDatum(TameChar chi_, std::set<int64_t> J_, std::vector<int64_t> x_, int64_t e_);
};

struct AllowableReport {
    std::vector<bool> per_index;
    bool all = true;
};

/// Per-index allowability verdicts: within a block of J or its complement
/// any x_i in [0, e] is fine; at a transition one endpoint is excluded,
/// decided by the first index j >= 1 with c_{i+j} != c_{i+j+f}.
AllowableReport allowable_report(const WeightDatum& d);
bool is_allowable(const WeightDatum& d);

/// The exponents r_i of the underlying rank-one classification data.
/// All r_i lie in [0, e(p^{2f}-1)] exactly when the datum is allowable.
std::vector<int64_t> r_from_jx(const WeightDatum& d);

/// psi = prod_{i in J} eta_i^{c_i} prod_{i not in J} eta_i^{c_{i+f}}
///       prod_i eta_i^{x_i}
TameChar psi_closed_form(const WeightDatum& d);

/// Independent route to the same character through the generic-fibre
/// exponent: psi = chi_0 * eta_0^{s_0} with
/// s_0 = p(r_0 p^{2f-1} + ... + r_{2f-1})/(p^{2f}-1).
/// Requires an allowable datum; throws if s_0 fails to be integral.
TameChar psi_via_breuil(const WeightDatum& d);

/// Rewrites an allowable datum with psi^{q+1} = eps * chi^{q+1} into one
/// with symmetric J (i in J iff i+f in J) and x_i + x_{i+f} = e, without
/// changing psi.  Requires e < p-1.
WeightDatum normalize_to_symmetric(const WeightDatum& d);

/// Intermediate state of the normalization loop, exposed for testing.
struct NormalizationState {
    std::set<int64_t> S;  // { i : i in J, i+f not in J }
    std::set<int64_t> T;  // { i : i not in J, i+f in J }
    std::vector<int64_t> a;  // length 2f, f-periodic, entries in {-1,0,1}
};

NormalizationState compute_normalization_state(const WeightDatum& d);

/// Solves y_i = p a_i - a_{i+1} (indices mod f) over the integers and
/// checks each a_i lies in {-1, 0, 1}.  Throws if the system has no
/// integral solution or a coefficient falls outside that range.
std::vector<int64_t> solve_lattice_coefficients(const std::vector<int64_t>& y, int64_t p);

}  // namespace serre
