#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace serre {

struct SuiteReport {
    std::string name;
    int64_t checked = 0;
    int64_t failures = 0;
    std::vector<std::string> messages;  // capped per suite

    bool pass() const { return failures == 0; }
    void note_failure(const std::string& msg);
    void merge(const SuiteReport& other);
};

/// Exhaustive comparison of the closed-form character against the
/// classification-data route, over all nontrivial chi with chi != chi^q,
/// all J, all allowable x in [0,e]^{2f}.  Also checks that allowability
/// coincides with all derived exponents landing in [0, e(p^{2f}-1)].
SuiteReport verify_lemma_psi(int64_t p, int64_t f, int64_t e, int threads = 1);

/// For every valid chi, the reducible enumeration at the given e has
/// exactly p^f - 1 members, each of exponent divisible by q+1.
SuiteReport verify_prop_niveau_one(int64_t p, int64_t f, int64_t e);

/// For every valid chi, the irreducible enumeration has exactly p^f + 1
/// members, each with psi^{q+1} = eps * chi^{q+1}.
SuiteReport verify_lemma_irred_full(int64_t p, int64_t f, int64_t e);

/// Every allowable datum whose character satisfies the determinant
/// identity normalizes to a symmetric allowable datum with
/// x_i + x_{i+f} = e and the same character; per chi, the set of
/// characters reached by arbitrary such data equals the set reached by
/// symmetric ones.  Requires e < p-1.
SuiteReport verify_prop_normalize(int64_t p, int64_t f, int64_t e, int threads = 1);

/// Full enumeration of valid rank-one classification data at p = 3,
/// d in {1,2}, f | d, eKL in {2,8}, eprime in {8,16}: the fibre exponent
/// s_0 is integral and (p^f-1)(k_0+s_0) == 0 mod eKL.
SuiteReport verify_s0_integrality();

/// Random semisimple place data at p in {3,5}, f in {1,2}, e in {1,2,3,4}:
/// the local weight set is closed under a -> q*a, and every included
/// type-I weight passes the determinant identity.
SuiteReport verify_frobenius_symmetry(int64_t count, uint64_t seed);

}  // namespace serre
