#pragma once

#include "weights/char_lattice.hpp"
#include "weights/finite_fields.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace serre {

/// Field/ramification parameters of a tame descent situation K/L:
/// k has degree d over F_p, the intermediate residue field l has degree
/// f | d, and eKL | eprime are the ramification indices of K/L and K.
struct TameSetup {
    int64_t p = 0;
    int64_t d = 0;
    int64_t f = 0;
    int64_t eKL = 0;
    int64_t eprime = 0;

    TameSetup() = default;
    TameSetup(int64_t p_, int64_t d_, int64_t f_, int64_t eKL_, int64_t eprime_);

    friend bool operator==(const TameSetup&, const TameSetup&) = default;
};

/// Classification data of a rank-one Breuil module with tame descent
/// data: filtration exponents r_i, descent-data exponents k_i, and the
/// phi_1 constant c in F_{p^f}.
struct Rank1BreuilDD {
    TameSetup setup;
    std::vector<int64_t> r;  // length d, 0 <= r_i <= eprime
    std::vector<int64_t> k;  // length d, 0 <= k_i < eKL
    FFElem c;                // nonzero, in F_{p^f}
};

struct ViolationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the ranges, the congruences k_i = p(k_{i-1} + r_{i-1}) mod eKL,
/// f-periodicity of r and k, the weighted-sum congruence
/// p^{f-1} r_0 + ... + r_{f-1} = 0 mod p^f-1, and c != 0.
ViolationReport validate_rank1(const Rank1BreuilDD& m);

/// The inertial character and unramified parameter of the generic fibre.
/// For even f the character lives in TameCharCtx(p, f/2) with exponent n;
/// for odd f it lives in TameCharCtx(p, f) as a niveau-f character with
/// exponent n*(p^f+1), where n = (k_0 + s_0)(p^f - 1)/eKL is the exponent
/// of the niveau-f fundamental character.
struct GenericFibre {
    TameChar inertial;
    FFElem lambda;  // nonzero prime-field element
    int64_t s0 = 0;
};

/// Requires validate_rank1(m).ok() and (p^f - 1) | eKL.
GenericFibre generic_fibre(const Rank1BreuilDD& m);

enum class Rank2Variant { RED, IRR };

/// The data of a rank-two Breuil module built from a pair of rank-one
/// pieces with exponents r, r' = e' - r and constants gamma, gamma',
/// subject to one of the two shape conditions.
struct Rank2PairData {
    TameCharCtx ctx;
    TameChar chi;  // nontrivial, chi != chi^q
    int64_t e = 0;  // absolute ramification index; e' = e(p^{2f}-1)
    std::set<int64_t> J;
    std::vector<int64_t> r, rprime;      // length 2f
    std::vector<FFElem> gamma, gammaprime;  // length 2f, in k_E = F_{p^{2f}}
    Rank2Variant variant = Rank2Variant::RED;
};

/// RED: i in J iff i+f not in J; r and gamma f-periodic (and primed).
/// IRR: i in J iff i+f in J; r_i = r'_{i+f}, gamma_i = gamma'_{i+f}.
/// Both: r'_i = e' - r_i and the chi-sequence relation
/// chi_{i+1} = chi_i * eta_i^{r_i} for the sequence induced by J.
ViolationReport validate_rank2_pair(const Rank2PairData& n);

}  // namespace serre
