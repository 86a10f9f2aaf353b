#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace serre {

/// Exact arithmetic in the group of tame inertial characters of niveau
/// dividing 2f, realized as Z/(p^{2f}-1) with a fixed generator eta_0.
///
/// Every character is eta_0^a for a unique reduced exponent a, and the
/// fundamental characters satisfy eta_i^p = eta_{i-1}.
struct TameCharCtx {
    int64_t p = 0;        // odd prime
    int64_t f = 0;        // residue degree
    int64_t modulus = 0;  // p^{2f} - 1
    int64_t q = 0;        // p^f

    TameCharCtx() = default;
    TameCharCtx(int64_t p_, int64_t f_);

    friend bool operator==(const TameCharCtx&, const TameCharCtx&) = default;
};

struct TameChar {
    TameCharCtx ctx;
    int64_t exp = 0;  // reduced exponent: the character is eta_0^exp

    TameChar() = default;
    TameChar(TameCharCtx c, int64_t e);

    friend bool operator==(const TameChar&, const TameChar&) = default;
    friend auto operator<=>(const TameChar& a, const TameChar& b) {
        return a.exp <=> b.exp;
    }
    bool trivial() const { return exp == 0; }
};

// modular helpers, 128-bit intermediate so p <= 97, f <= 3 never overflows
int64_t mod_reduce(int64_t a, int64_t m);
int64_t mul_mod(int64_t a, int64_t b, int64_t m);
int64_t pow_mod(int64_t base, int64_t e, int64_t m);
bool is_prime(int64_t n);

/// eta_i = eta_0^{p^{(2f-i) mod 2f}}, so that eta_i^p = eta_{i-1} and
/// eta_0 is the generator itself.
TameChar eta(const TameCharCtx& ctx, int64_t i);

/// omega_i = eta_i * eta_{i+f}; its exponent is divisible by q+1.
TameChar omega(const TameCharCtx& ctx, int64_t i);

/// The mod-p cyclotomic character on tame inertia: prod_{i<f} omega_i^e.
TameChar cyclotomic(const TameCharCtx& ctx, int64_t e);

TameChar char_product(const TameChar& a, const TameChar& b);
TameChar char_power(const TameChar& a, int64_t n);

/// chi^{p^k}: multiplies the exponent by p^k.
TameChar frobenius(const TameChar& a, int64_t k);

/// Least n | 2f with frobenius(a, n) == a.
int64_t niveau(const TameChar& a);

/// Base-p digit expansion of a nontrivial character: the unique
/// c_0..c_{2f-1} in [0, p-1], not all zero and not all p-1, with
/// prod_i eta_i^{c_i} == chi.  Throws on the trivial character.
std::vector<int64_t> digits(const TameChar& chi);

}  // namespace serre
