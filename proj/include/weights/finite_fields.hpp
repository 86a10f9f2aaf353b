#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace serre {

/// F_{p^d} presented as F_p[t]/(modulus_poly).  The modulus is verified
/// irreducible at construction.
class FField {
  public:
    /// modulus_poly lists coefficients low degree first and must be monic
    /// of degree d.
    FField(int64_t p, int64_t d, std::vector<int64_t> modulus_poly);

    /// Bundled default modulus table for p in {3,5,7}, d <= 4.
    static std::shared_ptr<const FField> make_default(int64_t p, int64_t d);

    int64_t p() const { return p_; }
    int64_t d() const { return d_; }
    const std::vector<int64_t>& modulus_poly() const { return mod_; }

    // arithmetic on reduced coefficient vectors of length d
    std::vector<int64_t> add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
    std::vector<int64_t> sub(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
    std::vector<int64_t> mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;

  private:
    int64_t p_, d_;
    std::vector<int64_t> mod_;

    void verify_irreducible() const;
};

struct FFElem {
    std::shared_ptr<const FField> field;
    std::vector<int64_t> coeffs;  // length d, entries reduced mod p

    FFElem() = default;
    FFElem(std::shared_ptr<const FField> f, std::vector<int64_t> c);

    /// Embeds an integer into the prime subfield.
    static FFElem from_int(std::shared_ptr<const FField> f, int64_t v);

    bool is_zero() const;
    friend bool operator==(const FFElem&, const FFElem&) = default;
};

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_pow(const FFElem& a, int64_t n);  // n >= 0
FFElem ff_inv(const FFElem& a);             // throws on zero
FFElem ff_frobenius(const FFElem& a);       // x -> x^p

/// prod_{k<d} x^{p^k} = x^{(p^d-1)/(p-1)}, landing in the prime subfield.
FFElem norm_to_prime(const FFElem& x);

/// lambda = N(c)^{-1}, the unramified-twist parameter of the generic fibre.
FFElem lambda_param(const FFElem& c);

}  // namespace serre
