#include "weights/finite_fields.hpp"

#include "weights/char_lattice.hpp"

#include <algorithm>
#include <mutex>

namespace serre {

namespace {

using Poly = std::vector<int64_t>;  // low degree first, over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, int64_t p) {
    trim(a);
    while (a.size() >= m.size()) {
        int64_t lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_reduce(a[shift + i] - lead * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, int64_t e, const Poly& m, int64_t p) {
    Poly r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        int64_t inv = pow_mod(b.back(), p - 2, p);
        Poly bm = b;
        for (auto& c : bm) c = mod_reduce(c * inv, p);
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

FField::FField(int64_t p, int64_t d, std::vector<int64_t> modulus_poly)
    : p_(p), d_(d), mod_(std::move(modulus_poly)) {
    if (!is_prime(p_)) throw std::invalid_argument("FField: p must be prime");
    if (d_ < 1) throw std::invalid_argument("FField: degree must be positive");
    if (static_cast<int64_t>(mod_.size()) != d_ + 1 || mod_.back() != 1)
        throw std::invalid_argument("FField: modulus must be monic of degree d");
    for (auto& c : mod_) c = mod_reduce(c, p_);
    verify_irreducible();
}

void FField::verify_irreducible() const {
    // f irreducible over F_p iff X^{p^d} == X mod f and
    // gcd(X^{p^k} - X, f) is trivial for 0 < k < d
    int64_t pk = 1;
    for (int64_t k = 1; k <= d_; ++k) {
        pk *= p_;
        Poly xpk = poly_powmod({0, 1}, pk, mod_, p_);
        Poly diff = xpk;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_reduce(diff[1] - 1, p_);
        diff = poly_mod(std::move(diff), mod_, p_);
        if (k < d_) {
            Poly g = poly_gcd(mod_, diff, p_);
            if (g.size() > 1)
                throw std::invalid_argument("FField: modulus polynomial is reducible");
        } else if (!diff.empty()) {
            throw std::invalid_argument("FField: modulus polynomial is reducible");
        }
    }
}

std::shared_ptr<const FField> FField::make_default(int64_t p, int64_t d) {
    struct Entry {
        int64_t p, d;
        std::vector<int64_t> poly;
    };
    static const std::vector<Entry> table = {
        {3, 1, {0, 1}},          {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},
        {5, 1, {0, 1}},          {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},    {5, 4, {2, 0, 0, 0, 1}},
        {7, 1, {0, 1}},          {7, 2, {1, 0, 1}},
        {7, 3, {2, 0, 0, 1}},    {7, 4, {1, 1, 0, 0, 1}},
    };
    // one shared instance per (p, d) so elements of the same default field
    // compare equal through the field pointer
    static std::vector<std::pair<std::pair<int64_t, int64_t>, std::shared_ptr<const FField>>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (const auto& [key, field] : cache)
        if (key.first == p && key.second == d) return field;
    for (const auto& e : table)
        if (e.p == p && e.d == d) {
            auto field = std::make_shared<const FField>(p, d, e.poly);
            cache.push_back({{p, d}, field});
            return field;
        }
    throw std::invalid_argument("FField::make_default: no bundled modulus for these (p, d)");
}

std::vector<int64_t> FField::add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
    std::vector<int64_t> r(d_, 0);
    for (int64_t i = 0; i < d_; ++i) r[i] = mod_reduce(a[i] + b[i], p_);
    return r;
}

std::vector<int64_t> FField::sub(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
    std::vector<int64_t> r(d_, 0);
    for (int64_t i = 0; i < d_; ++i) r[i] = mod_reduce(a[i] - b[i], p_);
    return r;
}

std::vector<int64_t> FField::mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
    Poly r = poly_mod(poly_mul(a, b, p_), mod_, p_);
    r.resize(d_, 0);
    return r;
}

FFElem::FFElem(std::shared_ptr<const FField> f, std::vector<int64_t> c)
    : field(std::move(f)), coeffs(std::move(c)) {
    if (!field) throw std::invalid_argument("FFElem: null field");
    coeffs.resize(field->d(), 0);
    for (auto& x : coeffs) x = mod_reduce(x, field->p());
}

FFElem FFElem::from_int(std::shared_ptr<const FField> f, int64_t v) {
    std::vector<int64_t> c(f->d(), 0);
    c[0] = v;
    return FFElem(std::move(f), std::move(c));
}

bool FFElem::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int64_t c) { return c == 0; });
}

static const FField& same_field(const FFElem& a, const FFElem& b) {
    if (a.field != b.field &&
        !(a.field->p() == b.field->p() && a.field->modulus_poly() == b.field->modulus_poly()))
        throw std::invalid_argument("FFElem: field mismatch");
    return *a.field;
}

FFElem ff_add(const FFElem& a, const FFElem& b) {
    return FFElem(a.field, same_field(a, b).add(a.coeffs, b.coeffs));
}

FFElem ff_sub(const FFElem& a, const FFElem& b) {
    return FFElem(a.field, same_field(a, b).sub(a.coeffs, b.coeffs));
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
    return FFElem(a.field, same_field(a, b).mul(a.coeffs, b.coeffs));
}

FFElem ff_pow(const FFElem& a, int64_t n) {
    if (n < 0) throw std::invalid_argument("ff_pow: negative exponent");
    FFElem r = FFElem::from_int(a.field, 1);
    FFElem base = a;
    while (n > 0) {
        if (n & 1) r = ff_mul(r, base);
        base = ff_mul(base, base);
        n >>= 1;
    }
    return r;
}

FFElem ff_inv(const FFElem& a) {
    if (a.is_zero()) throw std::domain_error("ff_inv: inversion of zero");
    int64_t order = 1;
    for (int64_t i = 0; i < a.field->d(); ++i) order *= a.field->p();
    return ff_pow(a, order - 2);
}

FFElem ff_frobenius(const FFElem& a) { return ff_pow(a, a.field->p()); }

FFElem norm_to_prime(const FFElem& x) {
    FFElem r = FFElem::from_int(x.field, 1);
    FFElem y = x;
    for (int64_t k = 0; k < x.field->d(); ++k) {
        r = ff_mul(r, y);
        y = ff_frobenius(y);
    }
    for (int64_t i = 1; i < x.field->d(); ++i)
        if (r.coeffs[i] != 0) throw std::logic_error("norm_to_prime: result not in prime field");
    return r;
}

FFElem lambda_param(const FFElem& c) {
    if (c.is_zero()) throw std::domain_error("lambda_param: c must be nonzero");
    return ff_inv(norm_to_prime(c));
}

}  // namespace serre
