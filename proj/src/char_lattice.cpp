#include "weights/char_lattice.hpp"

namespace serre {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_reduce(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t pow_mod(int64_t base, int64_t e, int64_t m) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    int64_t r = 1 % m;
    base = mod_reduce(base, m);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

TameCharCtx::TameCharCtx(int64_t p_, int64_t f_) : p(p_), f(f_) {
    if (p < 3 || p > 97 || !is_prime(p))
        throw std::invalid_argument("TameCharCtx: p must be an odd prime <= 97");
    if (f < 1 || f > 3)
        throw std::invalid_argument("TameCharCtx: f must be in [1, 3]");
    q = 1;
    for (int64_t i = 0; i < f; ++i) q *= p;
    modulus = q * q - 1;
}

TameChar::TameChar(TameCharCtx c, int64_t e) : ctx(c) {
    if (ctx.modulus <= 0) throw std::invalid_argument("TameChar: empty context");
    exp = mod_reduce(e, ctx.modulus);
}

static void check_same_ctx(const TameChar& a, const TameChar& b) {
    if (!(a.ctx == b.ctx)) throw std::invalid_argument("context mismatch");
}

TameChar eta(const TameCharCtx& ctx, int64_t i) {
    if (i < 0 || i >= 2 * ctx.f) throw std::out_of_range("eta: index out of range");
    int64_t k = (2 * ctx.f - i) % (2 * ctx.f);
    return TameChar(ctx, pow_mod(ctx.p, k, ctx.modulus));
}

TameChar omega(const TameCharCtx& ctx, int64_t i) {
    if (i < 0 || i >= ctx.f) throw std::out_of_range("omega: index out of range");
    return char_product(eta(ctx, i), eta(ctx, i + ctx.f));
}

TameChar cyclotomic(const TameCharCtx& ctx, int64_t e) {
    if (e < 1) throw std::invalid_argument("cyclotomic: e must be >= 1");
    TameChar acc(ctx, 0);
    for (int64_t i = 0; i < ctx.f; ++i)
        acc = char_product(acc, char_power(omega(ctx, i), e));
    return acc;
}

TameChar char_product(const TameChar& a, const TameChar& b) {
    check_same_ctx(a, b);
    return TameChar(a.ctx, mod_reduce(a.exp + b.exp, a.ctx.modulus));
}

TameChar char_power(const TameChar& a, int64_t n) {
    int64_t e = mod_reduce(n, a.ctx.modulus);
    return TameChar(a.ctx, mul_mod(a.exp, e, a.ctx.modulus));
}

TameChar frobenius(const TameChar& a, int64_t k) {
    int64_t kk = mod_reduce(k, 2 * a.ctx.f);
    return char_power(a, pow_mod(a.ctx.p, kk, a.ctx.modulus));
}

int64_t niveau(const TameChar& a) {
    for (int64_t n = 1; n <= 2 * a.ctx.f; ++n) {
        if ((2 * a.ctx.f) % n != 0) continue;
        if (frobenius(a, n) == a) return n;
    }
    throw std::logic_error("niveau: unreachable");  // frobenius(a, 2f) == a always
}

std::vector<int64_t> digits(const TameChar& chi) {
    if (chi.trivial())
        throw std::invalid_argument("digits undefined for trivial character");
    int64_t n = 2 * chi.ctx.f;
    // base-p digits d_j of the exponent; then c_0 = d_0, c_i = d_{2f-i}
    std::vector<int64_t> d(n, 0);
    int64_t v = chi.exp;
    for (int64_t j = 0; j < n; ++j) {
        d[j] = v % chi.ctx.p;
        v /= chi.ctx.p;
    }
    std::vector<int64_t> c(n, 0);
    c[0] = d[0];
    for (int64_t i = 1; i < n; ++i) c[i] = d[n - i];
    return c;
}

}  // namespace serre
