#include "weights/breuil.hpp"

#include <sstream>

namespace serre {

namespace {

int64_t ipow(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int64_t imod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

void report(ViolationReport& rep, const std::string& msg) { rep.violations.push_back(msg); }

}  // namespace

TameSetup::TameSetup(int64_t p_, int64_t d_, int64_t f_, int64_t eKL_, int64_t eprime_)
    : p(p_), d(d_), f(f_), eKL(eKL_), eprime(eprime_) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("TameSetup: p must be an odd prime");
    if (d < 1 || f < 1 || d % f != 0) throw std::invalid_argument("TameSetup: need f | d");
    if (eKL < 1 || eprime < 1 || eprime % eKL != 0)
        throw std::invalid_argument("TameSetup: need eKL | eprime");
}

ViolationReport validate_rank1(const Rank1BreuilDD& m) {
    ViolationReport rep;
    const TameSetup& s = m.setup;
    if (static_cast<int64_t>(m.r.size()) != s.d || static_cast<int64_t>(m.k.size()) != s.d) {
        report(rep, "r and k must have length d");
        return rep;
    }
    if (!m.c.field || m.c.field->p() != s.p || m.c.field->d() != s.f)
        report(rep, "c must lie in F_{p^f}");
    else if (m.c.is_zero())
        report(rep, "c must be nonzero");

    for (int64_t i = 0; i < s.d; ++i) {
        if (m.r[i] < 0 || m.r[i] > s.eprime) {
            std::ostringstream os;
            os << "r_" << i << " outside [0, e']";
            report(rep, os.str());
        }
        if (m.k[i] < 0 || m.k[i] >= s.eKL) {
            std::ostringstream os;
            os << "k_" << i << " outside [0, eKL)";
            report(rep, os.str());
        }
    }
    for (int64_t i = 0; i < s.d; ++i) {
        int64_t prev = imod(i - 1, s.d);
        if (imod(m.k[i] - s.p * (m.k[prev] + m.r[prev]), s.eKL) != 0) {
            std::ostringstream os;
            os << "k_" << i << " != p(k_" << prev << " + r_" << prev << ") mod eKL";
            report(rep, os.str());
        }
    }
    for (int64_t i = 0; i < s.d; ++i) {
        if (m.r[(i + s.f) % s.d] != m.r[i]) {
            std::ostringstream os;
            os << "r not periodic with period dividing f at index " << i;
            report(rep, os.str());
        }
        if (m.k[(i + s.f) % s.d] != m.k[i]) {
            std::ostringstream os;
            os << "k not periodic with period dividing f at index " << i;
            report(rep, os.str());
        }
    }
    if (rep.ok()) {
        int64_t w = 0;
        for (int64_t i = 0; i < s.f; ++i) w = w * s.p + m.r[i];
        if (w % (ipow(s.p, s.f) - 1) != 0)
            report(rep, "p^{f-1} r_0 + ... + r_{f-1} != 0 mod p^f-1");
    }
    return rep;
}

GenericFibre generic_fibre(const Rank1BreuilDD& m) {
    ViolationReport rep = validate_rank1(m);
    if (!rep.ok())
        throw std::invalid_argument("generic_fibre: invalid data: " + rep.violations.front());
    const TameSetup& s = m.setup;
    int64_t qm1 = ipow(s.p, s.f) - 1;
    if (s.eKL % qm1 != 0)
        throw std::invalid_argument("generic_fibre: requires (p^f - 1) | eKL");

    int64_t w = 0;
    for (int64_t i = 0; i < s.f; ++i) w = w * s.p + m.r[i];
    if ((s.p * w) % qm1 != 0) throw std::logic_error("generic_fibre: s_0 is not integral");
    int64_t s0 = s.p * w / qm1;

    if ((qm1 * (m.k[0] + s0)) % s.eKL != 0)
        throw std::logic_error("generic_fibre: (p^f-1)(k_0+s_0) != 0 mod eKL");
    // exponent of the niveau-f fundamental character eta^{eKL/(p^f-1)}
    int64_t n = imod((m.k[0] + s0) / (s.eKL / qm1), qm1);

    GenericFibre fib;
    if (s.f % 2 == 0) {
        TameCharCtx ctx(s.p, s.f / 2);
        fib.inertial = TameChar(ctx, n);
    } else {
        TameCharCtx ctx(s.p, s.f);
        fib.inertial = TameChar(ctx, n * (ctx.q + 1));
    }
    fib.lambda = lambda_param(m.c);
    fib.s0 = s0;
    return fib;
}

ViolationReport validate_rank2_pair(const Rank2PairData& nn) {
    ViolationReport rep;
    int64_t n = 2 * nn.ctx.f;
    int64_t f = nn.ctx.f;
    int64_t eprime = nn.e * nn.ctx.modulus;
    if (nn.chi.trivial() || frobenius(nn.chi, f) == nn.chi) {
        report(rep, "chi must be nontrivial with chi != chi^q");
        return rep;
    }
    if (static_cast<int64_t>(nn.r.size()) != n || static_cast<int64_t>(nn.rprime.size()) != n ||
        static_cast<int64_t>(nn.gamma.size()) != n ||
        static_cast<int64_t>(nn.gammaprime.size()) != n) {
        report(rep, "r, r', gamma, gamma' must have length 2f");
        return rep;
    }
    for (int64_t i = 0; i < n; ++i) {
        if (nn.rprime[i] != eprime - nn.r[i]) {
            std::ostringstream os;
            os << "r'_" << i << " != e' - r_" << i;
            report(rep, os.str());
        }
    }
    // chi-sequence induced by J: chi_i = chi if i in J else chi^q
    TameChar chiq = frobenius(nn.chi, f);
    for (int64_t i = 0; i < n; ++i) {
        TameChar chi_i = nn.J.count(i) ? nn.chi : chiq;
        TameChar chi_next = nn.J.count((i + 1) % n) ? nn.chi : chiq;
        if (!(char_product(chi_i, char_power(eta(nn.ctx, i), nn.r[i])) == chi_next)) {
            std::ostringstream os;
            os << "chi_" << (i + 1) % n << " != chi_" << i << " * eta_" << i << "^{r_" << i << "}";
            report(rep, os.str());
        }
    }
    for (int64_t i = 0; i < n; ++i) {
        int64_t m = (i + f) % n;
        bool in_i = nn.J.count(i) > 0;
        bool in_m = nn.J.count(m) > 0;
        if (nn.variant == Rank2Variant::RED) {
            if (in_i == in_m) {
                std::ostringstream os;
                os << "RED: need exactly one of " << i << ", " << m << " in J";
                report(rep, os.str());
            }
            if (nn.r[i] != nn.r[m]) {
                std::ostringstream os;
                os << "RED: r_" << i << " != r_" << m;
                report(rep, os.str());
            }
            if (nn.rprime[i] != nn.rprime[m]) {
                std::ostringstream os;
                os << "RED: r'_" << i << " != r'_" << m;
                report(rep, os.str());
            }
            if (!(nn.gamma[i] == nn.gamma[m])) {
                std::ostringstream os;
                os << "RED: gamma_" << i << " != gamma_" << m;
                report(rep, os.str());
            }
            if (!(nn.gammaprime[i] == nn.gammaprime[m])) {
                std::ostringstream os;
                os << "RED: gamma'_" << i << " != gamma'_" << m;
                report(rep, os.str());
            }
        } else {
            if (in_i != in_m) {
                std::ostringstream os;
                os << "IRR: need " << i << " in J iff " << m << " in J";
                report(rep, os.str());
            }
            if (nn.r[i] != nn.rprime[m]) {
                std::ostringstream os;
                os << "IRR: r_" << i << " != r'_" << m;
                report(rep, os.str());
            }
            if (!(nn.gamma[i] == nn.gammaprime[m])) {
                std::ostringstream os;
                os << "IRR: gamma_" << i << " != gamma'_" << m;
                report(rep, os.str());
            }
        }
    }
    return rep;
}

}  // namespace serre
