#include "weights/weight_combinatorics.hpp"

#include <algorithm>

namespace serre {

namespace {

int64_t imod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

// allowability on raw (J, x) data, so the normalization moves can probe
// candidate lists before committing to a WeightDatum
bool index_allowable(const std::vector<int64_t>& c, int64_t e, const std::set<int64_t>& J,
                     const std::vector<int64_t>& x, int64_t i) {
    int64_t n = static_cast<int64_t>(c.size());
    int64_t f = n / 2;
    int64_t xi = x[i];
    if (xi < 0 || xi > e) return false;
    bool in_i = J.count(i) > 0;
    bool in_i1 = J.count(imod(i + 1, n)) > 0;
    if (in_i == in_i1) return true;
    int64_t j = 1;
    while (j <= n && c[imod(i + j, n)] == c[imod(i + j + f, n)]) ++j;
    if (j > n) throw std::logic_error("allowability: chi == chi^q slipped through");
    bool less = c[imod(i + j, n)] < c[imod(i + j + f, n)];
    if (in_i && !in_i1) return less ? (xi != e) : (xi != 0);
    return less ? (xi != 0) : (xi != e);
}

bool list_allowable(const std::vector<int64_t>& c, int64_t e, const std::set<int64_t>& J,
                    const std::vector<int64_t>& x) {
    for (int64_t i = 0; i < static_cast<int64_t>(c.size()); ++i)
        if (!index_allowable(c, e, J, x, i)) return false;
    return true;
}

TameChar psi_raw(const TameCharCtx& ctx, const std::vector<int64_t>& c,
                 const std::set<int64_t>& J, const std::vector<int64_t>& x) {
    int64_t n = 2 * ctx.f;
    TameChar acc(ctx, 0);
    for (int64_t i = 0; i < n; ++i) {
        int64_t ce = J.count(i) ? c[i] : c[imod(i + ctx.f, n)];
        acc = char_product(acc, char_power(eta(ctx, i), ce + x[i]));
    }
    return acc;
}

}  // namespace

WeightDatum::WeightDatum(TameChar chi_, std::set<int64_t> J_, std::vector<int64_t> x_, int64_t e_)
    : ctx(chi_.ctx), chi(chi_), J(std::move(J_)), x(std::move(x_)), e(e_) {
    if (chi.trivial()) throw std::invalid_argument("WeightDatum: chi must be nontrivial");
    if (frobenius(chi, ctx.f) == chi)
        throw std::invalid_argument("WeightDatum: chi == chi^q is excluded");
    if (e < 1) throw std::invalid_argument("WeightDatum: e must be >= 1");
    int64_t n = 2 * ctx.f;
    if (static_cast<int64_t>(x.size()) != n)
        throw std::invalid_argument("WeightDatum: x must have length 2f");
    for (int64_t xi : x)
        if (xi < 0 || xi > e) throw std::invalid_argument("WeightDatum: x_i out of [0, e]");
    for (int64_t i : J)
        if (i < 0 || i >= n) throw std::invalid_argument("WeightDatum: J index out of range");
    c = digits(chi);
}

AllowableReport allowable_report(const WeightDatum& d) {
    AllowableReport rep;
    int64_t n = 2 * d.ctx.f;
    rep.per_index.resize(n);
    for (int64_t i = 0; i < n; ++i) {
        rep.per_index[i] = index_allowable(d.c, d.e, d.J, d.x, i);
        rep.all = rep.all && rep.per_index[i];
    }
    return rep;
}

bool is_allowable(const WeightDatum& d) { return allowable_report(d).all; }

std::vector<int64_t> r_from_jx(const WeightDatum& d) {
    int64_t n = 2 * d.ctx.f;
    int64_t f = d.ctx.f;
    int64_t p = d.ctx.p;
    std::vector<int64_t> r(n, 0);
    for (int64_t i = 0; i < n; ++i) {
        bool in_i = d.J.count(i) > 0;
        bool in_i1 = d.J.count(imod(i + 1, n)) > 0;
        int64_t base = d.ctx.modulus * d.x[i];
        if (in_i == in_i1) {
            r[i] = base;
            continue;
        }
        // sum_{k=1}^{f} p^{f-k} (c_{i+f+k} - c_{i+k}), negated across the
        // reverse transition
        int64_t t = 0;
        for (int64_t k = 1; k <= f; ++k)
            t = t * p + (d.c[imod(i + f + k, n)] - d.c[imod(i + k, n)]);
        r[i] = in_i ? base + (d.ctx.q - 1) * t : base - (d.ctx.q - 1) * t;
    }
    return r;
}

TameChar psi_closed_form(const WeightDatum& d) { return psi_raw(d.ctx, d.c, d.J, d.x); }

TameChar psi_via_breuil(const WeightDatum& d) {
    if (!is_allowable(d)) throw std::invalid_argument("psi_via_breuil: datum is not allowable");
    std::vector<int64_t> r = r_from_jx(d);
    __int128 num = 0;
    for (int64_t ri : r) num = num * d.ctx.p + ri;
    num *= d.ctx.p;
    if (num % d.ctx.modulus != 0)
        throw std::logic_error("psi_via_breuil: s_0 is not integral");
    int64_t s0 = static_cast<int64_t>((num / d.ctx.modulus) % d.ctx.modulus);
    TameChar chi0 = d.J.count(0) ? d.chi : frobenius(d.chi, d.ctx.f);
    return char_product(chi0, char_power(eta(d.ctx, 0), s0));
}

std::vector<int64_t> solve_lattice_coefficients(const std::vector<int64_t>& y, int64_t p) {
    int64_t f = static_cast<int64_t>(y.size());
    int64_t qm1 = 1;
    for (int64_t i = 0; i < f; ++i) qm1 *= p;
    qm1 -= 1;
    int64_t num = 0;
    for (int64_t i = 0; i < f; ++i) num = num * p + y[i];
    if (num % qm1 != 0)
        throw std::invalid_argument("lattice solve: no integral solution");
    std::vector<int64_t> a(f, 0);
    a[0] = num / qm1;
    for (int64_t i = 0; i + 1 < f; ++i) a[i + 1] = p * a[i] - y[i];
    for (int64_t ai : a)
        if (ai < -1 || ai > 1)
            throw std::logic_error("lattice solve: coefficient outside {-1,0,1}");
    return a;
}

NormalizationState compute_normalization_state(const WeightDatum& d) {
    NormalizationState st;
    int64_t n = 2 * d.ctx.f;
    int64_t f = d.ctx.f;
    for (int64_t i = 0; i < n; ++i) {
        bool in_i = d.J.count(i) > 0;
        bool in_if = d.J.count(imod(i + f, n)) > 0;
        if (in_i && !in_if) st.S.insert(i);
        if (!in_i && in_if) st.T.insert(i);
    }
    std::vector<int64_t> y(f, 0);
    for (int64_t i = 0; i < f; ++i) {
        int64_t sign = st.S.count(i) ? 1 : (st.T.count(i) ? -1 : 0);
        y[i] = d.x[i] + d.x[i + f] - d.e + sign * (d.c[i] - d.c[i + f]);
    }
    std::vector<int64_t> a = solve_lattice_coefficients(y, d.ctx.p);
    st.a.resize(n);
    for (int64_t i = 0; i < n; ++i) st.a[i] = a[i % f];
    return st;
}

WeightDatum normalize_to_symmetric(const WeightDatum& d) {
    int64_t n = 2 * d.ctx.f;
    int64_t f = d.ctx.f;
    int64_t p = d.ctx.p;
    if (d.e >= p - 1)
        throw std::invalid_argument("normalize_to_symmetric: requires e < p-1");
    if (!is_allowable(d))
        throw std::invalid_argument("normalize_to_symmetric: datum is not allowable");
    TameChar eps = cyclotomic(d.ctx, d.e);
    TameChar target = char_product(eps, char_power(d.chi, d.ctx.q + 1));
    TameChar psi0 = psi_closed_form(d);
    if (!(char_power(psi0, d.ctx.q + 1) == target))
        throw std::invalid_argument("normalize_to_symmetric: psi^{q+1} != eps*chi^{q+1}");

    WeightDatum cur = d;
    for (int64_t guard = 0; guard <= 2 * n * n; ++guard) {
        NormalizationState st = compute_normalization_state(cur);
        if (st.T.empty()) {
            for (int64_t i = 0; i < f; ++i)
                if (cur.x[i] + cur.x[i + f] != cur.e)
                    throw std::logic_error("normalize: symmetric output violates x_i + x_{i+f} = e");
            return cur;
        }

        // maximal circular run in T with the smallest start index
        int64_t jprime = -1, len = 0;
        for (int64_t s = 0; s < n; ++s) {
            if (!st.T.count(s) || st.T.count(imod(s - 1, n))) continue;
            int64_t l = 0;
            while (st.T.count(imod(s + l, n))) ++l;
            if (jprime < 0) {
                jprime = s;
                len = l;
            }
        }
        if (jprime < 0) throw std::logic_error("normalize: T nonempty but no run found");
        int64_t j = imod(jprime + len - 1, n);

        const auto& a = st.a;
        const auto& c = cur.c;
        auto adjust = [&](std::vector<int64_t>& x, int64_t i) {
            // x_i - (c_i - c_{i+f}) - p a_i + a_{i+1}
            x[i] -= (c[i] - c[imod(i + f, n)]) + p * a[i] - a[imod(i + 1, n)];
        };
        auto adjust_tail = [&](std::vector<int64_t>& x, int64_t i) {
            // the run-final variant drops the a_{i+1} term
            x[i] -= (c[i] - c[imod(i + f, n)]) + p * a[i];
        };

        std::set<int64_t> newJ;
        std::vector<int64_t> newx;
        bool ok = false;
        if (len == f) {
            // T occupies a full half-period: land directly on J' = everything
            for (int64_t i = 0; i < n; ++i) newJ.insert(i);
            newx = cur.x;
            for (int64_t t = 0; t + 1 < f; ++t) adjust(newx, imod(jprime + t, n));
            adjust_tail(newx, imod(jprime + f - 1, n));
            newx[imod(jprime - 1, n)] += a[imod(jprime, n)];
            ok = list_allowable(c, cur.e, newJ, newx);
        } else {
            // move (i): absorb the run into J
            newJ = cur.J;
            for (int64_t t = 0; t < len; ++t) newJ.insert(imod(jprime + t, n));
            newx = cur.x;
            for (int64_t t = 0; t + 1 < len; ++t) adjust(newx, imod(jprime + t, n));
            adjust_tail(newx, j);
            newx[imod(jprime - 1, n)] += a[imod(jprime, n)];
            ok = list_allowable(c, cur.e, newJ, newx);
            if (!ok) {
                // move (ii): expel the shifted run from J; the correction
                // terms stay indexed by the run index i, applied at i+f
                newJ = cur.J;
                for (int64_t t = 0; t < len; ++t) newJ.erase(imod(jprime + f + t, n));
                newx = cur.x;
                for (int64_t t = 0; t + 1 < len; ++t) {
                    int64_t i = imod(jprime + t, n);
                    int64_t m = imod(i + f, n);
                    newx[m] -= (c[i] - c[m]) + p * a[i] - a[imod(i + 1, n)];
                }
                newx[imod(j + f, n)] -= (c[j] - c[imod(j + f, n)]) + p * a[j];
                newx[imod(jprime + f - 1, n)] += a[imod(jprime, n)];
                ok = list_allowable(c, cur.e, newJ, newx);
            }
        }
        if (!ok)
            throw std::logic_error(
                "normalize: neither move yields an allowable list (falsification finding)");
        if (!(psi_raw(cur.ctx, c, newJ, newx) == psi0))
            throw std::logic_error("normalize: move changed psi (falsification finding)");

        WeightDatum next(cur.chi, std::move(newJ), std::move(newx), cur.e);
        NormalizationState stNext = compute_normalization_state(next);
        if (stNext.T.size() >= st.T.size())
            throw std::logic_error("normalize: T failed to shrink");
        cur = std::move(next);
    }
    throw std::logic_error("normalize: iteration guard exceeded");
}

}  // namespace serre
