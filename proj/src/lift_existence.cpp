#include "weights/lift_existence.hpp"

#include "weights/weight_combinatorics.hpp"

#include <algorithm>

namespace serre {

namespace {

bool niveau_divides_f(const TameChar& psi) { return psi.exp % (psi.ctx.q + 1) == 0; }

// subsets of Z/2f with exactly one of i, i+f for every i, as ascending
// bitmasks
std::vector<std::set<int64_t>> one_of_each_pair(int64_t f) {
    std::vector<std::set<int64_t>> out;
    for (int64_t mask = 0; mask < (1 << (2 * f)); ++mask) {
        std::set<int64_t> J;
        bool ok = true;
        for (int64_t i = 0; i < f; ++i) {
            bool a = mask & (1 << i), b = mask & (1 << (i + f));
            if (a == b) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (int64_t i = 0; i < 2 * f; ++i)
            if (mask & (1 << i)) J.insert(i);
        out.push_back(std::move(J));
    }
    return out;
}

std::vector<std::set<int64_t>> symmetric_subsets(int64_t f) {
    std::vector<std::set<int64_t>> out;
    for (int64_t mask = 0; mask < (1 << (2 * f)); ++mask) {
        std::set<int64_t> J;
        bool ok = true;
        for (int64_t i = 0; i < f; ++i) {
            bool a = mask & (1 << i), b = mask & (1 << (i + f));
            if (a != b) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (int64_t i = 0; i < 2 * f; ++i)
            if (mask & (1 << i)) J.insert(i);
        out.push_back(std::move(J));
    }
    return out;
}

// odometer over [0,e]^f, leftmost entry most significant
bool next_tuple(std::vector<int64_t>& x, int64_t e) {
    for (int64_t i = static_cast<int64_t>(x.size()) - 1; i >= 0; --i) {
        if (x[i] < e) {
            ++x[i];
            std::fill(x.begin() + i + 1, x.end(), 0);
            return true;
        }
    }
    return false;
}

void require_valid_chi(const TameChar& chi) {
    if (chi.trivial()) throw std::invalid_argument("chi must be nontrivial");
    if (frobenius(chi, chi.ctx.f) == chi) throw std::invalid_argument("chi == chi^q is excluded");
}

}  // namespace

LocalRepClass LocalRepClass::reducible(int64_t e, TameChar psi1, TameChar psi2) {
    if (!(psi1.ctx == psi2.ctx)) throw std::invalid_argument("LocalRepClass: context mismatch");
    if (!niveau_divides_f(psi1) || !niveau_divides_f(psi2))
        throw std::invalid_argument("LocalRepClass: reducible characters must have niveau | f");
    LocalRepClass rep;
    rep.ctx = psi1.ctx;
    rep.e = e;
    rep.kind = Kind::Reducible;
    rep.psi1 = psi1;
    rep.psi2 = psi2;
    return rep;
}

LocalRepClass LocalRepClass::irreducible(int64_t e, TameChar psi) {
    if (frobenius(psi, psi.ctx.f) == psi)
        throw std::invalid_argument("LocalRepClass: irreducible requires psi != psi^q");
    LocalRepClass rep;
    rep.ctx = psi.ctx;
    rep.e = e;
    rep.kind = Kind::Irreducible;
    rep.psi = psi;
    return rep;
}

bool det_condition(const LocalRepClass& rep, const TameChar& chi) {
    require_valid_chi(chi);
    if (!(rep.ctx == chi.ctx)) throw std::invalid_argument("det_condition: context mismatch");
    TameChar target = char_product(cyclotomic(rep.ctx, rep.e), char_power(chi, rep.ctx.q + 1));
    if (rep.kind == LocalRepClass::Kind::Reducible)
        return char_product(rep.psi1, rep.psi2) == target;
    return char_power(rep.psi, rep.ctx.q + 1) == target;
}

std::optional<LiftWitness> search_reducible_witness(const LocalRepClass& rep,
                                                    const TameChar& chi) {
    const TameCharCtx& ctx = chi.ctx;
    int64_t f = ctx.f;
    auto Js = one_of_each_pair(f);
    for (const TameChar& target : {rep.psi1, rep.psi2}) {
        for (const auto& J : Js) {
            std::vector<int64_t> xf(f, 0);
            do {
                std::vector<int64_t> x2f(2 * f);
                for (int64_t i = 0; i < f; ++i) x2f[i] = x2f[i + f] = xf[i];
                WeightDatum d(chi, J, x2f, rep.e);
                if (!is_allowable(d)) continue;
                if (psi_closed_form(d) == target) {
                    LiftWitness w;
                    w.case_tag = LiftWitness::Case::ii;
                    w.J = J;
                    w.x = xf;
                    return w;
                }
            } while (next_tuple(xf, rep.e));
        }
    }
    return std::nullopt;
}

std::optional<LiftWitness> search_irreducible_witness(const LocalRepClass& rep,
                                                      const TameChar& chi) {
    const TameCharCtx& ctx = chi.ctx;
    int64_t f = ctx.f;
    TameChar psiq = frobenius(rep.psi, f);
    auto Js = symmetric_subsets(f);

    std::optional<LiftWitness> found;
    for (const TameChar& target : {rep.psi, psiq}) {
        for (const auto& J : Js) {
            if (found) break;
            std::vector<int64_t> xf(f, 0);
            do {
                std::vector<int64_t> x2f(2 * f);
                for (int64_t i = 0; i < f; ++i) {
                    x2f[i] = xf[i];
                    x2f[i + f] = rep.e - xf[i];
                }
                WeightDatum d(chi, J, x2f, rep.e);
                if (!is_allowable(d)) continue;
                if (psi_closed_form(d) == target) {
                    LiftWitness w;
                    w.case_tag = LiftWitness::Case::iii;
                    w.J = J;
                    w.x = x2f;
                    found = w;
                    break;
                }
            } while (next_tuple(xf, rep.e));
        }
        if (found) break;
    }

    // relaxed search: drop x_i + x_{i+f} = e, require the determinant
    // match instead; must agree with the constrained search
    bool relaxed = false;
    TameChar target_det = char_product(cyclotomic(ctx, rep.e), char_power(chi, ctx.q + 1));
    for (const auto& J : Js) {
        if (relaxed) break;
        std::vector<int64_t> xall(2 * f, 0);
        do {
            WeightDatum d(chi, J, xall, rep.e);
            if (!is_allowable(d)) continue;
            TameChar psi = psi_closed_form(d);
            if (!(char_power(psi, ctx.q + 1) == target_det)) continue;
            if (psi == rep.psi || psi == psiq) {
                relaxed = true;
                break;
            }
        } while (next_tuple(xall, rep.e));
    }
    if (relaxed != found.has_value())
        throw std::logic_error(
            "irreducible search: constrained and relaxed searches disagree (falsification)");
    return found;
}

std::optional<LiftWitness> reducible_lift_exists(const LocalRepClass& rep, const TameChar& chi) {
    require_valid_chi(chi);
    if (rep.kind != LocalRepClass::Kind::Reducible)
        throw std::invalid_argument("reducible_lift_exists: rep is not reducible");
    if (!det_condition(rep, chi)) return std::nullopt;
    if (rep.e >= rep.ctx.p - 1) {
        LiftWitness w;
        w.case_tag = LiftWitness::Case::i;
        return w;
    }
    return search_reducible_witness(rep, chi);
}

std::optional<LiftWitness> irreducible_lift_exists(const LocalRepClass& rep, const TameChar& chi) {
    require_valid_chi(chi);
    if (rep.kind != LocalRepClass::Kind::Irreducible)
        throw std::invalid_argument("irreducible_lift_exists: rep is not irreducible");
    if (!det_condition(rep, chi)) return std::nullopt;
    if (rep.e >= rep.ctx.p - 1) {
        LiftWitness w;
        w.case_tag = LiftWitness::Case::i;
        return w;
    }
    return search_irreducible_witness(rep, chi);
}

std::vector<TameChar> enumerate_lift_psis(const TameChar& chi, int64_t e, LiftVariant variant) {
    require_valid_chi(chi);
    const TameCharCtx& ctx = chi.ctx;
    int64_t f = ctx.f;
    std::vector<TameChar> out;
    auto Js = variant == LiftVariant::Reducible ? one_of_each_pair(f) : symmetric_subsets(f);
    for (const auto& J : Js) {
        std::vector<int64_t> xf(f, 0);
        do {
            std::vector<int64_t> x2f(2 * f);
            for (int64_t i = 0; i < f; ++i) {
                x2f[i] = xf[i];
                x2f[i + f] = variant == LiftVariant::Reducible ? xf[i] : e - xf[i];
            }
            WeightDatum d(chi, J, x2f, e);
            if (!is_allowable(d)) continue;
            out.push_back(psi_closed_form(d));
        } while (next_tuple(xf, e));
    }
    std::sort(out.begin(), out.end(),
              [](const TameChar& a, const TameChar& b) { return a.exp < b.exp; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace serre
