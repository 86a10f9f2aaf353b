#include "weights/weight_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace serre {

WeightType weight_type(const WeightChar& w) {
    return w.a % (w.ctx.q + 1) == 0 ? WeightType::II : WeightType::I;
}

std::vector<int64_t> local_weight_set(const PlaceData& pd) {
    const TameCharCtx& ctx = pd.ctx;
    std::vector<int64_t> out;
    TameChar eps = cyclotomic(ctx, pd.e);
    for (int64_t a = 0; a < ctx.modulus; ++a) {
        WeightChar w{ctx, a};
        if (weight_type(w) == WeightType::I) {
            // the Teichmuller identification: chi has the same exponent
            TameChar chi(ctx, a);
            bool in = pd.rep.kind == LocalRepClass::Kind::Reducible
                          ? reducible_lift_exists(pd.rep, chi).has_value()
                          : irreducible_lift_exists(pd.rep, chi).has_value();
            if (in) out.push_back(a);
        } else {
            // type II: only a split rep with inertial pair {sigma*eps, sigma}
            if (pd.rep.kind != LocalRepClass::Kind::Reducible) continue;
            int64_t ae = mod_reduce(a + eps.exp, ctx.modulus);
            int64_t p1 = pd.rep.psi1.exp, p2 = pd.rep.psi2.exp;
            if ((p1 == ae && p2 == a) || (p1 == a && p2 == ae)) out.push_back(a);
        }
    }
    return out;
}

std::vector<std::vector<int64_t>> global_weight_set(const std::vector<PlaceData>& places,
                                                    int64_t max_tuples) {
    if (places.empty()) throw std::invalid_argument("global_weight_set: no places");
    int64_t p0 = places.front().ctx.p;
    for (const auto& pd : places)
        if (pd.ctx.p != p0)
            throw std::invalid_argument("global_weight_set: inconsistent p across places");

    std::vector<std::vector<int64_t>> locals;
    for (const auto& pd : places) locals.push_back(local_weight_set(pd));

    std::vector<std::vector<int64_t>> out;
    std::vector<size_t> idx(locals.size(), 0);
    for (const auto& l : locals)
        if (l.empty()) return out;
    while (true) {
        if (max_tuples >= 0 && static_cast<int64_t>(out.size()) >= max_tuples) break;
        std::vector<int64_t> tuple(locals.size());
        for (size_t i = 0; i < locals.size(); ++i) tuple[i] = locals[i][idx[i]];
        out.push_back(std::move(tuple));
        size_t i = locals.size();
        while (i > 0) {
            --i;
            if (++idx[i] < locals[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
    return out;
}

}  // namespace serre
