#include "weights/weight_combinatorics.hpp"

#include <doctest.h>

#include <algorithm>

using namespace serre;

namespace {

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

template <class Fn>
void for_all_data(int64_t p, int64_t f, int64_t e, Fn fn) {
    TameCharCtx ctx(p, f);
    int64_t n = 2 * f;
    for (int64_t a = 1; a < ctx.modulus; ++a) {
        if (mod_reduce(a * ctx.q, ctx.modulus) == a) continue;
        TameChar chi(ctx, a);
        for (int64_t mask = 0; mask < (1 << n); ++mask) {
            std::set<int64_t> J;
            for (int64_t i = 0; i < n; ++i)
                if (mask & (1 << i)) J.insert(i);
            std::vector<int64_t> x(n, 0);
            do {
                fn(WeightDatum(chi, J, x, e));
            } while (next_tuple(x, e));
        }
    }
}

}  // namespace

TEST_CASE("datum construction guards") {
    TameCharCtx ctx(3, 1);
    CHECK_THROWS(WeightDatum(TameChar(ctx, 0), {}, {0, 0}, 1));  // trivial chi
    CHECK_THROWS(WeightDatum(TameChar(ctx, 4), {}, {0, 0}, 1));  // chi == chi^q
    CHECK_THROWS(WeightDatum(TameChar(ctx, 1), {}, {2, 0}, 1));  // x out of range
    CHECK_THROWS(WeightDatum(TameChar(ctx, 1), {}, {0}, 1));     // wrong length
    CHECK_NOTHROW(WeightDatum(TameChar(ctx, 1), {0}, {0, 0}, 1));
}

TEST_CASE("allowability") {
    TameCharCtx ctx(3, 1);
    TameChar chi(ctx, 1);  // c = (1, 0)
    CHECK(is_allowable(WeightDatum(chi, {0}, {0, 0}, 1)));
    CHECK_FALSE(is_allowable(WeightDatum(chi, {0}, {1, 0}, 1)));
    auto rep = allowable_report(WeightDatum(chi, {0}, {1, 0}, 1));
    CHECK_FALSE(rep.per_index[0]);

    // both-out everywhere: any x is allowable
    for_all_data(3, 1, 2, [](const WeightDatum& d) {
        if (d.J.empty()) CHECK(is_allowable(d));
    });
}

TEST_CASE("classification exponents from (J, x)") {
    TameCharCtx ctx(3, 1);
    TameChar chi(ctx, 1);
    CHECK(r_from_jx(WeightDatum(chi, {0}, {0, 0}, 1)) == std::vector<int64_t>{2, 2});
    CHECK(r_from_jx(WeightDatum(chi, {}, {1, 1}, 1)) == std::vector<int64_t>{8, 8});

    SUBCASE("chi-sequence relation") {
        for (auto [p, f, e] : {std::tuple<int64_t, int64_t, int64_t>{3, 1, 1}, {3, 2, 1}, {5, 1, 2}})
            for_all_data(p, f, e, [](const WeightDatum& d) {
                auto r = r_from_jx(d);
                int64_t n = 2 * d.ctx.f;
                TameChar chiq = frobenius(d.chi, d.ctx.f);
                for (int64_t i = 0; i < n; ++i) {
                    TameChar cur = d.J.count(i) ? d.chi : chiq;
                    TameChar nxt = d.J.count((i + 1) % n) ? d.chi : chiq;
                    CHECK(char_product(cur, char_power(eta(d.ctx, i), r[i])) == nxt);
                }
            });
    }

    SUBCASE("range duality") {
        for (auto [p, f, e] : {std::tuple<int64_t, int64_t, int64_t>{3, 1, 1}, {3, 1, 3}, {3, 2, 1}})
            for_all_data(p, f, e, [e = e](const WeightDatum& d) {
                auto r = r_from_jx(d);
                bool in_range = std::all_of(r.begin(), r.end(), [&](int64_t ri) {
                    return 0 <= ri && ri <= e * d.ctx.modulus;
                });
                CHECK(in_range == is_allowable(d));
            });
    }
}

TEST_CASE("closed-form character") {
    TameCharCtx ctx(3, 1);
    TameChar chi(ctx, 1);
    CHECK(psi_closed_form(WeightDatum(chi, {0}, {0, 0}, 1)).exp == 4);
    CHECK(psi_closed_form(WeightDatum(chi, {}, {0, 0}, 1)) == frobenius(chi, 1));

    SUBCASE("oracle equivalence on small parameters") {
        for (auto [p, f, e] :
             {std::tuple<int64_t, int64_t, int64_t>{3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {3, 2, 1}})
            for_all_data(p, f, e, [](const WeightDatum& d) {
                if (!is_allowable(d)) return;
                CHECK(psi_closed_form(d) == psi_via_breuil(d));
            });
    }

    SUBCASE("oracle example") {
        WeightDatum d(chi, {0}, {0, 0}, 1);
        CHECK(psi_via_breuil(d).exp == 4);  // s_0 = 3(2*3+2)/8 = 3, exp 1+3
    }

    SUBCASE("symmetric data satisfies the determinant identity") {
        for (auto [p, f, e] : {std::tuple<int64_t, int64_t, int64_t>{3, 2, 1}, {5, 1, 1}, {5, 1, 2}})
            for_all_data(p, f, e, [e = e](const WeightDatum& d) {
                int64_t f = d.ctx.f;
                for (int64_t i = 0; i < f; ++i) {
                    if (d.J.count(i) != d.J.count(i + f)) return;
                    if (d.x[i] + d.x[i + f] != e) return;
                }
                TameChar psi = psi_closed_form(d);
                TameChar det = char_product(cyclotomic(d.ctx, e), char_power(d.chi, d.ctx.q + 1));
                CHECK(char_power(psi, d.ctx.q + 1) == det);
            });
    }
}

TEST_CASE("lattice coefficient solver") {
    CHECK(solve_lattice_coefficients({0}, 5) == std::vector<int64_t>{0});
    CHECK(solve_lattice_coefficients({4}, 5) == std::vector<int64_t>{1});
    CHECK(solve_lattice_coefficients({-4}, 5) == std::vector<int64_t>{-1});
    CHECK(solve_lattice_coefficients({3, -1}, 3) == std::vector<int64_t>{1, 0});
    CHECK_THROWS(solve_lattice_coefficients({3}, 5));   // no integral solution
    CHECK_THROWS(solve_lattice_coefficients({8}, 5));   // a_0 = 2 out of range
}

TEST_CASE("normalization") {
    TameCharCtx ctx(5, 1);
    TameChar chi(ctx, 1);

    SUBCASE("symmetric input returned unchanged") {
        WeightDatum d(chi, {0, 1}, {1, 0}, 1);
        REQUIRE(is_allowable(d));
        WeightDatum nd = normalize_to_symmetric(d);
        CHECK(nd.J == d.J);
        CHECK(nd.x == d.x);
    }

    SUBCASE("exhaustive soundness at p=5") {
        for (auto [p, f, e] : {std::tuple<int64_t, int64_t, int64_t>{5, 1, 1}, {5, 1, 2}, {5, 2, 1}})
            for_all_data(p, f, e, [e = e](const WeightDatum& d) {
                if (!is_allowable(d)) return;
                TameChar psi = psi_closed_form(d);
                TameChar det = char_product(cyclotomic(d.ctx, e), char_power(d.chi, d.ctx.q + 1));
                if (!(char_power(psi, d.ctx.q + 1) == det)) return;
                WeightDatum nd = normalize_to_symmetric(d);
                CHECK(is_allowable(nd));
                CHECK(psi_closed_form(nd) == psi);
                for (int64_t i = 0; i < d.ctx.f; ++i) {
                    CHECK(nd.J.count(i) == nd.J.count(i + d.ctx.f));
                    CHECK(nd.x[i] + nd.x[i + d.ctx.f] == e);
                }
            });
    }

    SUBCASE("state bookkeeping") {
        // every qualifying nonsymmetric datum has S = f + T and solvable
        // coefficients in {-1, 0, 1}
        int64_t seen = 0;
        for_all_data(5, 2, 1, [&seen](const WeightDatum& d) {
            if (!is_allowable(d)) return;
            int64_t f = d.ctx.f;
            bool symmetric = true;
            for (int64_t i = 0; i < f; ++i)
                if (d.J.count(i) != d.J.count(i + f)) symmetric = false;
            if (symmetric) return;
            TameChar det = char_product(cyclotomic(d.ctx, d.e), char_power(d.chi, d.ctx.q + 1));
            if (!(char_power(psi_closed_form(d), d.ctx.q + 1) == det)) return;
            NormalizationState st = compute_normalization_state(d);
            ++seen;
            CHECK_FALSE(st.T.empty());
            std::set<int64_t> shifted;
            for (int64_t t : st.T) shifted.insert((t + f) % (2 * f));
            CHECK(st.S == shifted);
            REQUIRE(st.a.size() == 4);
            for (int64_t ai : st.a) CHECK((ai >= -1 && ai <= 1));
        });
        CHECK(seen > 0);
    }
}
