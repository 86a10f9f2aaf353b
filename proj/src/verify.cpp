#include "weights/verify.hpp"

#include "weights/breuil.hpp"
#include "weights/lift_existence.hpp"
#include "weights/weight_combinatorics.hpp"
#include "weights/weight_sets.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace serre {

namespace {

constexpr int64_t kMaxMessages = 20;

int64_t ipow(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool valid_chi_exp(const TameCharCtx& ctx, int64_t a) {
    return a != 0 && mod_reduce(a * ctx.q, ctx.modulus) != a;
}

// odometer over [0,e]^len, leftmost most significant
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

// Splits the exponent range [1, modulus) into contiguous chunks, runs
// per_exp on each valid chi exponent, and merges the chunk reports in
// order so the output is independent of the thread count.
template <class Fn>
SuiteReport sweep_chi(const std::string& name, const TameCharCtx& ctx, int threads, Fn per_exp) {
    if (threads < 1) threads = 1;
    int64_t lo = 1, hi = ctx.modulus;
    std::vector<SuiteReport> parts(threads);
    std::vector<std::thread> workers;
    int64_t span = (hi - lo + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int64_t b = lo + t * span, ee = std::min(hi, b + span);
        workers.emplace_back([&, t, b, ee] {
            for (int64_t a = b; a < ee; ++a)
                if (valid_chi_exp(ctx, a)) per_exp(a, parts[t]);
        });
    }
    for (auto& w : workers) w.join();
    SuiteReport rep;
    rep.name = name;
    for (const auto& part : parts) rep.merge(part);
    return rep;
}

}  // namespace

void SuiteReport::note_failure(const std::string& msg) {
    ++failures;
    if (static_cast<int64_t>(messages.size()) < kMaxMessages) messages.push_back(msg);
}

void SuiteReport::merge(const SuiteReport& other) {
    checked += other.checked;
    failures += other.failures;
    for (const auto& m : other.messages) {
        if (static_cast<int64_t>(messages.size()) >= kMaxMessages) break;
        messages.push_back(m);
    }
}

SuiteReport verify_lemma_psi(int64_t p, int64_t f, int64_t e, int threads) {
    TameCharCtx ctx(p, f);
    int64_t n = 2 * f;
    int64_t eprime = e * ctx.modulus;
    return sweep_chi("lemma-psi", ctx, threads, [&](int64_t a, SuiteReport& rep) {
        TameChar chi(ctx, a);
        for (int64_t mask = 0; mask < (1 << n); ++mask) {
            std::set<int64_t> J;
            for (int64_t i = 0; i < n; ++i)
                if (mask & (1 << i)) J.insert(i);
            std::vector<int64_t> x(n, 0);
            do {
                WeightDatum d(chi, J, x, e);
                std::vector<int64_t> r = r_from_jx(d);
                bool in_range = std::all_of(r.begin(), r.end(), [&](int64_t ri) {
                    return 0 <= ri && ri <= eprime;
                });
                bool allow = is_allowable(d);
                ++rep.checked;
                if (allow != in_range) {
                    std::ostringstream os;
                    os << "range/allowability mismatch at chi=" << a << " mask=" << mask;
                    rep.note_failure(os.str());
                    continue;
                }
                if (!allow) continue;
                if (!(psi_closed_form(d) == psi_via_breuil(d))) {
                    std::ostringstream os;
                    os << "psi mismatch at chi=" << a << " mask=" << mask;
                    rep.note_failure(os.str());
                }
            } while (next_tuple(x, e));
        }
    });
}

SuiteReport verify_prop_niveau_one(int64_t p, int64_t f, int64_t e) {
    if (e < p - 1) throw std::invalid_argument("verify_prop_niveau_one: requires e >= p-1");
    TameCharCtx ctx(p, f);
    int64_t want = ctx.q - 1;
    return sweep_chi("prop-niveau-one", ctx, 1, [&](int64_t a, SuiteReport& rep) {
        TameChar chi(ctx, a);
        auto psis = enumerate_lift_psis(chi, e, LiftVariant::Reducible);
        ++rep.checked;
        if (static_cast<int64_t>(psis.size()) != want) {
            std::ostringstream os;
            os << "chi=" << a << ": expected " << want << " characters, got " << psis.size();
            rep.note_failure(os.str());
        }
        for (const auto& psi : psis)
            if (psi.exp % (ctx.q + 1) != 0) {
                std::ostringstream os;
                os << "chi=" << a << ": psi exp " << psi.exp << " has niveau > f";
                rep.note_failure(os.str());
            }
    });
}

SuiteReport verify_lemma_irred_full(int64_t p, int64_t f, int64_t e) {
    if (e < p - 1) throw std::invalid_argument("verify_lemma_irred_full: requires e >= p-1");
    TameCharCtx ctx(p, f);
    int64_t want = ctx.q + 1;
    return sweep_chi("lemma-irred-full", ctx, 1, [&](int64_t a, SuiteReport& rep) {
        TameChar chi(ctx, a);
        TameChar det = char_product(cyclotomic(ctx, e), char_power(chi, ctx.q + 1));
        auto psis = enumerate_lift_psis(chi, e, LiftVariant::Irreducible);
        ++rep.checked;
        if (static_cast<int64_t>(psis.size()) != want) {
            std::ostringstream os;
            os << "chi=" << a << ": expected " << want << " characters, got " << psis.size();
            rep.note_failure(os.str());
        }
        for (const auto& psi : psis)
            if (!(char_power(psi, ctx.q + 1) == det)) {
                std::ostringstream os;
                os << "chi=" << a << ": psi exp " << psi.exp << " fails the determinant identity";
                rep.note_failure(os.str());
            }
    });
}

SuiteReport verify_prop_normalize(int64_t p, int64_t f, int64_t e, int threads) {
    if (e >= p - 1) throw std::invalid_argument("verify_prop_normalize: requires e < p-1");
    TameCharCtx ctx(p, f);
    int64_t n = 2 * f;
    return sweep_chi("prop-normalize", ctx, threads, [&](int64_t a, SuiteReport& rep) {
        TameChar chi(ctx, a);
        TameChar det = char_product(cyclotomic(ctx, e), char_power(chi, ctx.q + 1));
        std::vector<int64_t> reached, symmetric_reached;
        for (int64_t mask = 0; mask < (1 << n); ++mask) {
            std::set<int64_t> J;
            bool symmetric = true;
            for (int64_t i = 0; i < n; ++i)
                if (mask & (1 << i)) J.insert(i);
            for (int64_t i = 0; i < f; ++i)
                if (J.count(i) != J.count(i + f)) symmetric = false;
            std::vector<int64_t> x(n, 0);
            do {
                WeightDatum d(chi, J, x, e);
                if (!is_allowable(d)) continue;
                TameChar psi = psi_closed_form(d);
                if (!(char_power(psi, ctx.q + 1) == det)) continue;
                ++rep.checked;
                reached.push_back(psi.exp);
                bool balanced = true;
                for (int64_t i = 0; i < f; ++i)
                    if (x[i] + x[i + f] != e) balanced = false;
                if (symmetric && balanced) symmetric_reached.push_back(psi.exp);

                try {
                    WeightDatum nd = normalize_to_symmetric(d);
                    bool ok = is_allowable(nd) && psi_closed_form(nd) == psi;
                    for (int64_t i = 0; i < f && ok; ++i) {
                        if (nd.J.count(i) != nd.J.count(i + f)) ok = false;
                        if (nd.x[i] + nd.x[i + f] != e) ok = false;
                    }
                    if (!ok) {
                        std::ostringstream os;
                        os << "chi=" << a << " mask=" << mask << ": normalized datum not symmetric";
                        rep.note_failure(os.str());
                    }
                } catch (const std::exception& ex) {
                    std::ostringstream os;
                    os << "chi=" << a << " mask=" << mask << ": " << ex.what();
                    rep.note_failure(os.str());
                }
            } while (next_tuple(x, e));
        }
        std::sort(reached.begin(), reached.end());
        reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
        std::sort(symmetric_reached.begin(), symmetric_reached.end());
        symmetric_reached.erase(std::unique(symmetric_reached.begin(), symmetric_reached.end()),
                                symmetric_reached.end());
        if (reached != symmetric_reached) {
            std::ostringstream os;
            os << "chi=" << a << ": arbitrary and symmetric psi-sets differ";
            rep.note_failure(os.str());
        }
    });
}

SuiteReport verify_s0_integrality() {
    SuiteReport rep;
    rep.name = "s0-integrality";
    const int64_t p = 3;
    for (int64_t d : {1, 2}) {
        for (int64_t f = 1; f <= d; ++f) {
            if (d % f != 0) continue;
            for (int64_t eKL : {2, 8}) {
                for (int64_t eprime : {8, 16}) {
                    if (eprime % eKL != 0) continue;
                    TameSetup setup(p, d, f, eKL, eprime);
                    auto field = FField::make_default(p, f);
                    FFElem one = FFElem::from_int(field, 1);
                    int64_t qm1 = ipow(p, f) - 1;

                    std::vector<int64_t> r(d, 0), k(d, 0);
                    do {
                        std::vector<int64_t> kk(d, 0);
                        do {
                            Rank1BreuilDD m{setup, r, kk, one};
                            if (!validate_rank1(m).ok()) continue;
                            ++rep.checked;
                            int64_t w = 0;
                            for (int64_t i = 0; i < f; ++i) w = w * p + r[i];
                            if ((p * w) % qm1 != 0) {
                                std::ostringstream os;
                                os << "non-integral s_0 at eKL=" << eKL << " eprime=" << eprime;
                                rep.note_failure(os.str());
                                continue;
                            }
                            int64_t s0 = p * w / qm1;
                            if ((qm1 * (kk[0] + s0)) % eKL != 0) {
                                std::ostringstream os;
                                os << "(p^f-1)(k_0+s_0) != 0 mod eKL at eKL=" << eKL
                                   << " eprime=" << eprime;
                                rep.note_failure(os.str());
                            }
                            if (eKL % qm1 == 0) generic_fibre(m);  // must not throw
                        } while (next_tuple(kk, eKL - 1));
                    } while (next_tuple(r, eprime));
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_frobenius_symmetry(int64_t count, uint64_t seed) {
    SuiteReport rep;
    rep.name = "frobenius-symmetry";
    std::mt19937_64 rng(seed);
    const std::vector<int64_t> ps = {3, 5}, fs = {1, 2}, es = {1, 2, 3, 4};
    auto pick = [&](const std::vector<int64_t>& v) {
        return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
    };
    for (int64_t trial = 0; trial < count; ++trial) {
        int64_t p = pick(ps), f = pick(fs), e = pick(es);
        TameCharCtx ctx(p, f);
        PlaceData pd;
        pd.label = "v" + std::to_string(trial);
        pd.ctx = ctx;
        pd.e = e;
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            std::uniform_int_distribution<int64_t> u(0, ctx.q - 2);
            TameChar psi1(ctx, (ctx.q + 1) * u(rng));
            TameChar psi2(ctx, (ctx.q + 1) * u(rng));
            pd.rep = LocalRepClass::reducible(e, psi1, psi2);
        } else {
            std::uniform_int_distribution<int64_t> u(0, ctx.modulus - 1);
            int64_t a;
            do {
                a = u(rng);
            } while (mod_reduce(a * ctx.q, ctx.modulus) == a);
            pd.rep = LocalRepClass::irreducible(e, TameChar(ctx, a));
        }

        std::vector<int64_t> local = local_weight_set(pd);
        ++rep.checked;
        for (int64_t a : local) {
            int64_t image = mod_reduce(a * ctx.q, ctx.modulus);
            if (!std::binary_search(local.begin(), local.end(), image)) {
                std::ostringstream os;
                os << "trial " << trial << ": set not closed under a -> q*a at a=" << a;
                rep.note_failure(os.str());
            }
            WeightChar w{ctx, a};
            if (weight_type(w) == WeightType::I && !det_condition(pd.rep, TameChar(ctx, a))) {
                std::ostringstream os;
                os << "trial " << trial << ": type-I weight " << a
                   << " fails the determinant identity";
                rep.note_failure(os.str());
            }
        }
    }
    return rep;
}

}  // namespace serre
