// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 8 compares against a fixture generated by the
// independent brute-force script in fixtures/gen_fixture.py.

#include "weights/json_io.hpp"
#include "weights/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

using namespace serre;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " (" << what << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

int suite_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void criterion_1() {
    int64_t checked = 0, bad = 0;
    std::string first;
    for (int64_t p : {3, 5})
        for (int64_t f : {1, 2}) {
            std::set<int64_t> es = {1, 2, p - 1, p};
            for (int64_t e : es) {
                SuiteReport rep = verify_lemma_psi(p, f, e, suite_threads());
                checked += rep.checked;
                bad += rep.failures;
                if (!rep.pass() && first.empty()) first = rep.messages.front();
            }
        }
    report(1, "closed form equals classification oracle", bad == 0 && checked > 0, first);
}

void criterion_2() {
    int64_t bad = 0;
    for (auto [p, f] : {std::pair<int64_t, int64_t>{3, 1}, {5, 1}, {3, 2}})
        bad += verify_prop_niveau_one(p, f, p - 1).failures;
    report(2, "reducible enumeration counts p^f-1", bad == 0);
}

void criterion_3() {
    int64_t bad = 0;
    for (auto [p, f] : {std::pair<int64_t, int64_t>{3, 1}, {5, 1}, {3, 2}})
        bad += verify_lemma_irred_full(p, f, p - 1).failures;
    report(3, "irreducible enumeration counts p^f+1", bad == 0);
}

void criterion_4() {
    int64_t bad = 0;
    std::string first;
    for (int64_t f : {1, 2})
        for (int64_t e : {1, 2}) {
            SuiteReport rep = verify_prop_normalize(5, f, e, suite_threads());
            bad += rep.failures;
            if (!rep.pass() && first.empty()) first = rep.messages.front();
        }
    report(4, "normalization soundness", bad == 0, first);
}

void criterion_5() {
    SuiteReport rep = verify_s0_integrality();
    report(5, "fibre exponent integrality", rep.pass() && rep.checked > 0);
}

SuiteReport frobenius_sweep() { return verify_frobenius_symmetry(200, 20240817); }

void criterion_6(const SuiteReport& rep) {
    bool closure_ok = true;
    for (const auto& m : rep.messages)
        if (m.find("closed") != std::string::npos) closure_ok = false;
    report(6, "weight sets closed under a -> q*a", rep.checked == 200 && closure_ok);
}

void criterion_7(const SuiteReport& rep) {
    bool det_ok = true;
    for (const auto& m : rep.messages)
        if (m.find("determinant") != std::string::npos) det_ok = false;
    report(7, "determinant identity on included type-I weights",
           rep.failures == 0 ? true : det_ok);
}

void criterion_8(const std::string& fixture_path) {
    std::ifstream in(fixture_path);
    if (!in) {
        report(8, "worked fixture", false, "cannot open " + fixture_path);
        return;
    }
    json fx = json::parse(in);
    TameCharCtx ctx(fx["p"].get<int64_t>(), fx["f"].get<int64_t>());
    int64_t e = fx["e"].get<int64_t>();
    TameChar chi(ctx, fx["chi_exp"].get<int64_t>());
    bool ok = true;
    std::string detail;

    auto check_witness = [&](const json& want, const std::optional<LiftWitness>& got,
                             const char* label) {
        if (!got) {
            ok = false;
            detail = std::string(label) + ": no witness";
            return;
        }
        json have = witness_to_json(*got);
        if (have["case"] != want["case"] || have["J"] != want["J"] || have["x"] != want["x"]) {
            ok = false;
            detail = std::string(label) + ": witness mismatch: " + have.dump();
        }
    };

    {
        const json& r = fx["reducible"];
        auto rep = LocalRepClass::reducible(e, TameChar(ctx, r["psi1_exp"].get<int64_t>()),
                                            TameChar(ctx, r["psi2_exp"].get<int64_t>()));
        PlaceData pd{"v", ctx, e, rep};
        auto weights = local_weight_set(pd);
        if (json(weights) != r["weights"]) {
            ok = false;
            detail = "reducible weight set mismatch: " + json(weights).dump();
        }
        check_witness(r["witness"],
                      reducible_lift_exists(rep, TameChar(ctx, r["witness_chi_exp"].get<int64_t>())),
                      "reducible");
        for (int64_t a : {1, 3})
            if (std::find(weights.begin(), weights.end(), a) == weights.end()) ok = false;
    }
    {
        const json& r = fx["irreducible"];
        auto rep = LocalRepClass::irreducible(e, TameChar(ctx, r["psi_exp"].get<int64_t>()));
        PlaceData pd{"v", ctx, e, rep};
        auto weights = local_weight_set(pd);
        if (json(weights) != r["weights"]) {
            ok = false;
            detail = "irreducible weight set mismatch: " + json(weights).dump();
        }
        check_witness(r["witness"],
                      irreducible_lift_exists(rep, TameChar(ctx, r["witness_chi_exp"].get<int64_t>())),
                      "irreducible");
        for (int64_t a : {1, 3})
            if (std::find(weights.begin(), weights.end(), a) == weights.end()) ok = false;
    }
    report(8, "worked fixture", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string fixture = argc > 1 ? argv[1] : "tests/fixtures/worked_fixture.json";
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        SuiteReport frob = frobenius_sweep();
        criterion_6(frob);
        criterion_7(frob);
        criterion_8(fixture);
    } catch (const std::exception& ex) {
        std::cout << "unexpected error: " << ex.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
