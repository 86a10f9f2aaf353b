// Command-line front end: JSON in, JSON out, plus the property-suite
// runner.  Exit codes: 0 success, 1 input error, 2 suite failure.

#include "weights/json_io.hpp"
#include "weights/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace serre;

bool verbose() {
    const char* v = std::getenv("SERRE_WEIGHTS_LOG");
    return v != nullptr && *v != '\0';
}

json read_input(const std::string& path, const std::string& inline_json) {
    std::string text;
    if (!inline_json.empty()) {
        text = inline_json;
    } else if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("", "cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw SchemaError("", std::string("malformed JSON: ") + ex.what());
    }
}

void write_output(const json& out, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream os(path);
        if (!os) throw SchemaError("", "cannot open output file: " + path);
        os << out.dump(2) << "\n";
    }
}

json run_psi(const json& in) {
    WeightDatum d = weight_datum_from_json(in);
    json out;
    out["allowable"] = is_allowable(d);
    out["r"] = r_from_jx(d);
    if (is_allowable(d)) {
        out["psi_exp"] = psi_closed_form(d).exp;
        out["psi_oracle_exp"] = psi_via_breuil(d).exp;
    }
    return out;
}

json run_normalize(const json& in) {
    WeightDatum d = weight_datum_from_json(in);
    WeightDatum nd = normalize_to_symmetric(d);
    json out = weight_datum_to_json(nd);
    out["psi_exp"] = psi_closed_form(nd).exp;
    return out;
}

json run_check_lift(const json& in) {
    int64_t p = get_int(in, "/p");
    int64_t f = get_int(in, "/f");
    int64_t e = get_int(in, "/e");
    int64_t chi_exp = get_int(in, "/chi_exp");
    TameCharCtx ctx(p, f);
    LocalRepClass rep = rep_from_json(in, "/rep", ctx, e);
    TameChar chi(ctx, chi_exp);
    std::optional<LiftWitness> w = rep.kind == LocalRepClass::Kind::Reducible
                                       ? reducible_lift_exists(rep, chi)
                                       : irreducible_lift_exists(rep, chi);
    json out;
    out["exists"] = w.has_value();
    if (w) {
        json ww = witness_to_json(*w);
        out["case"] = ww["case"];
        ww.erase("case");
        out["witness"] = ww;
    }
    return out;
}

json run_weights(const json& in, int64_t max_tuples) {
    if (!in.contains("places") || !in["places"].is_array() || in["places"].empty())
        throw SchemaError("/places", "expected a nonempty array");
    const json& pl = in["places"];
    std::vector<PlaceData> places;
    for (size_t i = 0; i < pl.size(); ++i)
        places.push_back(place_from_json(in, "/places/" + std::to_string(i)));

    json local = json::object();
    int64_t global_size = 1;
    for (const auto& pd : places) {
        std::vector<int64_t> set = local_weight_set(pd);
        global_size *= static_cast<int64_t>(set.size());
        local[pd.label] = set;
    }
    json out;
    out["local"] = local;
    out["global_size"] = global_size;
    if (max_tuples >= 0) out["global"] = global_weight_set(places, max_tuples);
    return out;
}

json run_breuil_validate(const json& in) {
    Rank1BreuilDD m = rank1_from_json(in);
    ViolationReport rep = validate_rank1(m);
    return {{"ok", rep.ok()}, {"violations", rep.violations}};
}

json run_breuil_fibre(const json& in) {
    Rank1BreuilDD m = rank1_from_json(in);
    return generic_fibre_to_json(generic_fibre(m));
}

json report_to_json(const SuiteReport& rep) {
    return {{"suite", rep.name},
            {"checked", rep.checked},
            {"failures", rep.failures},
            {"messages", rep.messages},
            {"pass", rep.pass()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjectural Serre weight sets for quaternionic forms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input, inline_json, output;
    int parallel = 1;
    int64_t max_tuples = -1;
    uint64_t seed = 0;
    app.add_option("--input,-i", input, "input JSON file ('-' for stdin)");
    app.add_option("--json", inline_json, "inline input JSON");
    app.add_option("--output,-o", output, "output file (default stdout)");
    app.add_option("--parallel", parallel, "worker threads for sweeps");
    app.add_option("--max-tuples", max_tuples, "cap on emitted global weight tuples");
    app.add_option("--seed", seed, "seed for randomized suites");

    auto* cmd_psi = app.add_subcommand("psi", "closed-form character and its oracle");
    auto* cmd_norm = app.add_subcommand("normalize", "rewrite a datum into symmetric form");
    auto* cmd_lift = app.add_subcommand("check-lift", "decide lift existence");
    auto* cmd_weights = app.add_subcommand("weights", "local and global weight sets");
    auto* cmd_breuil = app.add_subcommand("breuil", "rank-one classification data");
    auto* cmd_validate = cmd_breuil->add_subcommand("validate", "check the classification axioms");
    auto* cmd_fibre = cmd_breuil->add_subcommand("fibre", "generic-fibre character");
    cmd_breuil->require_subcommand(1);

    auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    int64_t vp = 3, vf = 1, ve = 1, count = 200;
    cmd_verify
        ->add_option("suite", suite, "one of: lemma-psi, prop-niveau-one, lemma-irred-full, "
                                     "prop-normalize, s0-integrality, frobenius-symmetry")
        ->required();
    cmd_verify->add_option("--p", vp, "prime");
    cmd_verify->add_option("--f", vf, "residue degree");
    cmd_verify->add_option("--e", ve, "ramification index");
    cmd_verify->add_option("--count", count, "trials for randomized suites");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (cmd_verify->parsed()) {
            if (verbose()) std::cerr << "running suite " << suite << "\n";
            SuiteReport rep;
            if (suite == "lemma-psi")
                rep = verify_lemma_psi(vp, vf, ve, parallel);
            else if (suite == "prop-niveau-one")
                rep = verify_prop_niveau_one(vp, vf, ve);
            else if (suite == "lemma-irred-full")
                rep = verify_lemma_irred_full(vp, vf, ve);
            else if (suite == "prop-normalize")
                rep = verify_prop_normalize(vp, vf, ve, parallel);
            else if (suite == "s0-integrality")
                rep = verify_s0_integrality();
            else if (suite == "frobenius-symmetry")
                rep = verify_frobenius_symmetry(count, seed);
            else
                throw SchemaError("", "unknown suite: " + suite);
            write_output(report_to_json(rep), output);
            return rep.pass() ? 0 : 2;
        }

        json in;
        if (cmd_psi->parsed())
            out = run_psi(read_input(input, inline_json));
        else if (cmd_norm->parsed())
            out = run_normalize(read_input(input, inline_json));
        else if (cmd_lift->parsed())
            out = run_check_lift(read_input(input, inline_json));
        else if (cmd_weights->parsed())
            out = run_weights(read_input(input, inline_json), max_tuples);
        else if (cmd_validate->parsed())
            out = run_breuil_validate(read_input(input, inline_json));
        else if (cmd_fibre->parsed())
            out = run_breuil_fibre(read_input(input, inline_json));
        write_output(out, output);
        return 0;
    } catch (const SchemaError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
