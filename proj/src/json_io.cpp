#include "weights/json_io.hpp"

namespace serre {

namespace {

const nlohmann::json& at(const nlohmann::json& j, const std::string& ptr) {
    const nlohmann::json* cur = &j;
    try {
        cur = &j.at(nlohmann::json::json_pointer(ptr));
    } catch (const nlohmann::json::exception&) {
        throw SchemaError(ptr, "missing");
    }
    return *cur;
}

}  // namespace

int64_t get_int(const nlohmann::json& j, const std::string& ptr) {
    const nlohmann::json& v = at(j, ptr);
    if (!v.is_number_integer()) throw SchemaError(ptr, "expected an integer");
    return v.get<int64_t>();
}

std::vector<int64_t> get_int_array(const nlohmann::json& j, const std::string& ptr) {
    const nlohmann::json& v = at(j, ptr);
    if (!v.is_array()) throw SchemaError(ptr, "expected an array");
    std::vector<int64_t> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            throw SchemaError(ptr + "/" + std::to_string(i), "expected an integer");
        out.push_back(v[i].get<int64_t>());
    }
    return out;
}

std::string get_string(const nlohmann::json& j, const std::string& ptr) {
    const nlohmann::json& v = at(j, ptr);
    if (!v.is_string()) throw SchemaError(ptr, "expected a string");
    return v.get<std::string>();
}

WeightDatum weight_datum_from_json(const nlohmann::json& j) {
    int64_t p = get_int(j, "/p");
    int64_t f = get_int(j, "/f");
    int64_t e = get_int(j, "/e");
    int64_t chi_exp = get_int(j, "/chi_exp");
    TameCharCtx ctx(p, f);
    std::vector<int64_t> Jv = get_int_array(j, "/J");
    std::set<int64_t> J(Jv.begin(), Jv.end());
    for (int64_t i : J)
        if (i < 0 || i >= 2 * f) throw SchemaError("/J", "indices must lie in [0, 2f)");
    std::vector<int64_t> x = get_int_array(j, "/x");
    try {
        return WeightDatum(TameChar(ctx, chi_exp), J, x, e);
    } catch (const std::exception& ex) {
        throw SchemaError("", ex.what());
    }
}

nlohmann::json weight_datum_to_json(const WeightDatum& d) {
    return {{"p", d.ctx.p},
            {"f", d.ctx.f},
            {"e", d.e},
            {"chi_exp", d.chi.exp},
            {"J", std::vector<int64_t>(d.J.begin(), d.J.end())},
            {"x", d.x}};
}

Rank1BreuilDD rank1_from_json(const nlohmann::json& j) {
    int64_t p = get_int(j, "/p");
    int64_t d = get_int(j, "/d");
    int64_t f = get_int(j, "/f");
    int64_t eKL = get_int(j, "/eKL");
    int64_t eprime = get_int(j, "/eprime");
    Rank1BreuilDD m;
    try {
        m.setup = TameSetup(p, d, f, eKL, eprime);
    } catch (const std::exception& ex) {
        throw SchemaError("", ex.what());
    }
    m.r = get_int_array(j, "/r");
    m.k = get_int_array(j, "/k");
    std::vector<int64_t> c = get_int_array(j, "/c");
    auto field = FField::make_default(p, f);
    if (static_cast<int64_t>(c.size()) != f)
        throw SchemaError("/c", "expected f coefficients over the prime field");
    for (int64_t& v : c) v = mod_reduce(v, p);
    m.c = FFElem(field, c);
    return m;
}

nlohmann::json rank1_to_json(const Rank1BreuilDD& m) {
    return {{"p", m.setup.p},     {"d", m.setup.d},
            {"f", m.setup.f},     {"eKL", m.setup.eKL},
            {"eprime", m.setup.eprime}, {"r", m.r},
            {"k", m.k},           {"c", m.c.coeffs}};
}

nlohmann::json generic_fibre_to_json(const GenericFibre& g) {
    return {{"inertial",
             {{"p", g.inertial.ctx.p}, {"f", g.inertial.ctx.f}, {"exp", g.inertial.exp}}},
            {"lambda", g.lambda.coeffs},
            {"s0", g.s0}};
}

LocalRepClass rep_from_json(const nlohmann::json& j, const std::string& ptr,
                            const TameCharCtx& ctx, int64_t e) {
    std::string kind = get_string(j, ptr + "/kind");
    try {
        if (kind == "reducible") {
            TameChar psi1(ctx, get_int(j, ptr + "/psi1_exp"));
            TameChar psi2(ctx, get_int(j, ptr + "/psi2_exp"));
            return LocalRepClass::reducible(e, psi1, psi2);
        }
        if (kind == "irreducible") {
            TameChar psi(ctx, get_int(j, ptr + "/psi_exp"));
            return LocalRepClass::irreducible(e, psi);
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& ex) {
        throw SchemaError(ptr, ex.what());
    }
    throw SchemaError(ptr + "/kind", "expected \"reducible\" or \"irreducible\"");
}

nlohmann::json witness_to_json(const LiftWitness& w) {
    nlohmann::json out;
    switch (w.case_tag) {
        case LiftWitness::Case::i: out["case"] = "i"; break;
        case LiftWitness::Case::ii: out["case"] = "ii"; break;
        case LiftWitness::Case::iii: out["case"] = "iii"; break;
    }
    if (w.case_tag != LiftWitness::Case::i) {
        out["J"] = std::vector<int64_t>(w.J.begin(), w.J.end());
        out["x"] = w.x;
    }
    return out;
}

PlaceData place_from_json(const nlohmann::json& j, const std::string& ptr) {
    PlaceData pd;
    pd.label = get_string(j, ptr + "/label");
    int64_t p = get_int(j, ptr + "/p");
    int64_t f = get_int(j, ptr + "/f");
    pd.e = get_int(j, ptr + "/e");
    try {
        pd.ctx = TameCharCtx(p, f);
    } catch (const std::exception& ex) {
        throw SchemaError(ptr, ex.what());
    }
    pd.rep = rep_from_json(j, ptr + "/rep", pd.ctx, pd.e);
    return pd;
}

}  // namespace serre
