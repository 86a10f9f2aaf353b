#pragma once

#include "weights/breuil.hpp"
#include "weights/lift_existence.hpp"
#include "weights/weight_combinatorics.hpp"
#include "weights/weight_sets.hpp"

#include <json.hpp>

#include <string>

namespace serre {

/// Input-schema violation, carrying a JSON-pointer path to the offending
/// location.
class SchemaError : public std::runtime_error {
  public:
    SchemaError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

  private:
    std::string pointer_;
};

int64_t get_int(const nlohmann::json& j, const std::string& ptr);
std::vector<int64_t> get_int_array(const nlohmann::json& j, const std::string& ptr);
std::string get_string(const nlohmann::json& j, const std::string& ptr);

// schemas: {p, f, e, chi_exp, J: [indices], x: [ints]}
WeightDatum weight_datum_from_json(const nlohmann::json& j);
nlohmann::json weight_datum_to_json(const WeightDatum& d);

// {p, d, f, eKL, eprime, r, k, c} with c a coefficient list over F_{p^f}
Rank1BreuilDD rank1_from_json(const nlohmann::json& j);
nlohmann::json rank1_to_json(const Rank1BreuilDD& m);
nlohmann::json generic_fibre_to_json(const GenericFibre& g);

// {kind, psi1_exp, psi2_exp | psi_exp} relative to a surrounding
// {p, f, e, ...} object
LocalRepClass rep_from_json(const nlohmann::json& j, const std::string& ptr,
                            const TameCharCtx& ctx, int64_t e);

nlohmann::json witness_to_json(const LiftWitness& w);

PlaceData place_from_json(const nlohmann::json& j, const std::string& ptr);

}  // namespace serre
