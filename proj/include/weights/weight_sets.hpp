#pragma once

#include "weights/lift_existence.hpp"

#include <string>
#include <vector>

namespace serre {

/// A weight at a place v: an irreducible mod-p character of the unit
/// group, i.e. a character of k_{2,v}^x, encoded by its exponent.
struct WeightChar {
    TameCharCtx ctx;
    int64_t a = 0;  // exponent mod q^2 - 1
};

enum class WeightType { I, II };

/// Type II iff the character factors through the norm to k_v^x,
/// i.e. (q+1) | a.
WeightType weight_type(const WeightChar& w);

struct PlaceData {
    std::string label;
    TameCharCtx ctx;
    int64_t e = 0;
    LocalRepClass rep;
};

/// The local conjectural weight set: sweeps all q^2-1 exponents, deciding
/// type-I candidates through the lift-existence criteria and type-II
/// candidates through the inertial-pair match {sigma*eps, sigma}.
/// Returns sorted exponents.
std::vector<int64_t> local_weight_set(const PlaceData& pd);

/// Cartesian product of the local sets, lexicographically sorted.
/// max_tuples < 0 means unbounded.
std::vector<std::vector<int64_t>> global_weight_set(const std::vector<PlaceData>& places,
                                                    int64_t max_tuples = -1);

}  // namespace serre
