#pragma once

#include "weights/char_lattice.hpp"

#include <optional>
#include <set>
#include <vector>

namespace serre {

/// A semisimple local mod-p representation up to inertial data: either a
/// pair of niveau-f characters or an irreducible one given by a single
/// character psi with psi != psi^q (the pair being {psi, psi^q}).
struct LocalRepClass {
    enum class Kind { Reducible, Irreducible };

    TameCharCtx ctx;
    int64_t e = 0;  // absolute ramification index
    Kind kind = Kind::Reducible;
    TameChar psi1, psi2;  // Reducible
    TameChar psi;         // Irreducible

    static LocalRepClass reducible(int64_t e, TameChar psi1, TameChar psi2);
    static LocalRepClass irreducible(int64_t e, TameChar psi);
};

struct LiftWitness {
    enum class Case { i, ii, iii };
    Case case_tag = Case::i;
    std::set<int64_t> J;
    std::vector<int64_t> x;
};

/// det(rho)|_I == eps * chi^{q+1}, a necessary condition for a lift of
/// type chi + chi^q to exist.
bool det_condition(const LocalRepClass& rep, const TameChar& chi);

/// Existence of a parallel potentially Barsotti-Tate lift of type
/// chi + chi^q for a decomposable rep.  Returns the case-(i) tag at once
/// when e >= p-1 and the determinant matches; otherwise searches J with
/// exactly one of i, i+f and f-periodic allowable x, testing psi1 first
/// and then psi2.
std::optional<LiftWitness> reducible_lift_exists(const LocalRepClass& rep, const TameChar& chi);

/// Same decision for an irreducible rep: symmetric J and allowable x with
/// x_i + x_{i+f} = e, tested against psi and psi^q.  Cross-checks the
/// equivalent relaxed search (0 <= x_i <= e plus the determinant match).
std::optional<LiftWitness> irreducible_lift_exists(const LocalRepClass& rep, const TameChar& chi);

enum class LiftVariant { Reducible, Irreducible };

/// All characters reachable by the relevant witness formula for the given
/// chi and e, sorted ascending by exponent.
std::vector<TameChar> enumerate_lift_psis(const TameChar& chi, int64_t e, LiftVariant variant);

/// The brute-force searches behind the two decisions, without the
/// e >= p-1 shortcut.  Exposed so the shortcut can be checked against
/// them directly.
std::optional<LiftWitness> search_reducible_witness(const LocalRepClass& rep, const TameChar& chi);
std::optional<LiftWitness> search_irreducible_witness(const LocalRepClass& rep,
                                                      const TameChar& chi);

}  // namespace serre
