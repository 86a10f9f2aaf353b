#!/usr/bin/env python3
"""Brute-force generator for the worked fixture at p=3, f=1, e=1.

Independent of the C++ library: everything is recomputed from scratch with
plain integer arithmetic, so the committed JSON can serve as an oracle.
"""

import json
import sys

P, F, E = 3, 1, 1
N = 2 * F
MOD = P ** (2 * F) - 1  # 8
Q = P ** F


def eta_exp(i):
    return pow(P, (2 * F - i) % (2 * F), MOD)


def digits(a):
    d = []
    v = a
    for _ in range(N):
        d.append(v % P)
        v //= P
    c = [0] * N
    c[0] = d[0]
    for i in range(1, N):
        c[i] = d[N - i]
    return c


def valid_chi(a):
    return a % MOD != 0 and (a * Q - a) % MOD != 0


def allowable(c, J, x):
    for i in range(N):
        lo, hi = True, True  # x_i != 0 allowed, x_i != e allowed
        nxt = (i + 1) % N
        in_i, in_n = i in J, nxt in J
        if in_i == in_n:
            pass
        else:
            j = 1
            while c[(i + j) % N] == c[(i + j + F) % N]:
                j += 1
            less = c[(i + j) % N] < c[(i + j + F) % N]
            if in_i and not in_n:
                forbid_e = less
            else:
                forbid_e = not less
            if forbid_e and x[i] == E:
                return False
            if not forbid_e and x[i] == 0:
                return False
    return True


def psi_exp(c, J, x):
    s = 0
    for i in range(N):
        ci = c[i] if i in J else c[(i + F) % N]
        s += eta_exp(i) * (ci + x[i])
    return s % MOD


def eps_exp():
    return sum((eta_exp(i) + eta_exp(i + F)) * E for i in range(F)) % MOD


def one_of_each_pair_subsets():
    out = []
    for mask in range(1 << N):
        if all(((mask >> i) & 1) != ((mask >> (i + F)) & 1) for i in range(F)):
            out.append({i for i in range(N) if (mask >> i) & 1})
    return out


def symmetric_subsets():
    out = []
    for mask in range(1 << N):
        if all(((mask >> i) & 1) == ((mask >> (i + F)) & 1) for i in range(F)):
            out.append({i for i in range(N) if (mask >> i) & 1})
    return out


def tuples(length):
    out = [[]]
    for _ in range(length):
        out = [t + [v] for t in out for v in range(E + 1)]
    return out


def reducible_witness(chi_exp, psi1, psi2):
    c = digits(chi_exp)
    for target in (psi1, psi2):
        for J in one_of_each_pair_subsets():
            for xf in tuples(F):
                x = xf + xf
                if not allowable(c, J, x):
                    continue
                if psi_exp(c, J, x) == target % MOD:
                    return {"case": "ii", "J": sorted(J), "x": xf}
    return None


def irreducible_witness(chi_exp, psi):
    c = digits(chi_exp)
    for target in (psi % MOD, psi * Q % MOD):
        for J in symmetric_subsets():
            for xf in tuples(F):
                x = xf + [E - v for v in xf]
                if not allowable(c, J, x):
                    continue
                if psi_exp(c, J, x) == target:
                    return {"case": "iii", "J": sorted(J), "x": x}
    return None


def det_holds_red(chi_exp, psi1, psi2):
    return (psi1 + psi2 - eps_exp() - (Q + 1) * chi_exp) % MOD == 0


def det_holds_irr(chi_exp, psi):
    return ((Q + 1) * psi - eps_exp() - (Q + 1) * chi_exp) % MOD == 0


def local_set_reducible(psi1, psi2):
    out = []
    for a in range(MOD):
        if a % (Q + 1) == 0:
            if sorted([psi1, psi2]) == sorted([(a + eps_exp()) % MOD, a]):
                out.append(a)
        else:
            if not valid_chi(a):
                continue
            if not det_holds_red(a, psi1, psi2):
                continue
            if E >= P - 1 or reducible_witness(a, psi1, psi2) is not None:
                out.append(a)
    return out


def local_set_irreducible(psi):
    out = []
    for a in range(MOD):
        if a % (Q + 1) == 0:
            continue
        if not valid_chi(a):
            continue
        if not det_holds_irr(a, psi):
            continue
        if E >= P - 1 or irreducible_witness(a, psi) is not None:
            out.append(a)
    return out


def main():
    chi = 1
    psi1 = psi2 = 4  # omega_0 twice
    psi_irr = 2
    fixture = {
        "p": P,
        "f": F,
        "e": E,
        "chi_exp": chi,
        "reducible": {
            "psi1_exp": psi1,
            "psi2_exp": psi2,
            "weights": local_set_reducible(psi1, psi2),
            "witness_chi_exp": chi,
            "witness": reducible_witness(chi, psi1, psi2),
        },
        "irreducible": {
            "psi_exp": psi_irr,
            "weights": local_set_irreducible(psi_irr),
            "witness_chi_exp": chi,
            "witness": irreducible_witness(chi, psi_irr),
        },
    }
    out = sys.argv[1] if len(sys.argv) > 1 else "worked_fixture.json"
    with open(out, "w") as fh:
        json.dump(fixture, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
