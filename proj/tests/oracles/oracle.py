"""Independent reference values for the C++ tests.

Kernels are re-encoded here from the printed formulas with Python fractions,
sympy and mpmath; nothing is shared with the C++ parser or evaluator.
Run: python3 oracle.py > frozen.json
"""
import json
from fractions import Fraction as Fr

import mpmath as mp
import sympy as sp


def poch(a, n):
    p = Fr(1) if not isinstance(a, sp.Basic) else sp.Integer(1)
    for i in range(n):
        p *= a + i
    return p


def kpow(base, e):
    return Fr(base) ** e


WL = lambda n, k: poch(Fr(-k), n) * poch(Fr(1, 2), n) ** 2 / (poch(Fr(1, 2) - k, n) ** 2 * poch(Fr(1), n))
WR = lambda n, k: poch(Fr(-k), n) * poch(Fr(-k, 2), n) * poch(Fr(1, 2) - Fr(k, 2), n) / (
    poch(Fr(1, 2) - k, n) ** 2 * poch(Fr(1), n))
BL = lambda n, k: poch(Fr(-3 * k), n) * poch(Fr(1, 3) - k, n) * poch(Fr(1, 6) - 2 * k, n) / (
    poch(Fr(2, 3) - 2 * k, n) * poch(Fr(1, 3) - 4 * k, n) * poch(Fr(1), n))
BR = lambda n, k: poch(Fr(-k), n) * poch(Fr(1, 3) - k, n) * poch(Fr(2, 3) - k, n) / (
    poch(Fr(5, 6) - k, n) * poch(Fr(2, 3) - 2 * k, n) * poch(Fr(1), n))

TASKS = {
    "example-1": (lambda n, k: 3 * kpow(Fr(64, 63), k) * WL(n, k) * Fr(1, 64) ** n * (42 * n + 5),
                  lambda n, k: WR(n, k) * (-1) ** n * Fr(16, 63) ** (2 * n) * (130 * n - 2 * k + 15), 1),
    "example-2": (lambda n, k: 11 * kpow(Fr(32, 33), 3 * k) * BL(n, k) * Fr(-1, 8) ** n * (6 * n + 1),
                  lambda n, k: BR(n, k) * Fr(2, 11) ** (3 * n) * (126 * n + 6 * k + 11), 3),
    "example-3": (lambda n, k: 5 * poch(Fr(-3 * k), n) * poch(Fr(2, 3) + k, n) * poch(Fr(1, 3) - k, n)
                  / (poch(Fr(5, 6) - k, n) * poch(Fr(2, 3) - 2 * k, n) * poch(Fr(1), n)) * Fr(1, 64) ** n * (42 * n + 5),
                  lambda n, k: kpow(Fr(15, 16), 3 * k) * BR(n, k) * Fr(-64, 125) ** n * (252 * n - 42 * k + 25), 3),
    "7-1": (lambda n, k: 3 * kpow(Fr(8, 9), k) * WL(n, k) * Fr(-1, 8) ** n * (6 * n + 1),
            lambda n, k: WR(n, k) * Fr(32, 81) ** n * (14 * n + 2 * k + 3), 1),
    "28-3": (lambda n, k: 5 * kpow(Fr(4, 5), 3 * k) * BL(n, k) * (-1) ** n * (4 * n + 1),
             lambda n, k: BR(n, k) * Fr(3, 5) ** (3 * n) * (28 * n + 12 * k + 5), 3),
    "11-1": (lambda n, k: 5 * kpow(Fr(16, 15), 3 * k) * BL(n, k) * Fr(1, 4) ** n * (6 * n + 1),
             lambda n, k: BR(n, k) * Fr(4, 125) ** n * (66 * n - 6 * k + 5), 3),
    "133-8": (lambda n, k: 85 * kpow(Fr(256, 255), 3 * k) * BL(n, k) * Fr(1, 64) ** n * (42 * n + 5),
              lambda n, k: BR(n, k) * Fr(4, 85) ** (3 * n) * (7182 * n - 42 * k + 425), 3),
}


def tsum(f, k, span):
    # (-k)_n or (-3k)_n vanishes past n = span*k; poles never occur on the support.
    return sum((f(n, k) for n in range(span * k + 1)), Fr(0))


def frac(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


out = {"pochhammer": {}, "tasks": {}, "series": {}, "carlson": {}, "z_identities": {}, "points": {}}

for a, n in [(Fr(1, 2), 0), (Fr(1, 2), 2), (Fr(-3), 5), (Fr(-5, 3), 7), (Fr(7, 4), 6)]:
    out["pochhammer"][f"{frac(a)},{n}"] = frac(poch(a, n))

for tid, (A, B, span) in TASKS.items():
    r = [tsum(A, k, span) for k in range(0, 12)]
    s = [tsum(B, k, span) for k in range(0, 12)]
    assert r == s, tid
    out["tasks"][tid] = [frac(x) for x in r]

out["points"]["A1(0,0)"] = frac(TASKS["example-1"][0](0, 0))
out["points"]["A1(1,1)"] = frac(TASKS["example-1"][0](1, 1))
out["points"]["B1(1,1)"] = frac(TASKS["example-1"][1](1, 1))
out["points"]["A1(1,2)"] = frac(TASKS["example-1"][0](1, 2))
out["points"]["B1(2,3)"] = frac(TASKS["example-1"][1](2, 3))

# Series values with mpmath at 80 digits.
mp.mp.dps = 80
q = lambda x: mp.mpf(x.numerator) / x.denominator
rf = mp.rf


def series(coef, digits=80):
    return mp.nsum(coef, [0, mp.inf])


SER = {
    "65-8": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 4, n) * rf(mp.mpf(3) / 4, n) / rf(1, n) ** 3 * (-1) ** n
             * (mp.mpf(16) / 63) ** (2 * n) * (65 * n + 8), 9 * mp.sqrt(7) / mp.pi),
    "126-10": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 6, n) * rf(mp.mpf(5) / 6, n) / rf(1, n) ** 3
               * (mp.mpf(2) / 11) ** (3 * n) * (126 * n + 10), 11 * mp.sqrt(33) / (2 * mp.pi)),
    "63-8": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 6, n) * rf(mp.mpf(5) / 6, n) / rf(1, n) ** 3
             * (mp.mpf(-4) / 5) ** (3 * n) * (63 * n + 8), 5 * mp.sqrt(15) / mp.pi),
    "7-1": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 4, n) * rf(mp.mpf(3) / 4, n) / rf(1, n) ** 3
            * (mp.mpf(32) / 81) ** n * (7 * n + 1), 9 / (2 * mp.pi)),
    "28-3": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 6, n) * rf(mp.mpf(5) / 6, n) / rf(1, n) ** 3
             * (mp.mpf(3) / 5) ** (3 * n) * (28 * n + 3), 5 * mp.sqrt(5) / mp.pi),
    "11-1": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 6, n) * rf(mp.mpf(5) / 6, n) / rf(1, n) ** 3
             * (mp.mpf(4) / 125) ** n * (11 * n + 1), 5 * mp.sqrt(15) / (6 * mp.pi)),
    "133-8": (lambda n: rf(0.5, n) * rf(mp.mpf(1) / 6, n) * rf(mp.mpf(5) / 6, n) / rf(1, n) ** 3
              * (mp.mpf(4) / 85) ** (3 * n) * (133 * n + 8), 85 * mp.sqrt(255) / (54 * mp.pi)),
    "anchor": (lambda n: rf(0.5, n) ** 3 / rf(1, n) ** 3 * (mp.mpf(1) / 64) ** n * (42 * n + 5), 16 / mp.pi),
}
for sid, (c, closed) in SER.items():
    v = series(c)
    assert abs(v - closed) < mp.mpf(10) ** -70, sid
    out["series"][sid] = mp.nstr(v, 75)
out["pi"] = mp.nstr(mp.pi, 75)

# Analytic continuation of both sides of Example 1 and 2 at non-integer k.
def mk(A):
    return lambda n, k: A(n, k)


def WLm(n, k):
    return rf(-k, n) * rf(0.5, n) ** 2 / (rf(0.5 - k, n) ** 2 * rf(1, n))


def WRm(n, k):
    return rf(-k, n) * rf(-k / 2, n) * rf(0.5 - k / 2, n) / (rf(0.5 - k, n) ** 2 * rf(1, n))


def BLm(n, k):
    return rf(-3 * k, n) * rf(mp.mpf(1) / 3 - k, n) * rf(mp.mpf(1) / 6 - 2 * k, n) / (
        rf(mp.mpf(2) / 3 - 2 * k, n) * rf(mp.mpf(1) / 3 - 4 * k, n) * rf(1, n))


def BRm(n, k):
    return rf(-k, n) * rf(mp.mpf(1) / 3 - k, n) * rf(mp.mpf(2) / 3 - k, n) / (
        rf(mp.mpf(5) / 6 - k, n) * rf(mp.mpf(2) / 3 - 2 * k, n) * rf(1, n))


for kk in ["1/4", "-1/4", "2/7"]:
    k = q(Fr(kk))
    a1 = mp.nsum(lambda n: 3 * (mp.mpf(64) / 63) ** k * WLm(n, k) * (mp.mpf(1) / 64) ** n * (42 * n + 5), [0, mp.inf])
    b1 = mp.nsum(lambda n: WRm(n, k) * (-1) ** n * (mp.mpf(16) / 63) ** (2 * n) * (130 * n - 2 * k + 15), [0, mp.inf])
    a2 = mp.nsum(lambda n: 11 * (mp.mpf(32) / 33) ** (3 * k) * BLm(n, k) * (mp.mpf(-1) / 8) ** n * (6 * n + 1), [0, mp.inf])
    b2 = mp.nsum(lambda n: BRm(n, k) * (mp.mpf(2) / 11) ** (3 * n) * (126 * n + 6 * k + 11), [0, mp.inf])
    assert abs(a1 - b1) < mp.mpf(10) ** -65 and abs(a2 - b2) < mp.mpf(10) ** -65
    out["carlson"][kk] = {"example-1": mp.nstr(a1, 70), "example-2": mp.nstr(a2, 70)}

# z identities: exact rational functions in z, sampled at rational points.
z = sp.symbols("z")
R = sp.Rational


def spoch(a, n):
    p = sp.Integer(1)
    for i in range(n):
        p *= a + i
    return p


def whipple(k):
    l = sum(spoch(-k, n) * spoch(R(1, 2), n) ** 2 / (spoch(R(1, 2) - k, n) ** 2 * spoch(1, n)) * z ** n
            for n in range(k + 1))
    r = (1 - z) ** k * sum(spoch(-k, n) * spoch(R(-k, 2), n) * spoch(R(1, 2) - R(k, 2), n)
                           / (spoch(R(1, 2) - k, n) ** 2 * spoch(1, n)) * (-4 * z / (1 - z) ** 2) ** n
                           for n in range(k + 1))
    return l, r


def bailey(k):
    l = sum(spoch(-3 * k, n) * spoch(R(1, 3) - k, n) * spoch(R(1, 6) - 2 * k, n)
            / (spoch(R(2, 3) - 2 * k, n) * spoch(R(1, 3) - 4 * k, n) * spoch(1, n)) * z ** n for n in range(3 * k + 1))
    r = (1 - z / 4) ** (3 * k) * sum(spoch(-k, n) * spoch(R(1, 3) - k, n) * spoch(R(2, 3) - k, n)
                                     / (spoch(R(5, 6) - k, n) * spoch(R(2, 3) - 2 * k, n) * spoch(1, n))
                                     * (27 * z ** 2 / (4 - z) ** 3) ** n for n in range(k + 1))
    return l, r


points = [R(1, 3), R(-2, 5), R(7, 2)]
for name, f in [("whipple", whipple), ("bailey", bailey)]:
    vals = {}
    for k in range(0, 7):
        l, r = f(k)
        assert sp.cancel(l - r) == 0, (name, k)
        vals[str(k)] = [str(sp.nsimplify(l.subs(z, p))) for p in points]
    out["z_identities"][name] = {"points": [str(p) for p in points], "values": vals}
    if name == "whipple":
        out["z_identities"][name]["k1"] = str(sp.factor(sp.cancel(f(1)[0])))
    # the printed Bailey prefactor 2*(4-z)^(3k) fails already at k = 0
    if name == "bailey":
        l0, r0 = f(0)
        out["z_identities"][name]["printed_prefactor_k0"] = [str(l0), str(2 * (4 - z) ** 0 * r0)]

print(json.dumps(out, indent=1, sort_keys=True))
