"""Independent brute-force oracles for frozen test values (Fractions only)."""
from fractions import Fraction as F
from math import gcd, isqrt


def brute_mu(q_dens, c_dens, limit=10**6):
    for mu in range(1, limit):
        if all(mu**3 % d == 0 for d in q_dens) and all(mu**5 % d == 0 for d in c_dens):
            return mu


def is_sq_int(n):
    if n < 0:
        return False
    k = 0
    while k * k < n:
        k += 1
    return k * k == n


def search(coeffs, H):
    out = []
    for q in range(1, H + 1):
        for p in range(-H, H + 1):
            if gcd(abs(p), q) != 1:
                continue
            t = F(p, q)
            val = sum(c * t**k for k, c in enumerate(reversed(coeffs)))
            if val >= 0 and is_sq_int(val.numerator) and is_sq_int(val.denominator):
                out.append((t, F(isqrt(val.numerator), isqrt(val.denominator))))
    return out


def disc(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def add(E, P, Q):
    a1, a2, a3, a4, a6 = E
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
        return None
    if x1 == x2:
        l = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        l = (y2 - y1) / (x2 - x1)
    nu = y1 - l * x1
    x3 = l * l + a1 * l - a2 - x1 - x2
    return (x3, -(l + a1) * x3 - nu - a3)


print("mu([47],[2209]) =", brute_mu([47], [2209]))
print("mu([7]*4,[49,49,7,7]) =", brute_mu([7] * 4, [49, 49, 7, 7]))
print("search 2t^4+3t^2+4 H=2:", search([2, 0, 3, 0, 4], 2))
print("search t^4/3-t^2/3 H=3:", search([F(1, 3), 0, F(-1, 3), 0, 0], 3))
print("search three-term quartic H=10:", search([F(17, 3), 0, F(5, 3), 0, F(5, 3)], 10))
print("disc completed three-term cubic:", disc(0, F(107, 3), 0, F(1156, 3), F(3536, 3)))
print("disc y^2=x^3-x:", disc(0, 0, 0, -1, 0))
E = (0, 0, 0, 0, 1)
P = (F(2), F(3))
R, n = P, 1
while R is not None:
    R = add(E, R, P)
    n += 1
print("order of (2,3) on y^2=x^3+1:", n)
# Preimages on the long cubic of the completed-square generators.
for name, (x, m) in {"G1": (F(-44, 3), F(20, 3)), "G2": (F(-152, 9), F(140, 27))}.items():
    print(name, "on long cubic:", (x, m - F(13, 3) * x - 68))
