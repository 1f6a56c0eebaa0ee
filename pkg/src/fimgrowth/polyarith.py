"""Dense univariate polynomials over Z, Q and F_l.

Polynomials are lists of coefficients in ascending degree order with no
trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction


def trim(f: list) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list) -> int:
    return len(f) - 1 if f else -1


def add(f: list, g: list) -> list:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def scale(f: list, c) -> list:
    return trim([c * a for a in f])


def mul(f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def power(f: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = mul(out, f)
    return out


def evaluate(f: list, x):
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def derivative(f: list) -> list:
    return trim([i * a for i, a in enumerate(f)][1:])


def divmod_q(f: list, g: list) -> tuple[list, list]:
    """Exact division with remainder over Q."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in trim(f)]
    q = [Fraction(0)] * max(len(r) - len(g) + 1, 0)
    lead = Fraction(g[-1])
    while r and len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] / lead
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(q), r


# ---------------------------------------------------------------------------
# F_l[x]
# ---------------------------------------------------------------------------


def reduce_mod(f: list, ell: int) -> list:
    return trim([a % ell for a in f])


def _monic(f: list, ell: int) -> list:
    inv = pow(f[-1], -1, ell)
    return [a * inv % ell for a in f]


def rem_mod(f: list, g: list, ell: int) -> list:
    r = list(f)
    inv = pow(g[-1], -1, ell)
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv % ell
        shift = len(r) - 1 - dg
        if c:
            for i, b in enumerate(g):
                r[shift + i] = (r[shift + i] - c * b) % ell
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def divexact_mod(f: list, g: list, ell: int) -> list:
    r = list(f)
    inv = pow(g[-1], -1, ell)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for shift in range(len(f) - 1 - dg, -1, -1):
        c = r[shift + dg] * inv % ell
        q[shift] = c
        if c:
            for i, b in enumerate(g):
                r[shift + i] = (r[shift + i] - c * b) % ell
    assert not trim(r), "inexact division mod l"
    return trim(q)


def gcd_mod(f: list, g: list, ell: int) -> list:
    a, b = trim(f), trim(g)
    while b:
        a, b = b, rem_mod(a, b, ell)
    return _monic(a, ell) if a else a


def mulmod_mod(f: list, g: list, m: list, ell: int) -> list:
    return rem_mod(reduce_mod(mul(f, g), ell), m, ell)


def powmod_mod(f: list, e: int, m: list, ell: int) -> list:
    result = [1]
    base = rem_mod(reduce_mod(f, ell), m, ell)
    while e:
        if e & 1:
            result = mulmod_mod(result, base, m, ell)
        base = mulmod_mod(base, base, m, ell)
        e >>= 1
    return result


def is_squarefree_mod(f: list, ell: int) -> bool:
    f = reduce_mod(f, ell)
    df = reduce_mod(derivative(f), ell)
    if not df:
        return False
    return degree(gcd_mod(f, df, ell)) == 0


def distinct_degree_pattern(f: list, ell: int) -> list[int]:
    """Degrees of the irreducible factors of a squarefree ``f`` mod ``ell`` (sorted).

    Distinct-degree factorisation: ``gcd(f, x^(l^d) - x)`` collects the
    factors of degree dividing ``d``.  Frobenius is applied as a linear map
    precomputed from ``x^(i l) mod f``.
    """
    f = _monic(reduce_mod(f, ell), ell)
    n = degree(f)
    if n <= 1:
        return [n] if n == 1 else []
    xl = powmod_mod([0, 1], ell, f, ell)
    frob = [[1]]
    for _ in range(1, n):
        frob.append(mulmod_mod(frob[-1], xl, f, ell))

    def apply_frob(h: list) -> list:
        acc = [0] * n
        for i, a in enumerate(h):
            if a:
                for j, b in enumerate(frob[i]):
                    acc[j] += a * b
        return trim([c % ell for c in acc])

    pattern: list[int] = []
    rest = f
    h = [0, 1]
    d = 0
    while 2 * (d + 1) <= degree(rest):
        d += 1
        h = apply_frob(h)
        g = gcd_mod(rest, reduce_mod(add(h, [0, -1]), ell), ell)
        if degree(g) > 0:
            pattern.extend([d] * (degree(g) // d))
            rest = divexact_mod(rest, g, ell)
    if degree(rest) > 0:
        pattern.append(degree(rest))
    return sorted(pattern)


def subset_sums(parts: list[int]) -> set[int]:
    sums = {0}
    for d in parts:
        sums |= {s + d for s in sums}
    return sums


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]

