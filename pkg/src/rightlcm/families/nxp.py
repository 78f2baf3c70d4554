"""
The semidirect product ℕ⋊P, where P is the multiplicative monoid generated by
a finite family of pairwise coprime integers.

Elements are pairs ``(n, p)`` with product ``(m, p)(n, q) = (m + pn, pq)``.
The multiplier ``p`` is stored as its exponent vector over the generators.

>>> S = NxP([2, 3])
>>> str(S.parse("(1,2)") * S.parse("(1,3)"))
'(3,6)'
>>> from rightlcm.core import right_lcm
>>> right_lcm(S.parse("(0,2)"), S.parse("(1,3)"))
Meet(nxp<(4,6)>)
"""

from __future__ import annotations

import re
from itertools import product
from math import comb, gcd, prod

from ..core import ParseError, RightLCMFamily, UnsupportedError


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def crt_pair(m: int, p: int, n: int, q: int) -> tuple[int, int] | None:
    """Solve ``x ≡ m (mod p)``, ``x ≡ n (mod q)``; return ``(x0, lcm)`` or None."""
    g, u, _ = _ext_gcd(p, q)
    if (n - m) % g:
        return None
    l = p // g * q
    x = (m + p * u * ((n - m) // g)) % l
    return x, l


def _compositions(total: int, parts: int):
    """Exponent vectors of the given length summing to ``total`` (lex order)."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


_PAIR = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


class NxP(RightLCMFamily):
    kind = "nxp"
    kms_type = "a"

    def __init__(self, primes):
        primes = tuple(int(p) for p in primes)
        if not primes:
            raise ValueError("need at least one generator")
        for i, p in enumerate(primes):
            if p < 2:
                raise ValueError(f"generator {p} must be >= 2")
            for q in primes[:i]:
                if gcd(p, q) != 1:
                    raise ValueError(f"generators {q} and {p} are not coprime")
        self.primes = primes

    @property
    def tag(self):
        return "nxp[" + ",".join(map(str, self.primes)) + "]"

    def to_json(self):
        return {"kind": "nxp", "primes": list(self.primes)}

    # -- arithmetic helpers ---------------------------------------------------

    def value(self, exps) -> int:
        return prod(p**e for p, e in zip(self.primes, exps))

    def factor(self, p: int) -> tuple[int, ...] | None:
        """Exponent vector of ``p`` over the generators, or None."""
        if p < 1:
            return None
        exps = []
        for q in self.primes:
            e = 0
            while p % q == 0:
                p //= q
                e += 1
            exps.append(e)
        return tuple(exps) if p == 1 else None

    def pair(self, n: int, p: int):
        exps = self.factor(p)
        if exps is None or n < 0:
            raise ValueError(f"({n},{p}) is not an element of {self.tag}")
        return self.el((n, exps))

    def split(self, s) -> tuple[int, int]:
        """``(n, p)`` as plain integers."""
        n, exps = s.payload
        return n, self.value(exps)

    # -- structure ------------------------------------------------------------

    def _identity_payload(self):
        return (0, (0,) * len(self.primes))

    def _mul(self, x, y):
        m, e = x
        n, f = y
        return (m + self.value(e) * n, tuple(a + b for a, b in zip(e, f)))

    def _right_lcm(self, x, y):
        m, e = x
        n, f = y
        p, q = self.value(e), self.value(f)
        sol = crt_pair(m, p, n, q)
        if sol is None:
            return None
        r, l = sol
        lo = max(m, n)
        if r < lo:
            r += -(-(lo - r) // l) * l
        return (r, tuple(max(a, b) for a, b in zip(e, f)))

    def _left_divide(self, x, z):
        m, e = x
        n, f = z
        rest = tuple(b - a for a, b in zip(e, f))
        if min(rest) < 0 or n < m:
            return None
        p = self.value(e)
        if (n - m) % p:
            return None
        return ((n - m) // p, rest)

    def _ideals_disjoint(self, x, y):
        return (x[0] - y[0]) % gcd(self.value(x[1]), self.value(y[1])) != 0

    def length(self, s):
        n, exps = s.payload
        return max(n, sum(exps))

    def count(self, max_len):
        k = len(self.primes)
        return (max_len + 1) * comb(max_len + k, k)

    def _enumerate(self, max_len):
        for total in range(max_len + 1):
            for exps in sorted(_compositions(total, len(self.primes)), reverse=True):
                for n in range(max_len + 1):
                    yield (n, exps)

    # -- core -----------------------------------------------------------------

    def is_core(self, s):
        return not any(s.payload[1])

    def is_core_irreducible(self, s):
        n, p = self.split(s)
        return p != 1 and n < p

    def core_factorize(self, s):
        n, exps = s.payload
        p = self.value(exps)
        if p == 1:
            return self.identity, s
        return self.el((n % p, exps)), self.el((n // p, (0,) * len(exps)))

    def core_predecessors(self, s):
        n, exps = s.payload
        p = self.value(exps)
        return [self.el((n - p * k, exps)) for k in range(1, n // p + 1)]

    # -- text -----------------------------------------------------------------

    def parse(self, text):
        m = _PAIR.match(text)
        if not m:
            pos = next((i for i, ch in enumerate(text) if ch not in " (),0123456789"), 0)
            raise ParseError("expected '(n,p)'", text, pos)
        n, p = int(m.group(1)), int(m.group(2))
        exps = self.factor(p)
        if exps is None:
            raise ParseError(f"{p} does not factor over {list(self.primes)}", text, m.start(2))
        return self.el((n, exps))

    def format(self, s):
        n, p = self.split(s)
        return f"({n},{p})"

    # -- generators -----------------------------------------------------------

    def generators(self):
        gens = {"n": self.el((1, (0,) * len(self.primes)))}
        for i, p in enumerate(self.primes):
            exps = tuple(int(j == i) for j in range(len(self.primes)))
            gens[f"p{p}"] = self.el((0, exps))
        return gens

    def generator_word(self, s):
        n, exps = s.payload
        word = ["n"] * n
        for p, e in zip(self.primes, exps):
            word += [f"p{p}"] * e
        return word

    # -- foundation sets ------------------------------------------------------

    def _lcm_multiplier(self, elements):
        exps = [max(s.payload[1][i] for s in elements) for i in range(len(self.primes))]
        return tuple(exps), self.value(exps)

    def foundation_exact(self, elements):
        _, pF = self._lcm_multiplier(elements)
        pairs = [self.split(s) for s in elements]
        return all(any((r - n) % p == 0 for n, p in pairs) for r in range(pF))

    def accurate_refinement(self, elements):
        from ..boundary.foundation import is_accurate

        if not self.foundation_exact(elements):
            return None
        if is_accurate(elements):
            return list(elements)
        exps, pF = self._lcm_multiplier(elements)
        pairs = [self.split(s) for s in elements]
        out = []
        for r in range(pF):
            best = None
            for n, p in pairs:
                if (r - n) % p == 0:
                    # smallest x >= n with x ≡ r (mod pF); x ≡ n (mod p) since p | pF
                    x = r if r >= n else r + -(-(n - r) // pF) * pF
                    best = x if best is None else min(best, x)
            out.append(self.el((best, exps)))
        return out

    def elementary_set(self, p: int):
        exps = self.factor(p)
        if exps is None:
            raise ValueError(f"{p} is not in the multiplier monoid")
        return [self.el((n, exps)) for n in range(p)]

    def proper_atoms(self):
        return [self.elementary_set(p) for p in self.primes]

    # -- scaling --------------------------------------------------------------

    def scale(self, s):
        return self.value(s.payload[1])

    def class_level(self, s):
        return sum(s.payload[1])

    def class_reps(self, level):
        reps = [self.identity]
        for total in range(1, level + 1):
            for exps in sorted(_compositions(total, len(self.primes)), reverse=True):
                reps += [self.el((n, exps)) for n in range(self.value(exps))]
        return reps

    def class_counts(self, level):
        if level == 0:
            return [(1, 1)]
        out = []
        for exps in _compositions(level, len(self.primes)):
            p = self.value(exps)
            out.append((p, p))
        return out

    def core_exponent(self, s):
        if not self.is_core(s):
            raise UnsupportedError(f"{s!r} is not in the core")
        return (s.payload[0],)
