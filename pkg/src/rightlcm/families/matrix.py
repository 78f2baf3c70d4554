"""
The semidirect product ℤ^d ⋊_A ℕ for an integer matrix A with |det A| > 1.

Elements are ``(g, n)`` with ``(g, m)(h, n) = (g + A^m h, m + n)``.  The units
are the elements with ``n = 0``, so ideals are compared up to right units and
LCMs are returned with the vector reduced to the canonical residue of
``ℤ^d / A^n ℤ^d``.

>>> S = MatrixFamily([[1, 1], [0, 2]])
>>> from rightlcm.core import right_lcm
>>> right_lcm(S.parse('{"g":[0,0],"n":1}'), S.parse('{"g":[1,2],"n":1}'))
Meet(matrix<{"g":[0,0],"n":1}>)
>>> right_lcm(S.parse('{"g":[0,0],"n":1}'), S.parse('{"g":[0,1],"n":1}'))
Disjoint
"""

from __future__ import annotations

import json
from itertools import product

from ..core import ParseError, RightLCMFamily, UnsupportedError
from ..intlat import det, lattice_quotient, mat_pow, mat_vec, solve_integer


class MatrixFamily(RightLCMFamily):
    kind = "matrix"
    kms_type = "b"
    has_trivial_units = False

    def __init__(self, A):
        A = [[int(x) for x in row] for row in A]
        if not A or any(len(row) != len(A) for row in A):
            raise ValueError("A must be a nonempty square matrix")
        D = det(A)
        if abs(D) <= 1:
            raise ValueError(f"need |det A| > 1, got det A = {D}")
        self.A = A
        self.dim = len(A)
        self.det = abs(D)
        self._powers: dict = {}
        self._quotients: dict = {}

    @property
    def tag(self):
        return "matrix" + json.dumps(self.A, separators=(",", ":"))

    def to_json(self):
        return {"kind": "matrix", "A": self.A}

    def _power(self, n):
        P = self._powers.get(n)
        if P is None:
            P = self._powers[n] = mat_pow(self.A, n)
        return P

    def _quotient(self, n):
        Q = self._quotients.get(n)
        if Q is None:
            Q = self._quotients[n] = lattice_quotient(self.A, n)
        return Q

    # -- structure ------------------------------------------------------------

    def _identity_payload(self):
        return ((0,) * self.dim, 0)

    def _mul(self, x, y):
        g, m = x
        h, n = y
        Ah = mat_vec(self._power(m), h)
        return (tuple(a + b for a, b in zip(g, Ah)), m + n)

    def _left_divide(self, x, z):
        g, m = x
        h, n = z
        if n < m:
            return None
        k = self._quotient(m).solve([b - a for a, b in zip(g, h)])
        return None if k is None else (k, n - m)

    def _divides(self, x, z):
        return z[1] >= x[1] and self._quotient(x[1]).contains([b - a for a, b in zip(x[0], z[0])])

    def _right_lcm(self, x, y):
        if x[1] > y[1]:
            x, y = y, x
        g, m = x
        h, n = y
        if not self._quotient(m).contains([b - a for a, b in zip(g, h)]):
            return None
        return y

    def _ideals_disjoint(self, x, y):
        if x[1] > y[1]:
            x, y = y, x
        return solve_integer(self._power(x[1]), [b - a for a, b in zip(x[0], y[0])]) is None

    def canonical(self, s):
        g, n = s.payload
        return self.el((self._quotient(n).reduce(g), n))

    def length(self, s):
        g, n = s.payload
        return max(max(abs(x) for x in g), n)

    def count(self, max_len):
        return (2 * max_len + 1) ** self.dim * (max_len + 1)

    def _enumerate(self, max_len):
        box = list(product(range(-max_len, max_len + 1), repeat=self.dim))
        for n in range(max_len + 1):
            for g in box:
                yield (g, n)

    # -- units and core -------------------------------------------------------

    def is_unit(self, s):
        return s.payload[1] == 0

    def is_core(self, s):
        return s.payload[1] == 0

    def is_core_irreducible(self, s):
        return s.payload[1] >= 1

    def core_factorize(self, s):
        if self.is_core(s):
            return self.identity, s
        return s, self.identity

    def core_predecessors(self, s):
        # the core consists of units only
        return []

    # -- text -----------------------------------------------------------------

    def parse(self, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, text, exc.pos) from None
        if not isinstance(data, dict) or set(data) != {"g", "n"}:
            raise ParseError('expected {"g": [...], "n": k}', text, 0)
        g, n = data["g"], data["n"]
        if (
            not isinstance(g, list)
            or len(g) != self.dim
            or not all(isinstance(x, int) for x in g)
            or not isinstance(n, int)
            or n < 0
        ):
            raise ParseError(f"g must be {self.dim} integers and n >= 0", text, 0)
        return self.el((tuple(g), n))

    def format(self, s):
        g, n = s.payload
        return json.dumps({"g": list(g), "n": n}, separators=(",", ":"))

    # -- foundation sets ------------------------------------------------------

    def foundation_exact(self, elements):
        depth = max(s.payload[1] for s in elements)
        for r in self._quotient(depth).transversal():
            if not any(self._covers(s, r) for s in elements):
                return False
        return True

    def _covers(self, s, r):
        g, m = s.payload
        return self._quotient(m).contains([a - b for a, b in zip(r, g)])

    def accurate_refinement(self, elements):
        from ..boundary.foundation import is_accurate

        if not self.foundation_exact(elements):
            return None
        if is_accurate(elements):
            return list(elements)
        depth = max(s.payload[1] for s in elements)
        return [self.el((r, depth)) for r in self._quotient(depth).transversal()]

    def transversal_set(self, n: int = 1):
        return [self.el((r, n)) for r in self._quotient(n).transversal()]

    def proper_atoms(self):
        return [self.transversal_set(1)]

    # -- scaling --------------------------------------------------------------

    def scale(self, s):
        return self.det ** s.payload[1]

    def class_level(self, s):
        return s.payload[1]

    def class_reps(self, level):
        reps = [self.identity]
        for n in range(1, level + 1):
            reps += self.transversal_set(n)
        return reps

    def class_counts(self, level):
        n = self.det**level
        return [(n, n)]

    def core_exponent(self, s):
        if not self.is_core(s):
            raise UnsupportedError(f"{s!r} is not in the core")
        return tuple(s.payload[0])
