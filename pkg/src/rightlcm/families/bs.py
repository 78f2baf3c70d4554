"""
Baumslag–Solitar monoids BS(c,d)⁺ = ⟨a, b | ab^c = b^d a⟩⁺.

Every element has a unique normal form ``w_1 ⋯ w_m b^i`` with each
``w_k = b^{ℓ_k} a`` and ``0 <= ℓ_k < d``.  The payload is ``(letters, tail)``
where ``letters = (ℓ_1, …, ℓ_m)`` and ``tail = i``.

Normalization reads the word left to right.  Appending ``a`` to a state with
tail ``e`` uses ``b^e a = b^{e mod d} a b^{c ⌊e/d⌋}``.

>>> S = BS(2, 3)
>>> S.normalize("bbba")
((0,), 2)
>>> S.normalize("bbbba")
((1,), 2)
>>> str(S.parse("a") * S.parse("bb"))
'abb'
"""

from __future__ import annotations

from itertools import product

from ..core import ParseError, RightLCMFamily, UnsupportedError


class BS(RightLCMFamily):
    kind = "bs"
    kms_type = "d"

    def __init__(self, c: int, d: int):
        c, d = int(c), int(d)
        if c < 1 or d < 1:
            raise ValueError("BS(c,d) needs c, d >= 1")
        self.c, self.d = c, d

    @property
    def tag(self):
        return f"bs({self.c},{self.d})"

    def to_json(self):
        return {"kind": "bs", "c": self.c, "d": self.d}

    @property
    def all_core(self) -> bool:
        # with d = 1 any two letter sequences are comparable, so no ideals are disjoint
        return self.d == 1

    # -- normal form ----------------------------------------------------------

    def _push(self, letters: list, tail: int, ell: int) -> int:
        """Append ``b^ell a`` to a state with the given tail; return the new tail."""
        e = tail + ell
        letters.append(e % self.d)
        return self.c * (e // self.d)

    def normalize(self, word: str):
        letters: list[int] = []
        tail = 0
        for i, ch in enumerate(word):
            if ch == "b":
                tail += 1
            elif ch == "a":
                tail = self._push(letters, tail, 0)
            else:
                raise ParseError("expected letters 'a' and 'b'", word, i)
        return (tuple(letters), tail)

    def _carry(self, tail: int, target) -> tuple[tuple[int, ...], int]:
        """Letters ``u`` so that pushing them from ``tail`` produces ``target``.

        Returns ``(u, final_tail)``.
        """
        u = []
        for w in target:
            ell = (w - tail) % self.d
            u.append(ell)
            tail = self.c * ((tail + ell) // self.d)
        return tuple(u), tail

    # -- structure ------------------------------------------------------------

    def _identity_payload(self):
        return ((), 0)

    def _mul(self, x, y):
        letters = list(x[0])
        tail = x[1]
        for ell in y[0]:
            tail = self._push(letters, tail, ell)
        return (tuple(letters), tail + y[1])

    def _left_divide(self, x, z):
        v, e = x
        w, j = z
        if w[: len(v)] != v:
            return None
        u, final = self._carry(e, w[len(v) :])
        if final > j:
            return None
        return (u, j - final)

    def _comparable(self, x, y):
        v, w = x[0], y[0]
        k = min(len(v), len(w))
        return v[:k] == w[:k]

    def _right_lcm(self, x, y):
        if not self._comparable(x, y):
            return None
        if len(x[0]) > len(y[0]):
            x, y = y, x
        _, carried = self._carry(x[1], y[0][len(x[0]) :])
        return (y[0], max(y[1], carried))

    def _ideals_disjoint(self, x, y):
        return not self._comparable(x, y)

    def length(self, s):
        letters, tail = s.payload
        return max(len(letters), tail)

    def count(self, max_len):
        return sum(self.d**m for m in range(max_len + 1)) * (max_len + 1)

    def _enumerate(self, max_len):
        for m in range(max_len + 1):
            words = list(product(range(self.d), repeat=m))
            for tail in range(max_len + 1):
                for letters in words:
                    yield (letters, tail)

    # -- core -----------------------------------------------------------------

    def is_core(self, s):
        return self.all_core or not s.payload[0]

    def is_core_irreducible(self, s):
        letters, tail = s.payload
        return not self.all_core and bool(letters) and tail == 0

    def core_factorize(self, s):
        letters, tail = s.payload
        if self.is_core(s):
            return self.identity, s
        return self.el((letters, 0)), self.el(((), tail))

    def core_predecessors(self, s):
        if self.all_core:
            return super().core_predecessors(s)
        letters, tail = s.payload
        return [self.el((letters, tail - k)) for k in range(1, tail + 1)]

    # -- text -----------------------------------------------------------------

    def parse(self, text):
        t = text.strip()
        if t in ("1", "ε", "e", ""):
            return self.identity
        return self.el(self.normalize(t))

    def format(self, s):
        letters, tail = s.payload
        if not letters and not tail:
            return "1"
        return "".join("b" * ell + "a" for ell in letters) + "b" * tail

    def generators(self):
        return {"a": self.el(((0,), 0)), "b": self.el(((), 1))}

    def generator_word(self, s):
        text = self.format(s)
        return [] if text == "1" else list(text)

    # -- foundation sets ------------------------------------------------------

    def foundation_exact(self, elements):
        if self.all_core:
            return bool(elements)
        depth = max(len(s.payload[0]) for s in elements)
        prefixes = {s.payload[0] for s in elements}
        for word in product(range(self.d), repeat=depth):
            if not any(word[:k] in prefixes for k in range(depth + 1)):
                return False
        return True

    def accurate_refinement(self, elements):
        from ..boundary.foundation import is_accurate

        if not self.foundation_exact(elements):
            return None
        if is_accurate(elements):
            return list(elements)
        if self.all_core:
            return [elements[0]]
        depth = max(len(s.payload[0]) for s in elements)
        out = []
        for word in product(range(self.d), repeat=depth):
            for s in elements:
                v, e = s.payload
                if word[: len(v)] == v:
                    u, _ = self._carry(e, word[len(v) :])
                    out.append(self.el(self._mul(s.payload, (u, 0))))
                    break
        return out

    def letter_set(self):
        """The set ``{b^ℓ a : 0 <= ℓ < d}``."""
        return [self.el(((ell,), 0)) for ell in range(self.d)]

    def proper_atoms(self):
        return [] if self.all_core else [self.letter_set()]

    # -- scaling --------------------------------------------------------------

    def scale(self, s):
        return self.d ** len(s.payload[0])

    def class_level(self, s):
        return len(s.payload[0])

    def class_reps(self, level):
        if self.all_core:
            return [self.identity]
        return [
            self.el((w, 0))
            for m in range(level + 1)
            for w in product(range(self.d), repeat=m)
        ]

    def class_counts(self, level):
        if self.all_core:
            return [(1, 1)] if level == 0 else []
        n = self.d**level
        return [(n, n)]

    def core_exponent(self, s):
        if self.all_core:
            raise UnsupportedError("core of BS(c,1) is not cyclic")
        if s.payload[0]:
            raise UnsupportedError(f"{s!r} is not in the core")
        return (s.payload[1],)

    @property
    def is_minimal(self) -> bool:
        return self.c % self.d != 0
