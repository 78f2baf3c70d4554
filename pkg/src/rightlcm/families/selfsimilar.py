"""
Self-similar actions and their Zappa–Szép products X* ⋈ G.

A group G acts on words over an alphabet X by length-preserving bijections
with ``g·(xw) = (g·x)((g|_x)·w)``.  The monoid X* ⋈ G has elements ``(w, g)``
and product ``(v, g)(w, h) = (v (g·w), (g|_w) h)``.

Two groups are provided: the trivial group (giving the free monoid X*) and
the adding machine, where ℤ acts on base-``q`` digits written least
significant first.

>>> S = AddingMachine()
>>> g = S.el(((), 1))
>>> S.format(g * S.parse('{"word":"0","g":"e"}'))
'{"word":"1","g":"e"}'
>>> S.format(g * S.parse('{"word":"1","g":"e"}'))
'{"word":"0","g":"g"}'
"""

from __future__ import annotations

import json
import re
from collections import deque
from itertools import product

from ..core import ParseError, RightLCMFamily


class SelfSimilarFamily(RightLCMFamily):
    """Base class; subclasses provide the group law and the action tables."""

    kind = "ss"
    kms_type = "c"

    def __init__(self, alphabet: str):
        if len(set(alphabet)) != len(alphabet) or not alphabet:
            raise ValueError("alphabet must be a nonempty string of distinct symbols")
        self.alphabet = alphabet
        self.q = len(alphabet)

    # -- group interface (override) ------------------------------------------

    group_identity = 0

    def g_mul(self, g, h):
        raise NotImplementedError

    def g_inv(self, g):
        raise NotImplementedError

    def g_act(self, g, x: int) -> int:
        raise NotImplementedError

    def g_restrict(self, g, x: int):
        raise NotImplementedError

    def g_size(self, g) -> int:
        return 0

    def g_elements(self, bound: int) -> list:
        return [self.group_identity]

    def g_format(self, g) -> str:
        return "e"

    def g_parse(self, text: str):
        if text.strip() != "e":
            raise ParseError("expected 'e'", text, 0)
        return self.group_identity

    # -- action on words ------------------------------------------------------

    def act(self, g, word: tuple) -> tuple[tuple, object]:
        """``(g·w, g|_w)``."""
        out = []
        for x in word:
            out.append(self.g_act(g, x))
            g = self.g_restrict(g, x)
        return tuple(out), g

    def restriction_closure(self, g, cap: int = 1000):
        """The set ``{g|_w}``, or None when it grows beyond ``cap``."""
        seen = {g}
        queue = deque([g])
        while queue:
            h = queue.popleft()
            for x in range(self.q):
                r = self.g_restrict(h, x)
                if r not in seen:
                    seen.add(r)
                    if len(seen) > cap:
                        return None
                    queue.append(r)
        return seen

    # -- structure ------------------------------------------------------------

    def _identity_payload(self):
        return ((), self.group_identity)

    def _mul(self, x, y):
        v, g = x
        w, h = y
        gw, gr = self.act(g, w)
        return (v + gw, self.g_mul(gr, h))

    def _left_divide(self, x, z):
        v, g = x
        u, h = z
        if u[: len(v)] != v:
            return None
        w, _ = self.act(self.g_inv(g), u[len(v) :])
        _, gr = self.act(g, w)
        return (w, self.g_mul(self.g_inv(gr), h))

    def _comparable(self, x, y):
        k = min(len(x[0]), len(y[0]))
        return x[0][:k] == y[0][:k]

    def _right_lcm(self, x, y):
        if self.q == 1:
            return max(x, y, key=lambda p: len(p[0]))
        if not self._comparable(x, y):
            return None
        w = max(x[0], y[0], key=len)
        return (w, self.group_identity)

    def _ideals_disjoint(self, x, y):
        return self.q > 1 and not self._comparable(x, y)

    def canonical(self, s):
        return self.el((s.payload[0], self.group_identity))

    def length(self, s):
        w, g = s.payload
        return max(len(w), self.g_size(g))

    def count(self, max_len):
        return sum(self.q**m for m in range(max_len + 1)) * len(self.g_elements(max_len))

    def _enumerate(self, max_len):
        groups = self.g_elements(max_len)
        for m in range(max_len + 1):
            for g in groups:
                for w in product(range(self.q), repeat=m):
                    yield (w, g)

    # -- units and core -------------------------------------------------------

    @property
    def all_core(self) -> bool:
        return self.q == 1

    def is_unit(self, s):
        return not s.payload[0]

    def is_core(self, s):
        return self.all_core or not s.payload[0]

    def is_core_irreducible(self, s):
        return not self.all_core and bool(s.payload[0])

    def core_factorize(self, s):
        w, g = s.payload
        if self.is_core(s):
            return self.identity, s
        return self.el((w, self.group_identity)), self.el(((), g))

    def core_predecessors(self, s):
        if self.all_core:
            return super().core_predecessors(s)
        return []

    # -- text -----------------------------------------------------------------

    def word_of(self, text: str) -> tuple:
        out = []
        for i, ch in enumerate(text):
            k = self.alphabet.find(ch)
            if k < 0:
                raise ParseError(f"letter not in alphabet {self.alphabet!r}", text, i)
            out.append(k)
        return tuple(out)

    def word_text(self, w) -> str:
        return "".join(self.alphabet[x] for x in w)

    def parse(self, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, text, exc.pos) from None
        if not isinstance(data, dict) or set(data) != {"word", "g"}:
            raise ParseError('expected {"word": "...", "g": "..."}', text, 0)
        return self.el((self.word_of(data["word"]), self.g_parse(str(data["g"]))))

    def format(self, s):
        w, g = s.payload
        return json.dumps({"word": self.word_text(w), "g": self.g_format(g)}, separators=(",", ":"))

    def generators(self):
        gens = {ch: self.el(((i,), self.group_identity)) for i, ch in enumerate(self.alphabet)}
        return gens

    # -- foundation sets ------------------------------------------------------

    def foundation_exact(self, elements):
        if self.all_core:
            return bool(elements)
        depth = max(len(s.payload[0]) for s in elements)
        prefixes = {s.payload[0] for s in elements}
        return all(
            any(w[:k] in prefixes for k in range(depth + 1))
            for w in product(range(self.q), repeat=depth)
        )

    def accurate_refinement(self, elements):
        from ..boundary.foundation import is_accurate

        if not self.foundation_exact(elements):
            return None
        if is_accurate(elements):
            return list(elements)
        if self.all_core:
            return [elements[0]]
        depth = max(len(s.payload[0]) for s in elements)
        return [self.el((w, self.group_identity)) for w in product(range(self.q), repeat=depth)]

    def proper_atoms(self):
        return [] if self.all_core else [[self.el(((x,), self.group_identity)) for x in range(self.q)]]

    # -- scaling --------------------------------------------------------------

    def scale(self, s):
        return self.q ** len(s.payload[0])

    def class_level(self, s):
        return len(s.payload[0])

    def class_reps(self, level):
        if self.all_core:
            return [self.identity]
        return [
            self.el((w, self.group_identity))
            for m in range(level + 1)
            for w in product(range(self.q), repeat=m)
        ]

    def class_counts(self, level):
        if self.all_core:
            return [(1, 1)] if level == 0 else []
        n = self.q**level
        return [(n, n)]


class FreeMonoid(SelfSimilarFamily):
    """The free monoid X*, i.e. X* ⋈ {e}.

    >>> F = FreeMonoid("ab")
    >>> [str(s) for s in F.enumerate(1)]
    ['1', 'a', 'b']
    """

    kind = "free"

    def g_mul(self, g, h):
        return 0

    def g_inv(self, g):
        return 0

    def g_act(self, g, x):
        return x

    def g_restrict(self, g, x):
        return 0

    @property
    def tag(self):
        return f"free[{self.alphabet}]"

    def to_json(self):
        return {"kind": "free", "alphabet": self.alphabet}

    def parse(self, text):
        t = text.strip()
        if t in ("1", "ε", ""):
            return self.identity
        return self.el((self.word_of(t), 0))

    def format(self, s):
        return self.word_text(s.payload[0]) or "1"

    def generator_word(self, s):
        return list(self.word_text(s.payload[0]))


_GROUP = re.compile(r"\s*(?:(e)|g(?:\^(-?\d+))?)\s*$")


class AddingMachine(SelfSimilarFamily):
    """ℤ acting on base-``q`` digits by adding with carry.

    The generator ``g`` adds one; ``g^k`` is stored as the integer ``k``, with
    ``k·x = (x + k) mod q`` and ``k|_x = ⌊(x + k)/q⌋``.
    """

    kind = "adding"
    has_trivial_units = False

    def __init__(self, alphabet: str = "01"):
        super().__init__(alphabet)
        if self.q < 2:
            raise ValueError("the adding machine needs at least two digits")

    @property
    def tag(self):
        return f"ss[adding:{self.alphabet}]"

    def to_json(self):
        return {"kind": "adding", "alphabet": self.alphabet}

    def g_mul(self, g, h):
        return g + h

    def g_inv(self, g):
        return -g

    def g_act(self, g, x):
        return (x + g) % self.q

    def g_restrict(self, g, x):
        return (x + g) // self.q

    def g_size(self, g):
        return abs(g)

    def g_elements(self, bound):
        return list(range(-bound, bound + 1))

    def g_format(self, g):
        if g == 0:
            return "e"
        return "g" if g == 1 else f"g^{g}"

    def g_parse(self, text):
        m = _GROUP.match(text)
        if not m:
            raise ParseError("expected 'e', 'g' or 'g^k'", text, 0)
        if m.group(1):
            return 0
        return int(m.group(2)) if m.group(2) is not None else 1

    def generators(self):
        gens = super().generators()
        gens["g"] = self.el(((), 1))
        return gens

    def generator_word(self, s):
        w, g = s.payload
        word = list(self.word_text(w))
        return word + (["g"] * g if g >= 0 else ["g^-1"] * -g)

    def generators_with_inverses(self):
        gens = self.generators()
        gens["g^-1"] = self.el(((), -1))
        return gens
