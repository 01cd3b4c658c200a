"""Exact arithmetic in the locally finite p-group A and its extension G = A ⋊ <t>.

A is generated by involution-like letters a_i (i ranging over the
integers) subject to the window relator families; every finitely
supported computation lands in a finite window group whose coset table
supplies canonical forms.  G adds a stable letter t acting by the shift
a_i -> a_{i+1}, and every G-element has the normal form a * t^beta.

Window tables are cached per support width (shift equivariance makes
windows of equal width isomorphic via index translation), built at most
once each, and immutable afterwards, so completed tables can be queried
from any thread.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import threading
from dataclasses import dataclass

from .coset_enum import CosetTable, enumerate_presentation
from .errors import CapacityExceeded
from .presentations import (
    CSequence,
    Window,
    build_window_presentation,
    is_prime,
)

INFINITE = math.inf


def _merge_letters(p: int, items) -> tuple:
    """Collapse adjacent equal-index letters, exponents mod p, dropping zeros."""
    out = []
    for idx, exp in items:
        exp %= p
        if exp == 0:
            continue
        if out and out[-1][0] == idx:
            combined = (out[-1][1] + exp) % p
            out.pop()
            if combined:
                out.append((idx, combined))
        else:
            out.append((idx, exp))
    return tuple(out)


class AWord:
    """Word in the indexed generators: a sequence of (index, exponent) letters.

    Exponents live in 1..p-1 and adjacent letters always have distinct
    indices; the empty word is the identity.  AWords are immutable.
    """

    __slots__ = ("p", "letters")

    def __init__(self, p: int, letters=(), _merged: bool = False):
        self.p = p
        self.letters = tuple(letters) if _merged else _merge_letters(p, letters)

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.letters:
            return None
        indices = [i for i, _ in self.letters]
        return (min(indices), max(indices))

    def is_empty(self) -> bool:
        return not self.letters

    def __mul__(self, other: "AWord") -> "AWord":
        if self.p != other.p:
            raise ValueError("cannot multiply AWords over different p")
        return AWord(self.p, self.letters + other.letters)

    def inverse(self) -> "AWord":
        return AWord(
            self.p,
            tuple((i, self.p - e) for i, e in reversed(self.letters)),
            _merged=True,
        )

    def total_exponent(self) -> int:
        return sum(e for _, e in self.letters) % self.p

    def index_vector(self) -> dict[int, int]:
        """Index-wise exponent sums mod p (zero entries omitted)."""
        sums: dict[int, int] = {}
        for i, e in self.letters:
            sums[i] = (sums.get(i, 0) + e) % self.p
        return {i: v for i, v in sums.items() if v}

    def __eq__(self, other):
        return (
            isinstance(other, AWord)
            and self.p == other.p
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.p, self.letters))

    def __repr__(self):
        return f"AWord({render_aword(self)!r})"


def shift(u: AWord, k: int) -> AWord:
    """The shift automorphism a_i -> a_{i+k} applied letterwise."""
    return AWord(u.p, tuple((i + k, e) for i, e in u.letters), _merged=True)


def render_aword(u: AWord) -> str:
    parts = []
    for i, e in u.letters:
        parts.append(f"a{i}" if e == 1 else f"a{i}^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class AbelianImage:
    """Abelianization data for a G-element.

    kind "index_vector": the element was built t-free, and `vector` holds
    index-wise exponent sums mod p (a homomorphism on the subgroup A).
    kind "collapsed": t was involved, and only the pair (total exponent
    sum mod p, beta) is a sound invariant, since conjugation by t shifts
    indices.
    """

    kind: str
    vector: dict
    total: int
    beta: int

    @property
    def nonzero_on_a_part(self) -> bool:
        if self.kind == "index_vector":
            return bool(self.vector)
        return self.total != 0


class GElement:
    """Element of G in the normal form a * t^beta.

    The carried AWord is unreduced; the canonical window-group form is
    computed on demand and cached.  `t_free` records whether the element
    was built purely from A-generators (it controls only how `abelianize`
    reports, never group semantics).
    """

    __slots__ = ("group", "a", "beta", "t_free", "_canon")

    def __init__(self, group: "LimitGroup", a: AWord, beta: int = 0, t_free=None):
        if a.p != group.p:
            raise ValueError("AWord does not match the group instance")
        self.group = group
        self.a = a
        self.beta = beta
        self.t_free = (beta == 0) if t_free is None else bool(t_free)
        self._canon = None

    # -- group operations ---------------------------------------------

    def __mul__(self, other: "GElement") -> "GElement":
        if other.group is not self.group:
            raise ValueError("cannot mix elements of different instances")
        return GElement(
            self.group,
            self.a * shift(other.a, self.beta),
            self.beta + other.beta,
            t_free=self.t_free and other.t_free,
        )

    def inverse(self) -> "GElement":
        return GElement(
            self.group,
            shift(self.a.inverse(), -self.beta),
            -self.beta,
            t_free=self.t_free,
        )

    def __pow__(self, k: int) -> "GElement":
        if k == 0:
            return self.group.identity_element
        base = self if k > 0 else self.inverse()
        k = abs(k)
        acc = None
        cur = base
        while k:
            if k & 1:
                acc = cur if acc is None else acc * cur
            k >>= 1
            if k:
                cur = cur * cur
        return acc

    def conjugate_by(self, h: "GElement") -> "GElement":
        return h.inverse() * self * h

    # -- canonical form and predicates ----------------------------------

    def canonical_aword(self) -> AWord:
        if self._canon is None:
            self._canon = self.group.canonical_aword(self.a)
        return self._canon

    def is_trivial(self) -> bool:
        if self.beta != 0:
            return False
        if self.a.is_empty():
            return True
        return self.canonical_aword().is_empty()

    def order(self):
        """Element order: INFINITE iff beta != 0, else the p-power window order."""
        if self.beta != 0:
            return INFINITE
        canon = self.canonical_aword()
        if canon.is_empty():
            return 1
        return self.group.aword_order(canon)

    def abelianize(self) -> AbelianImage:
        if self.t_free:
            return AbelianImage(
                "index_vector", self.a.index_vector(), self.a.total_exponent(), self.beta
            )
        return AbelianImage("collapsed", {}, self.a.total_exponent(), self.beta)

    def __eq__(self, other):
        if not isinstance(other, GElement) or other.group is not self.group:
            return NotImplemented
        if self.beta != other.beta:
            return False
        if self.a.letters == other.a.letters:
            return True
        return self.canonical_aword() == other.canonical_aword()

    def __hash__(self):
        return hash((self.beta, self.canonical_aword()))

    def render(self) -> str:
        parts = []
        if self.a.letters:
            parts.append(render_aword(self.a))
        if self.beta == 1:
            parts.append("t")
        elif self.beta != 0:
            parts.append(f"t^{self.beta}")
        return " ".join(parts) if parts else "1"

    def render_canonical(self) -> str:
        """Render with the A-part in window normal form."""
        return GElement(self.group, self.canonical_aword(), self.beta).render()

    def __repr__(self):
        return f"GElement({self.render()!r})"


class LimitGroup:
    """Ambient instance (p, c): owns caps and the window-table cache."""

    def __init__(
        self,
        p: int = 2,
        c="n",
        *,
        max_cosets: int = 1_000_000,
        max_window_width: int = 6,
        cache_dir: str | None = None,
    ):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.c = CSequence.from_spec(c)
        self.max_cosets = max_cosets
        self.max_window_width = max_window_width
        self.cache_dir = cache_dir if cache_dir is not None else os.environ.get("MIFLAB_CACHE")
        self._tables: dict[int, CosetTable] = {}
        self._build_lock = threading.Lock()

    # -- element constructors -------------------------------------------

    def aword(self, items=()) -> AWord:
        return AWord(self.p, items)

    def element(self, a=None, beta: int = 0, t_free=None) -> GElement:
        if a is None:
            a = self.aword()
        elif not isinstance(a, AWord):
            a = self.aword(a)
        return GElement(self, a, beta, t_free=t_free)

    @property
    def identity_element(self) -> GElement:
        return GElement(self, self.aword(), 0, t_free=True)

    def generator(self, i: int, exp: int = 1) -> GElement:
        return GElement(self, self.aword([(i, exp)]), 0, t_free=True)

    def t_power(self, k: int = 1) -> GElement:
        return GElement(self, self.aword(), k, t_free=(k == 0))

    def parse(self, text: str) -> GElement:
        from .parser import parse_element

        return parse_element(text, self)

    # -- group-context protocol (shared with mixed words) ----------------

    def mul(self, g: GElement, h: GElement) -> GElement:
        return g * h

    def inv(self, g: GElement) -> GElement:
        return g.inverse()

    def power(self, g: GElement, k: int) -> GElement:
        return g ** k

    def is_identity(self, g: GElement) -> bool:
        return g.is_trivial()

    def render_element(self, g: GElement) -> str:
        return g.render()

    def element_key(self, g: GElement):
        return (g.beta, g.canonical_aword().letters)

    def owns(self, g) -> bool:
        return isinstance(g, GElement) and g.group is self

    # -- window tables ----------------------------------------------------

    def table_for_width(self, width: int) -> CosetTable:
        """Coset table of the base window [0, width] (shared by all shifts)."""
        tbl = self._tables.get(width)
        if tbl is not None:
            return tbl
        with self._build_lock:
            tbl = self._tables.get(width)
            if tbl is not None:
                return tbl
            pres = build_window_presentation(
                self.p, self.c, Window(0, width), self.max_window_width
            )
            tbl = self._load_cached(width, pres)
            if tbl is None:
                tbl = enumerate_presentation(pres, self.max_cosets)
                self._store_cached(width, tbl)
            self._tables[width] = tbl
            return tbl

    def table_for_window(self, lo: int, hi: int) -> CosetTable:
        return self.table_for_width(hi - lo)

    def cached_tables(self) -> dict[int, CosetTable]:
        return dict(self._tables)

    def window_order(self, window: Window) -> int:
        return self.table_for_width(window.width).coset_count

    def _cache_path(self, width: int) -> str | None:
        if not self.cache_dir:
            return None
        key = f"{self.p}|{self.c.key(width)}|{width}"
        digest = hashlib.sha256(key.encode()).hexdigest()[:24]
        return os.path.join(self.cache_dir, f"table-{digest}.json")

    def _load_cached(self, width: int, pres) -> CosetTable | None:
        path = self._cache_path(width)
        if not path or not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return CosetTable.from_json_dict(pres, data)

    def _store_cached(self, width: int, table: CosetTable) -> None:
        path = self._cache_path(width)
        if not path:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(table.to_json_dict(), fh)
        os.replace(tmp, path)

    # -- word-level engine -------------------------------------------------

    def _letters_for_table(self, word: AWord, lo: int):
        """Translate an AWord into table letters relative to window start lo."""
        out = []
        for i, e in word.letters:
            out.extend(((i - lo, 1),) * e)
        return tuple(out)

    def canonical_aword(self, word: AWord) -> AWord:
        """Shortlex normal form in the window group of the word's support.

        The canonical word is window-stable: any window containing the
        support yields the same letters.
        """
        if word.is_empty():
            return word
        lo, hi = word.support
        table = self.table_for_width(hi - lo)
        coset = table.trace_word(self._letters_for_table(word, lo))
        letters = tuple(
            (pos + lo, 1 if s > 0 else self.p - 1) for pos, s in table.words[coset]
        )
        return AWord(self.p, letters)

    def aword_order(self, word: AWord) -> int:
        if word.is_empty():
            return 1
        lo, hi = word.support
        table = self.table_for_width(hi - lo)
        return table.element_order(self._letters_for_table(word, lo))

    def subgroup_elements(self, gens, lo: int, hi: int) -> list[AWord]:
        """All elements of <gens> inside B([lo, hi]), as canonical AWords.

        Deterministic BFS closure over the window's coset table.
        """
        table = self.table_for_width(hi - lo)
        gen_cosets = []
        for g in gens:
            if not isinstance(g, AWord):
                g = self.aword(g)
            sup = g.support
            if sup is not None and (sup[0] < lo or sup[1] > hi):
                raise ValueError(f"generator {render_aword(g)} not supported in [{lo}, {hi}]")
            c = table.trace_word(self._letters_for_table(g, lo))
            gen_cosets.append(c)
            gen_cosets.append(table.trace_word(self._letters_for_table(g.inverse(), lo)))
        found = {0}
        queue = [0]
        qi = 0
        cols = table
        while qi < len(queue):
            cur = queue[qi]
            qi += 1
            for g in gen_cosets:
                nxt = cols.trace(cur, cols.words[g])
                if nxt not in found:
                    found.add(nxt)
                    queue.append(nxt)
        out = []
        for c in sorted(found):
            letters = tuple(
                (pos + lo, 1 if s > 0 else self.p - 1) for pos, s in table.words[c]
            )
            out.append(AWord(self.p, letters))
        return out

    def conjugate_subgroup_meet_trivial(self, gens, N: int) -> bool:
        """Check H ∩ (shift of H by 2N+1) = {1} for H = <gens> <= B([-N, N]).

        The intersection is computed honestly in the join window
        [-N, 3N+1]; for window-supported subgroups the result is always
        true, so this operation is a property-check harness.
        """
        gens = [g if isinstance(g, AWord) else self.aword(g) for g in gens]
        for g in gens:
            sup = g.support
            if sup is not None and (sup[0] < -N or sup[1] > N):
                raise ValueError("generators must be supported in [-N, N]")
        gens = [g for g in gens if not g.is_empty()]
        if not gens:
            return True  # trivial subgroup, for any N
        h_words = self.subgroup_elements(gens, -N, N)
        shifted = [shift(w, 2 * N + 1) for w in h_words]
        big = self.table_for_window(-N, 3 * N + 1)
        ids_h = {big.trace_word(self._letters_for_table(w, -N)) for w in h_words}
        ids_shift = {big.trace_word(self._letters_for_table(w, -N)) for w in shifted}
        return ids_h & ids_shift == {big.identity_coset}


# -- module-level forms of the operations (thin wrappers) -----------------


def multiply(g: GElement, h: GElement) -> GElement:
    return g * h


def is_trivial(g: GElement) -> bool:
    return g.is_trivial()


def order(g: GElement):
    return g.order()


def abelianize(g: GElement) -> AbelianImage:
    return g.abelianize()


# -- instance registry ------------------------------------------------------

_instances: dict = {}
_instances_lock = threading.Lock()


def instance(
    p: int = 2,
    c="n",
    *,
    max_cosets: int = 1_000_000,
    max_window_width: int = 6,
    cache_dir: str | None = None,
) -> LimitGroup:
    """Shared LimitGroup instances, so window tables are built once per config."""
    cseq = CSequence.from_spec(c)
    key = (p, cseq.rule, cseq.prefix, max_cosets, max_window_width, cache_dir)
    with _instances_lock:
        got = _instances.get(key)
        if got is None:
            got = LimitGroup(
                p,
                cseq,
                max_cosets=max_cosets,
                max_window_width=max_window_width,
                cache_dir=cache_dir,
            )
            _instances[key] = got
        return got


def default_instance() -> LimitGroup:
    """The demo default: p = 2 with the identity class-bound rule c_n = n."""
    return instance(2, "n")
