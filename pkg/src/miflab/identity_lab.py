"""Brute-force mixed-identity verdicts on finite groups.

Groups are multiplication tables on element ids 0..n-1 with optional
labels.  A "true" verdict from `is_mixed_identity` is a proof: every
substitution is tried, and oversized instances are refused rather than
sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from . import mixed_words as mw
from .errors import BudgetExceeded, ParseError

FULL_AXIOM_CHECK_LIMIT = 512
SINGLE_VAR_LIMIT = 10_000
ASSIGNMENT_LIMIT = 1_000_000
PRODUCT_SIZE_LIMIT = 100_000


class FiniteGroup:
    """A finite group as a full multiplication table on 0..n-1."""

    def __init__(self, table, labels=None, name: str = "group"):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("multiplication table must be square")
        self.table = table
        self.size = int(table.shape[0])
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.size)]
        if len(self.labels) != self.size:
            raise ValueError("label count does not match group size")
        self.identity = self._find_identity()
        self.inverse_table = self._find_inverses()
        self._validate(full=self.size <= FULL_AXIOM_CHECK_LIMIT)

    # -- construction checks ---------------------------------------------

    def _find_identity(self) -> int:
        n = self.size
        idx = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e], idx) and np.array_equal(self.table[:, e], idx):
                return e
        raise ValueError(f"{self.name}: no identity element")

    def _find_inverses(self) -> np.ndarray:
        inv = np.full(self.size, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.table == self.identity)
        for a, b in zip(rows, cols):
            inv[a] = b
        if np.any(inv < 0):
            raise ValueError(f"{self.name}: some element has no inverse")
        return inv

    def _validate(self, full: bool) -> None:
        n = self.size
        if self.table.min() < 0 or self.table.max() >= n:
            raise ValueError(f"{self.name}: table entries out of range")
        idx = np.arange(n)
        for a in range(n):
            if not np.array_equal(np.sort(self.table[a]), idx):
                raise ValueError(f"{self.name}: row {a} is not a permutation")
        if full:
            rng_rows = range(n)
        else:
            rng = np.random.default_rng(0)
            rng_rows = rng.integers(0, n, size=64)
        for a in rng_rows:
            # (a*b)*c == a*(b*c) for all b, c, vectorized over the (b, c) plane
            left = self.table[self.table[a][:, None], np.arange(n)[None, :]]
            right = self.table[a][self.table]
            if not np.array_equal(left, right):
                raise ValueError(f"{self.name}: associativity fails at row {a}")

    # -- group-context protocol -------------------------------------------

    @property
    def identity_element(self) -> int:
        return self.identity

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse_table[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        acc = self.identity
        cur = a
        while k:
            if k & 1:
                acc = self.mul(acc, cur)
            k >>= 1
            if k:
                cur = self.mul(cur, cur)
        return acc

    def is_identity(self, a: int) -> bool:
        return a == self.identity

    def render_element(self, a: int) -> str:
        return self.labels[a]

    def element_key(self, a: int) -> int:
        return a

    # -- structure helpers ---------------------------------------------------

    def __len__(self):
        return self.size

    def elements(self):
        return range(self.size)

    def element_order(self, a: int) -> int:
        k = 1
        cur = a
        while cur != self.identity:
            cur = self.mul(cur, a)
            k += 1
        return k

    def element_by_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParseError(f"{self.name} has no element labelled {label!r}") from None

    def constants(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def closure(self, subset) -> frozenset[int]:
        found = {self.identity}
        queue = sorted(set(subset))
        for g in queue:
            if g not in found:
                found.add(g)
        frontier = list(found)
        gens = sorted(set(subset))
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in found:
                        found.add(b)
                        nxt.append(b)
                    b = self.mul(g, a)
                    if b not in found:
                        found.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(found)

    def is_subgroup(self, subset) -> bool:
        sub = set(subset)
        if self.identity not in sub:
            return False
        return all(self.mul(a, b) in sub for a in sub for b in sub)

    def is_normal(self, subset) -> bool:
        sub = set(subset)
        if not self.is_subgroup(sub):
            return False
        return all(
            self.mul(self.mul(g, h), self.inv(g)) in sub
            for g in self.elements()
            for h in sub
        )

    def center(self) -> list[int]:
        return [
            z
            for z in self.elements()
            if all(self.mul(z, g) == self.mul(g, z) for g in self.elements())
        ]

    def all_subgroups(self) -> list[frozenset[int]]:
        """Every subgroup, found by closing extensions of known subgroups."""
        found = {frozenset({self.identity})}
        frontier = [frozenset({self.identity})]
        while frontier:
            nxt = []
            for sub in frontier:
                for g in self.elements():
                    if g in sub:
                        continue
                    bigger = frozenset(self.closure(set(sub) | {g}))
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.size})"


@dataclass
class GroupWithConstants:
    """A finite group together with named constants for the word grammar."""

    group: FiniteGroup
    constants: dict[str, int]

    def __post_init__(self):
        for name, el in self.constants.items():
            if not (0 <= el < self.group.size):
                raise ValueError(f"constant {name!r} is not an element id")


# -- small-group catalog -----------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    labels = [f"g{i}" for i in range(n)]
    labels[0] = "e"
    return FiniteGroup(table, labels, name=f"C{n}")


def _perm_group(perms, labels, name):
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            composed = tuple(p[q[k]] for k in range(len(p)))
            table[i, j] = index[composed]
    return FiniteGroup(table, labels, name=name)


def _cycle_label(perm) -> str:
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "e"


def symmetric(n: int) -> FiniteGroup:
    if not (1 <= n <= 5):
        raise ValueError("symmetric groups supported up to S5")
    perms = sorted(permutations(range(n)))
    labels = [_cycle_label(p) for p in perms]
    return _perm_group(perms, labels, name=f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (symmetries of the n-gon)."""
    if n < 3:
        # the point representation degenerates below the triangle
        raise ValueError("dihedral groups need n >= 3 (use C2 or V4 below that)")
    perms = []
    labels = []
    base = list(range(n))
    for flip in (0, 1):
        for r in range(n):
            if flip:
                perm = tuple((r - k) % n for k in base)
            else:
                perm = tuple((r + k) % n for k in base)
            perms.append(perm)
            labels.append(f"{'s' if flip else 'r'}{r}" if (flip or r) else "e")
    return _perm_group(perms, labels, name=f"D{n}")


def klein_four() -> FiniteGroup:
    g = direct_product(cyclic(2), cyclic(2))
    g.name = "V4"
    return g


def small_group(name: str) -> FiniteGroup:
    """Resolve catalog names: C<n>, D<n>, S<n>, V4, and x-products thereof."""
    text = name.strip()
    if "x" in text:
        parts = text.split("x")
        acc = small_group(parts[0])
        for part in parts[1:]:
            acc = direct_product(acc, small_group(part))
        acc.name = text
        return acc
    if text.upper() == "V4":
        return klein_four()
    kind, _, num = text[0], text[1:], text[1:]
    if not num.isdigit():
        raise ParseError(f"unknown group name {name!r}")
    n = int(num)
    if kind in ("C", "c"):
        return cyclic(n)
    if kind in ("D", "d"):
        return dihedral(n)
    if kind in ("S", "s"):
        return symmetric(n)
    raise ParseError(f"unknown group name {name!r}")


# -- products ----------------------------------------------------------------


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element (x, y) has id x*|B| + y."""
    if a.size * b.size > PRODUCT_SIZE_LIMIT:
        raise BudgetExceeded(
            f"direct product order {a.size * b.size} exceeds the size cap"
        )
    na, nb = a.size, b.size
    xa = np.repeat(np.arange(na), nb)
    yb = np.tile(np.arange(nb), na)
    table = a.table[xa[:, None], xa[None, :]] * nb + b.table[yb[:, None], yb[None, :]]
    labels = [f"({a.labels[x]},{b.labels[y]})" for x, y in zip(xa, yb)]
    return FiniteGroup(table, labels, name=f"{a.name}x{b.name}")


def product_left(a_el: int, b_group_size: int) -> int:
    return a_el * b_group_size


def product_right(b_el: int, b_group_size: int) -> int:
    return b_el


@dataclass
class WreathData:
    """A wreath product base^k ⋊ C_k plus its canonical base decomposition."""

    group: FiniteGroup
    top_order: int
    base_group: FiniteGroup
    base: tuple[int, ...]  # element ids of base^k
    first_factor: tuple[int, ...]  # coordinate 0 copy of the base group
    rest_factor: tuple[int, ...]  # coordinates 1..k-1

    def encode(self, coords, shift: int) -> int:
        nb = self.base_group.size
        acc = 0
        for c in coords:
            acc = acc * nb + c
        return acc * self.top_order + (shift % self.top_order)


def wreath_product(top_order: int, base: FiniteGroup) -> WreathData:
    """base wr C_k with the cyclic top rotating coordinates.

    Element ((b_0, ..., b_{k-1}), s); multiplication applies the left
    factor's rotation to the right factor's coordinates.
    """
    k = top_order
    if k < 1:
        raise ValueError("top order must be positive")
    nb = base.size
    total = (nb**k) * k
    if total > PRODUCT_SIZE_LIMIT:
        raise BudgetExceeded(f"wreath product order {total} exceeds the size cap")

    def decode(idx):
        shift_part = idx % k
        rest = idx // k
        coords = []
        for _ in range(k):
            coords.append(rest % nb)
            rest //= nb
        return tuple(reversed(coords)), shift_part

    def encode(coords, s):
        acc = 0
        for c in coords:
            acc = acc * nb + c
        return acc * k + (s % k)

    table = np.zeros((total, total), dtype=np.int64)
    decoded = [decode(i) for i in range(total)]
    for i, (f, s) in enumerate(decoded):
        for j, (g, u) in enumerate(decoded):
            combined = tuple(
                base.mul(f[c], g[(c - s) % k]) for c in range(k)
            )
            table[i, j] = encode(combined, s + u)
    labels = [
        "(" + ",".join(base.labels[c] for c in f) + f";{s})" for f, s in decoded
    ]
    group = FiniteGroup(table, labels, name=f"{base.name}wrC{k}")

    id_b = base.identity
    base_ids = tuple(
        i for i, (f, s) in enumerate(decoded) if s == 0
    )
    first = tuple(
        encode((b,) + (id_b,) * (k - 1), 0) for b in range(nb)
    )
    rest = tuple(
        encode((id_b,) + coords, 0)
        for coords in product(range(nb), repeat=k - 1)
    ) if k > 1 else (group.identity,)
    return WreathData(
        group=group,
        top_order=k,
        base_group=base,
        base=base_ids,
        first_factor=first,
        rest_factor=rest,
    )


# -- identity checks ----------------------------------------------------------


@dataclass
class MixedIdentityVerdict:
    holds: bool
    counterexample: dict | None
    substitutions_checked: int

    def to_json_dict(self, group: FiniteGroup, word: "mw.MixedWord") -> dict:
        out = {
            "word": word.render(),
            "group": group.name,
            "verdict": self.holds,
            "substitutions_checked": self.substitutions_checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                f"x{v}": group.render_element(e) for v, e in self.counterexample.items()
            }
        return out


def is_mixed_identity(word: "mw.MixedWord", group: FiniteGroup) -> MixedIdentityVerdict:
    """Exhaustively decide whether word = 1 holds under every substitution.

    The counterexample, when one exists, is the lexicographically first
    assignment in element-id order.
    """
    if word.group is not group:
        raise ValueError("word constants are not resolved in this group")
    ids = word.variable_ids
    nvars = len(ids)
    n = group.size
    if nvars <= 1 and n > SINGLE_VAR_LIMIT:
        raise BudgetExceeded(f"group order {n} exceeds the single-variable cap")
    if n**max(nvars, 1) > ASSIGNMENT_LIMIT:
        raise BudgetExceeded(
            f"{n}^{nvars} substitutions exceed the assignment cap"
        )
    if nvars == 0:
        val = word.constant_value()
        holds = group.is_identity(val)
        return MixedIdentityVerdict(holds, None if holds else {}, 1)
    checked = 0
    for combo in product(range(n), repeat=nvars):
        assignment = dict(zip(ids, combo))
        checked += 1
        if not group.is_identity(mw.evaluate(word, assignment)):
            return MixedIdentityVerdict(False, assignment, checked)
    return MixedIdentityVerdict(True, None, checked)


def factorial_identity_check(group: FiniteGroup, normal_subset, g: int) -> bool:
    """Verify [x^{n!}, g] = 1 for all x, where n = |N| and g in N \\ {1}.

    N must be a normal subgroup containing the nontrivial g; this is the
    canned identity every group with a finite normal subgroup satisfies.
    """
    sub = set(normal_subset)
    if not group.is_normal(sub):
        raise ValueError("N is not a normal subgroup")
    if g not in sub or group.is_identity(g):
        raise ValueError("g must be a nontrivial element of N")
    n = len(sub)
    e = math.factorial(n)
    for x in group.elements():
        xe = group.power(x, e)
        comm = group.mul(
            group.mul(group.inv(xe), group.inv(g)), group.mul(xe, g)
        )
        if not group.is_identity(comm):
            return False
    return True
