"""Finite presentations of window groups B(W) = <a_lo, ..., a_hi>.

A window group is presented on the generators indexed by an integer
interval.  Every generator gets a power relator a_i^p, and every index
tuple inside the window contributes a left-normed commutator relator
whose weight is governed by the tuple's spread: a tuple of spread d
(maximum pairwise index distance) of length c_d + 1 yields the relator
[a_{i_0}, a_{i_1}, ..., a_{i_{c_d}}] = 1.

Conventions, fixed globally:
    [u, v] = u^-1 v^-1 u v
    [u_1, ..., u_k] = [[u_1, ..., u_{k-1}], u_k]

Relator order is deterministic: power relators by generator index, then
commutator relators lexicographically by (spread, index tuple).  Tuples
with i_0 = i_1 are skipped (freely trivial); duplicates by exact letter
sequence are emitted once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CapacityExceeded, ParseError

# A letter is (generator position, sign); a relator is a tuple of letters.
Letter = tuple[int, int]
Relator = tuple[Letter, ...]

DEFAULT_MAX_WINDOW_WIDTH = 6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class CSequence:
    """Non-decreasing class-bound sequence c_1 <= c_2 <= ... , total on n >= 1.

    Two forms: an explicit prefix whose last value repeats forever
    (rule ``"repeat"``), or the identity rule c_n = n beyond the prefix
    (rule ``"identity"``).
    """

    __slots__ = ("prefix", "rule")

    def __init__(self, prefix=(), rule: str = "repeat"):
        prefix = tuple(int(v) for v in prefix)
        if rule not in ("repeat", "identity"):
            raise ParseError(f"unknown CSequence rule {rule!r}")
        if rule == "repeat" and not prefix:
            raise ParseError("repeat-rule CSequence needs a nonempty prefix")
        if any(v < 1 for v in prefix):
            raise ParseError("CSequence entries must be positive")
        if any(a > b for a, b in zip(prefix, prefix[1:])):
            raise ParseError("CSequence prefix must be non-decreasing")
        if rule == "identity" and prefix and prefix[-1] > len(prefix) + 1:
            raise ParseError("identity rule would break monotonicity after the prefix")
        self.prefix = prefix
        self.rule = rule

    @classmethod
    def from_spec(cls, text) -> "CSequence":
        if isinstance(text, CSequence):
            return text
        if isinstance(text, (tuple, list)):
            return cls(tuple(text), "repeat")
        t = str(text).strip().lower()
        if t in ("n", "identity"):
            return cls((), "identity")
        parts = [p.strip() for p in t.split(",") if p.strip() != ""]
        if not parts:
            raise ParseError(f"empty CSequence spec {text!r}")
        try:
            vals = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"bad CSequence spec {text!r}") from None
        return cls(vals, "repeat")

    def spec(self) -> str:
        if self.rule == "identity" and not self.prefix:
            return "n"
        body = ",".join(str(v) for v in self.prefix)
        return body if self.rule == "repeat" else f"{body},identity"

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError("CSequence is indexed from 1")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if self.rule == "repeat":
            return self.prefix[-1]
        return n

    def key(self, width: int) -> tuple[int, ...]:
        """The values that matter for a window of the given width."""
        return tuple(self[d] for d in range(1, width + 1))

    def __eq__(self, other):
        return (
            isinstance(other, CSequence)
            and self.rule == other.rule
            and self.prefix == other.prefix
        )

    def __hash__(self):
        return hash((self.rule, self.prefix))

    def __repr__(self):
        return f"CSequence({self.spec()!r})"


@dataclass(frozen=True)
class Window:
    """Inclusive integer interval [lo, hi] of generator indices."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ParseError(f"empty window [{self.lo}, {self.hi}]")

    @property
    def width(self) -> int:
        return self.hi - self.lo

    @classmethod
    def from_spec(cls, text: str) -> "Window":
        t = str(text).strip()
        if ".." not in t:
            raise ParseError(f"window spec must look like 'lo..hi', got {text!r}")
        a, b = t.split("..", 1)
        try:
            return cls(int(a), int(b))
        except ValueError:
            raise ParseError(f"bad window spec {text!r}") from None

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class RelatorLabel:
    """Provenance of one relator: a power a_i^p or a (spread, weight) commutator."""

    kind: str  # "power" | "commutator"
    index: int | None = None  # generator index for powers
    spread: int | None = None
    weight: int | None = None
    indices: tuple[int, ...] | None = None  # commutator entry indices


def invert_word(word: Relator) -> Relator:
    return tuple((pos, -s) for pos, s in reversed(word))


def left_normed_commutator(positions) -> Relator:
    """Letters of [a_{p_0}, a_{p_1}, ..., a_{p_k}] under the fixed convention."""
    positions = tuple(positions)
    if len(positions) < 2:
        raise ValueError("commutator needs at least two entries")
    w: Relator = ((positions[0], 1),)
    for pos in positions[1:]:
        w = invert_word(w) + ((pos, -1),) + w + ((pos, 1),)
    return w


def _tuples_with_spread(lo: int, hi: int, length: int, spread: int):
    """All index tuples in [lo, hi]^length with max pairwise distance exactly
    `spread`, in lexicographic order.  Branches that already exceed the spread
    are pruned."""
    tup = [0] * length

    def rec(pos, mn, mx):
        if pos == length:
            if mx - mn == spread:
                yield tuple(tup)
            return
        for v in range(lo, hi + 1):
            nmn = v if v < mn else mn
            nmx = v if v > mx else mx
            if nmx - nmn > spread:
                continue
            tup[pos] = v
            yield from rec(pos + 1, nmn, nmx)

    yield from rec(0, hi, lo)


@dataclass(frozen=True)
class Presentation:
    """Generators and relators of one window group."""

    p: int
    c: CSequence
    window: Window
    generator_count: int
    relators: tuple[Relator, ...]
    labels: tuple[RelatorLabel, ...]

    def generator_index(self, pos: int) -> int:
        return self.window.lo + pos

    def relator_text(self, i: int) -> str:
        label = self.labels[i]
        if label.kind == "power":
            return " ".join([f"a{label.index}"] * self.p)
        return "[" + ",".join(f"a{j}" for j in label.indices) + "]"

    def to_text(self) -> str:
        lines = [f"gens {self.generator_count}"]
        lines.extend(self.relator_text(i) for i in range(len(self.relators)))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        rels = []
        for rel, label in zip(self.relators, self.labels):
            entry = {
                "letters": [[self.generator_index(pos), s] for pos, s in rel],
                "kind": label.kind,
            }
            if label.kind == "power":
                entry["index"] = label.index
            else:
                entry["spread"] = label.spread
                entry["weight"] = label.weight
                entry["indices"] = list(label.indices)
            rels.append(entry)
        return {
            "p": self.p,
            "c": self.c.spec(),
            "window": [self.window.lo, self.window.hi],
            "generators": self.generator_count,
            "relators": rels,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def build_window_presentation(
    p: int,
    c,
    window: Window,
    max_width: int = DEFAULT_MAX_WINDOW_WIDTH,
) -> Presentation:
    """Presentation of B(window) for the instance (p, c).

    Relators: a_i^p for every window index, plus one left-normed commutator
    of weight c_d + 1 for every index tuple of exact spread d (1 <= d <=
    window width) whose first two entries differ.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    c = CSequence.from_spec(c)
    if window.width > max_width:
        raise CapacityExceeded(
            f"window width {window.width} exceeds the configured bound {max_width}"
        )
    lo, hi = window.lo, window.hi
    ngens = window.width + 1

    relators: list[Relator] = []
    labels: list[RelatorLabel] = []
    seen: set[Relator] = set()

    for pos in range(ngens):
        rel = ((pos, 1),) * p
        relators.append(rel)
        labels.append(RelatorLabel("power", index=lo + pos))
        seen.add(rel)

    for d in range(1, window.width + 1):
        weight = c[d] + 1
        for tup in _tuples_with_spread(lo, hi, weight, d):
            if tup[0] == tup[1]:
                continue
            rel = left_normed_commutator(tuple(i - lo for i in tup))
            if rel in seen:
                continue
            seen.add(rel)
            relators.append(rel)
            labels.append(
                RelatorLabel("commutator", spread=d, weight=weight, indices=tup)
            )

    return Presentation(
        p=p,
        c=c,
        window=window,
        generator_count=ngens,
        relators=tuple(relators),
        labels=tuple(labels),
    )


def relator_count(p: int, c, window: Window, max_width: int = DEFAULT_MAX_WINDOW_WIDTH) -> int:
    return len(build_window_presentation(p, c, window, max_width).relators)
