"""Exact engine for the Grigorchuk group acting on the binary rooted tree.

Generators a, b, c, d act on finite binary strings by

    a(0w) = 1w    a(1w) = 0w
    b(0w) = 0 a(w)    b(1w) = 1 c(w)
    c(0w) = 0 a(w)    c(1w) = 1 d(w)
    d(0w) = 0 w       d(1w) = 1 b(w)

Words multiply by concatenation and act right-to-left.  The word problem
is decided exactly by first-level splitting: an even-a-count word rewrites
over {b, c, d, aba, aca, ada} and maps into G x G through

    b -> (a, c)   aba -> (c, a)
    c -> (a, d)   aca -> (d, a)
    d -> (1, b)   ada -> (b, 1)

and a word is trivial iff both coordinates are, recursively.  A depth-12
action oracle (tree-level permutations) provides the independent
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

KLEIN = ("b", "c", "d")
# bc = cb = d, bd = db = c, cd = dc = b; equal letters cancel
_KLEIN_MUL = {
    ("b", "c"): "d",
    ("c", "b"): "d",
    ("b", "d"): "c",
    ("d", "b"): "c",
    ("c", "d"): "b",
    ("d", "c"): "b",
    ("b", "b"): "",
    ("c", "c"): "",
    ("d", "d"): "",
}
_NEXT = {"b": "c", "c": "d", "d": "b"}  # the recursion letter on the 1-branch
ORACLE_DEPTH = 12


def _push(out: list, ch: str) -> None:
    while True:
        if not out:
            out.append(ch)
            return
        top = out[-1]
        if top == "a" and ch == "a":
            out.pop()
            return
        if top in KLEIN and ch in KLEIN:
            prod = _KLEIN_MUL[(top, ch)]
            out.pop()
            if not prod:
                return
            ch = prod
            continue
        out.append(ch)
        return


def reduce_word(word: str) -> str:
    """Reduced alternating form, action-equivalent to the input."""
    out: list = []
    for ch in word:
        if ch not in ("a", "b", "c", "d"):
            raise ValueError(f"bad Grigorchuk letter {ch!r}")
        _push(out, ch)
    return "".join(out)


def invert(word: str) -> str:
    # every generator is an involution, so inversion is reversal
    return word[::-1]


def commutator(u: str, v: str) -> str:
    return reduce_word(invert(u) + invert(v) + u + v)


def act_letter(ch: str, s: str) -> str:
    if not s:
        return s
    head, tail = s[0], s[1:]
    if ch == "a":
        return ("1" if head == "0" else "0") + tail
    if head == "0":
        if ch == "d":
            return s
        return "0" + act_letter("a", tail)
    return "1" + act_letter(_NEXT[ch], tail)


def act(word: str, s: str) -> str:
    """Apply the word to a binary string, letters acting right to left."""
    for ch in reversed(word):
        s = act_letter(ch, s)
    return s


def a_count(word: str) -> int:
    return word.count("a")


def in_first_level_stabilizer(word: str) -> bool:
    return a_count(word) % 2 == 0


_PHI = {
    "b": ("a", "c"),
    "c": ("a", "d"),
    "d": ("", "b"),
    "aba": ("c", "a"),
    "aca": ("d", "a"),
    "ada": ("b", ""),
}


def split(word: str) -> tuple[str, str]:
    """First-level splitting of a word in the stabilizer H.

    Rewrites over {b, c, d, aba, aca, ada} and applies the coordinate map;
    both outputs are reduced and strictly shorter than the input once the
    input has more than one letter.
    """
    word = reduce_word(word)
    if a_count(word) % 2:
        raise ValueError(f"{word!r} has odd a-count; not in the stabilizer")
    left_parts = []
    right_parts = []
    conjugated = False
    for ch in word:
        if ch == "a":
            conjugated = not conjugated
            continue
        l, r = _PHI["a" + ch + "a"] if conjugated else _PHI[ch]
        left_parts.append(l)
        right_parts.append(r)
    return reduce_word("".join(left_parts)), reduce_word("".join(right_parts))


@lru_cache(maxsize=None)
def _is_trivial_reduced(word: str) -> bool:
    if not word:
        return True
    if a_count(word) % 2:
        return False
    left, right = split(word)
    return _is_trivial_reduced(left) and _is_trivial_reduced(right)


def is_trivial(word: str) -> bool:
    """Exact word-problem decision by recursive splitting."""
    return _is_trivial_reduced(reduce_word(word))


# -- depth-bounded action oracle ----------------------------------------------


@lru_cache(maxsize=None)
def level_permutations(depth: int) -> dict[str, np.ndarray]:
    """Permutations of the 2^depth strings of one tree level, per generator.

    Strings are indexed by their integer value with the first character as
    the most significant bit.
    """
    if depth == 0:
        zero = np.zeros(1, dtype=np.int64)
        return {ch: zero.copy() for ch in "abcd"}
    prev = level_permutations(depth - 1)
    half = 1 << (depth - 1)
    idx = np.arange(1 << depth, dtype=np.int64)
    perms = {"a": idx ^ half}
    for ch, (low_ch, high_ch) in (("b", ("a", "c")), ("c", ("a", "d")), ("d", (None, "b"))):
        low = prev[low_ch] if low_ch else np.arange(half, dtype=np.int64)
        high = prev[high_ch]
        perms[ch] = np.concatenate([low, high + half])
    return perms


def word_permutation(word: str, depth: int) -> np.ndarray:
    # fold left: P_{w0...wk} = P_{w0} o ... o P_{wk} with (P o Q)[i] = P[Q[i]]
    perms = level_permutations(depth)
    acc = np.arange(1 << depth, dtype=np.int64)
    for ch in word:
        acc = acc[perms[ch]]
    return acc


def acts_trivially_to_depth(word: str, depth: int = ORACLE_DEPTH) -> bool:
    """True iff the word fixes every string of the given length (hence all
    shorter ones too)."""
    perm = word_permutation(word, depth)
    return bool(np.array_equal(perm, np.arange(1 << depth, dtype=np.int64)))


def find_moved_string(word: str, max_depth: int = ORACLE_DEPTH) -> str | None:
    """Shortest string moved by the word, searching level by level."""
    for depth in range(1, max_depth + 1):
        perm = word_permutation(word, depth)
        moved = np.nonzero(perm != np.arange(1 << depth, dtype=np.int64))[0]
        if moved.size:
            return format(int(moved[0]), f"0{depth}b")
    return None


# -- enumeration and the canned identity --------------------------------------


def reduced_words(max_len: int):
    """All reduced words of length <= max_len, in shortlex order.

    Reduced words alternate a-letters and Klein letters, so they are
    generated directly in alternating form (the identity included).
    """
    yield ""
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            last = w[-1] if w else None
            if last == "a":
                choices = KLEIN
            elif last is None:
                choices = ("a",) + KLEIN
            else:
                choices = ("a",)
            for ch in choices:
                nw = w + ch
                nxt.append(nw)
                yield nw
        frontier = nxt


@dataclass
class IdentityReport:
    word: str
    max_len: int
    words_checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "identity": self.word,
            "max_len": self.max_len,
            "words_checked": self.words_checked,
            "violations": list(self.violations),
        }


def grig_identity_word(g: str) -> str:
    """The witness word [[[[g, b], d], d], ada], reduced."""
    w = commutator(g, "b")
    w = commutator(w, "d")
    w = commutator(w, "d")
    return commutator(w, "ada")


def verify_grig_identity(max_len: int) -> IdentityReport:
    """Check [[[[x, b], d], d], ada] = 1 for every reduced word of length
    <= max_len, via the recursive solver."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    checked = 0
    violations = []
    for g in reduced_words(max_len):
        checked += 1
        if not is_trivial(grig_identity_word(g)):
            violations.append(g)
    return IdentityReport(
        word="[[[[x,b],d],d],ada]",
        max_len=max_len,
        words_checked=checked,
        violations=violations,
    )
