"""Witness search over single-variable mixed words, with checkable certificates.

Words over the alphabet {x, x^-1, a_0, a_0^-1, t, t^-1} are enumerated
shortlex (variables first in the letter order), reduced in the free
product, and deduplicated.  For each word the driver searches for a
witness g = a * t^beta in canonical order (increasing support radius,
then |beta|, then shortlex a-part, positive beta before negative) such
that w(g) is nontrivial, and records a certificate.  Witnesses always
re-verify; an exhausted search is reported honestly as inconclusive, not
escalated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from . import mixed_words as mw
from .errors import CapacityExceeded, VerificationError
from .limit_group import AWord, GElement, LimitGroup, instance
from .parser import parse_element, parse_mixed_word

TRIVIAL_IN_FREE_PRODUCT = "TrivialInFreeProduct"
WITNESS_FOUND = "WitnessFound"
SEARCH_EXHAUSTED = "SearchExhausted"


@dataclass(frozen=True)
class SearchBounds:
    max_support_radius: int = 3
    max_beta: int = 3
    max_word_length: int = 16
    max_candidates: int = 100_000

    def __post_init__(self):
        for name in ("max_support_radius", "max_beta", "max_word_length", "max_candidates"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def to_json_dict(self) -> dict:
        return {
            "max_support_radius": self.max_support_radius,
            "max_beta": self.max_beta,
            "max_word_length": self.max_word_length,
            "max_candidates": self.max_candidates,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SearchBounds":
        return cls(
            max_support_radius=d["max_support_radius"],
            max_beta=d["max_beta"],
            max_word_length=d["max_word_length"],
            max_candidates=d["max_candidates"],
        )


@dataclass
class Certificate:
    index: int
    word: str
    status: str
    witness: str | None
    evaluation_normal_form: str | None
    bounds: SearchBounds
    candidates_tried: int

    def to_json_dict(self, group: LimitGroup) -> dict:
        return {
            "index": self.index,
            "word": self.word,
            "status": self.status,
            "witness": self.witness,
            "evaluation_normal_form": self.evaluation_normal_form,
            "bounds": self.bounds.to_json_dict(),
            "candidates_tried": self.candidates_tried,
            "instance": {"p": group.p, "c": group.c.spec()},
        }


@dataclass
class DriveResult:
    certificates: list
    complete: bool
    reason: str | None
    witness_set: list  # the recorded w_i(g_i) values, all nontrivial


@dataclass
class VerifyReport:
    checked: int
    witnesses_ok: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


# -- word enumeration ----------------------------------------------------------


def _alphabet(group: LimitGroup):
    """Letter order: x < x^-1 < a_0 < a_0^-1 < t < t^-1."""
    return (
        ("v", 1),
        ("v", -1),
        ("c", group.generator(0)),
        ("c", group.generator(0, group.p - 1)),
        ("c", group.t_power(1)),
        ("c", group.t_power(-1)),
    )


def enumerate_words(group: LimitGroup, count: int, max_word_length: int = 16):
    """First `count` distinct nonempty reduced words, shortlex over the
    letter alphabet; strings reducing to an earlier word (or to the empty
    word) are skipped."""
    if count < 1:
        raise ValueError("count must be at least 1")
    letters = _alphabet(group)
    seen = set()
    out = []
    for length in range(1, max_word_length + 1):
        for combo in product(letters, repeat=length):
            syllables = [
                mw.var_syllable(1, item[1]) if item[0] == "v" else mw.const_syllable(item[1])
                for item in combo
            ]
            word = mw.reduce(group, syllables)
            if word.is_empty():
                continue
            key = word.structural_key()
            if key in seen:
                continue
            seen.add(key)
            out.append(word)
            if len(out) == count:
                return out
    raise CapacityExceeded(
        f"could not reach {count} words within length {max_word_length}"
    )


# -- candidate enumeration -------------------------------------------------------


def candidate_elements(group: LimitGroup, bounds: SearchBounds):
    """Candidates g = a * t^beta in canonical order.

    Order: support radius ascending; within a radius, |beta| ascending;
    within that, shortlex a-part (the window table's coset order), with
    +beta before -beta.  A-parts whose canonical support fits a smaller
    radius already appeared there and are skipped.
    """
    for radius in range(bounds.max_support_radius + 1):
        table = group.table_for_window(-radius, radius)
        words = []
        for coset in range(table.coset_count):
            letters = tuple(
                (pos - radius, 1 if s > 0 else group.p - 1)
                for pos, s in table.words[coset]
            )
            word = AWord(group.p, letters)
            if radius > 0:
                sup = word.support
                if sup is None or (sup[0] > -radius and sup[1] < radius):
                    continue
            words.append(word)
        for abs_beta in range(bounds.max_beta + 1):
            for word in words:
                yield GElement(group, word, abs_beta)
                if abs_beta:
                    yield GElement(group, word, -abs_beta)


@dataclass
class FindResult:
    status: str
    witness: GElement | None
    value: GElement | None
    candidates_tried: int


def find_witness(word: "mw.MixedWord", bounds: SearchBounds) -> FindResult:
    """First candidate (canonical order) on which the word evaluates away
    from the identity.  The witness re-verifies before being returned."""
    group = word.group
    if word.is_empty():
        raise ValueError("empty word has no witness")
    if any(v != 1 for v in word.variable_ids):
        raise ValueError("witness search expects a single-variable word")
    tried = 0
    for g in candidate_elements(group, bounds):
        if tried >= bounds.max_candidates:
            break
        tried += 1
        value = mw.evaluate(word, {1: g}) if word.variable_ids else word.constant_value()
        if not value.is_trivial():
            recheck = mw.evaluate(word, {1: g}) if word.variable_ids else word.constant_value()
            if recheck.is_trivial():
                raise VerificationError(f"witness for {word.render()!r} failed re-check")
            return FindResult(WITNESS_FOUND, g, value, tried)
    return FindResult(SEARCH_EXHAUSTED, None, None, tried)


# -- the driver -------------------------------------------------------------------


def drive(group: LimitGroup, count: int, bounds: SearchBounds | None = None) -> DriveResult:
    """Certificate log for the first `count` enumerated words.

    The witness set F collects every recorded w_i(g_i); after every step
    all members must still be nontrivial (witness-set persistence).  On
    CapacityExceeded the partial log is returned flagged incomplete.
    """
    bounds = bounds or SearchBounds()
    certificates = []
    witness_set = []
    complete = True
    reason = None
    try:
        words = enumerate_words(group, count, bounds.max_word_length)
        for i, word in enumerate(words, start=1):
            if word.is_empty():
                certificates.append(
                    Certificate(i, word.render(), TRIVIAL_IN_FREE_PRODUCT, None, None, bounds, 0)
                )
                continue
            result = find_witness(word, bounds)
            if result.status == WITNESS_FOUND:
                certificates.append(
                    Certificate(
                        i,
                        word.render(),
                        WITNESS_FOUND,
                        result.witness.render(),
                        result.value.render_canonical(),
                        bounds,
                        result.candidates_tried,
                    )
                )
                witness_set.append(result.value)
            else:
                certificates.append(
                    Certificate(
                        i, word.render(), SEARCH_EXHAUSTED, None, None, bounds,
                        result.candidates_tried,
                    )
                )
            for member in witness_set:
                if member.is_trivial():
                    raise VerificationError(
                        "witness-set persistence violated: a recorded value became trivial"
                    )
    except CapacityExceeded as exc:
        complete = False
        reason = str(exc)
    return DriveResult(certificates, complete, reason, witness_set)


def write_certificates(result: DriveResult, group: LimitGroup, fh) -> None:
    """JSON-lines dump: one certificate per line plus a trailing run summary."""
    for cert in result.certificates:
        fh.write(json.dumps(cert.to_json_dict(group), sort_keys=True, separators=(",", ":")))
        fh.write("\n")
    summary = {
        "run_complete": result.complete,
        "certificates": len(result.certificates),
    }
    if result.reason:
        summary["reason"] = result.reason
    fh.write(json.dumps(summary, sort_keys=True, separators=(",", ":")))
    fh.write("\n")


def certificates_to_lines(result: DriveResult, group: LimitGroup) -> str:
    import io

    buf = io.StringIO()
    write_certificates(result, group, buf)
    return buf.getvalue()


def verify_certificates(lines) -> VerifyReport:
    """Independent re-check of a certificate stream.

    Every witness is re-parsed and the word re-evaluated from scratch;
    re-parse failures, trivial evaluations, and malformed rows are
    failures.  SearchExhausted rows carry no claim and only need to be
    well-formed.
    """
    report = VerifyReport(checked=0, witnesses_ok=0)
    if isinstance(lines, str):
        lines = lines.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            data = json.loads(raw)
        except json.JSONDecodeError:
            report.failures.append((lineno, "not valid JSON"))
            continue
        if "run_complete" in data:
            continue
        report.checked += 1
        try:
            inst = data["instance"]
            group = instance(inst["p"], inst["c"])
            word = parse_mixed_word(data["word"], group)
            status = data["status"]
            if status == TRIVIAL_IN_FREE_PRODUCT:
                if not word.is_empty():
                    report.failures.append((lineno, "word is not trivial in the free product"))
                continue
            if status == SEARCH_EXHAUSTED:
                continue
            if status != WITNESS_FOUND:
                report.failures.append((lineno, f"unknown status {status!r}"))
                continue
            witness = parse_element(data["witness"], group)
            value = mw.evaluate(word, {1: witness}) if word.variable_ids else word.constant_value()
            if value.is_trivial():
                report.failures.append((lineno, "witness evaluation is trivial"))
                continue
            if data.get("evaluation_normal_form") != value.render_canonical():
                report.failures.append((lineno, "evaluation normal form mismatch"))
                continue
            report.witnesses_ok += 1
        except Exception as exc:  # malformed certificates must not crash the verifier
            report.failures.append((lineno, f"{type(exc).__name__}: {exc}"))
    return report
