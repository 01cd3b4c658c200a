"""Command-line front door.

Subcommands: order, check, grig (act / trivial / verify-identity),
search, drive, verify, selftest.  Every command is deterministic given
its flags; --threads only sets the advertised parallelism (results are
independent of it, the exact integer core executes sequentially), and
--seed affects only the sampled selftest subcommand.

Exit codes: 0 success, 2 capacity/budget exceeded, 3 verification
failure, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import grigorchuk, identity_lab, mif_search
from . import mixed_words as mw
from .errors import BudgetExceeded, CapacityExceeded, MiflabError, ParseError, VerificationError
from .limit_group import instance
from .mif_search import SearchBounds
from .parser import parse_mixed_word
from .presentations import Window

EXIT_OK = 0
EXIT_CAPACITY = 2
EXIT_VERIFICATION = 3
EXIT_PARSE = 4


@dataclass
class InstanceConfig:
    p: int
    c: str
    max_cosets: int
    max_window_width: int
    cache_dir: str | None
    bounds: SearchBounds

    @classmethod
    def from_args(cls, args) -> "InstanceConfig":
        return cls(
            p=args.p,
            c=args.c,
            max_cosets=args.max_cosets,
            max_window_width=args.max_window_width,
            cache_dir=args.cache_dir,
            bounds=SearchBounds(
                max_support_radius=args.max_support_radius,
                max_beta=args.max_beta,
                max_word_length=args.max_word_length,
                max_candidates=args.max_candidates,
            ),
        )

    def group(self):
        return instance(
            self.p,
            self.c,
            max_cosets=self.max_cosets,
            max_window_width=self.max_window_width,
            cache_dir=self.cache_dir,
        )


def _add_instance_flags(sub):
    sub.add_argument("--p", type=int, default=2, help="prime p (default 2)")
    sub.add_argument("--c", default="n", help="class-bound sequence: 'n' or '1,2,2'")
    sub.add_argument("--max-cosets", type=int, default=1_000_000, dest="max_cosets")
    sub.add_argument("--max-window-width", type=int, default=6, dest="max_window_width")
    sub.add_argument("--cache-dir", default=None, dest="cache_dir",
                     help="table cache directory (default: $MIFLAB_CACHE)")
    sub.add_argument("--max-support-radius", type=int, default=3, dest="max_support_radius")
    sub.add_argument("--max-beta", type=int, default=3, dest="max_beta")
    sub.add_argument("--max-word-length", type=int, default=16, dest="max_word_length")
    sub.add_argument("--max-candidates", type=int, default=100_000, dest="max_candidates")


def _emit(args, payload: dict, text: str | None = None):
    if args.json or text is None:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------------


def cmd_order(args) -> int:
    config = InstanceConfig.from_args(args)
    group = config.group()
    window = Window.from_spec(args.window)
    n = group.window_order(window)
    _emit(
        args,
        {"p": group.p, "c": group.c.spec(), "window": str(window), "order": n},
        str(n),
    )
    return EXIT_OK


def cmd_check(args) -> int:
    if args.id == "direct-product":
        A = identity_lab.small_group(args.A)
        B = identity_lab.small_group(args.B)
        G = identity_lab.direct_product(A, B)
        nb = B.size
        checks = 0
        holds = True
        witness = None
        for a_el in range(1, A.size):
            for b_el in range(1, B.size):
                ea = identity_lab.product_left(a_el, nb)
                eb = identity_lab.product_right(b_el, nb)
                word = mw.left_normed(
                    [mw.variable(G), mw.constant(G, ea), mw.constant(G, eb)]
                )
                verdict = identity_lab.is_mixed_identity(word, G)
                checks += verdict.substitutions_checked
                if not verdict.holds:
                    holds = False
                    witness = verdict.to_json_dict(G, word)
                    break
            if not holds:
                break
        payload = {
            "identity": "[[x,a],b]",
            "group": G.name,
            "verdict": holds,
            "substitutions_checked": checks,
        }
        if witness:
            payload["counterexample"] = witness
        _emit(args, payload, f"{holds}")
        return EXIT_OK
    if args.id == "wreath":
        base = identity_lab.small_group(args.base)
        top = identity_lab.small_group(args.top)
        # the top must be cyclic: its order is the rotation count
        k = top.size
        data = identity_lab.wreath_product(k, base)
        G = data.group
        holds = True
        checks = 0
        payload_extra = None
        for a_el in data.first_factor:
            if G.is_identity(a_el):
                continue
            for b_el in data.rest_factor:
                if G.is_identity(b_el):
                    continue
                word = mw.left_normed(
                    [mw.variable(G), mw.constant(G, a_el), mw.constant(G, a_el), mw.constant(G, b_el)]
                )
                verdict = identity_lab.is_mixed_identity(word, G)
                checks += verdict.substitutions_checked
                if not verdict.holds:
                    holds = False
                    payload_extra = verdict.to_json_dict(G, word)
                    break
            if not holds:
                break
        payload = {
            "identity": "[[[x,a],a],b]",
            "group": G.name,
            "verdict": holds,
            "substitutions_checked": checks,
        }
        if payload_extra:
            payload["counterexample"] = payload_extra
        _emit(args, payload, f"{holds}")
        return EXIT_OK
    if args.id == "factorial":
        G = identity_lab.small_group(args.group)
        if args.normal:
            gens = [G.element_by_label(x.strip()) for x in args.normal.split(",")]
            N = G.closure(gens)
        else:
            raise ParseError("--normal is required for the factorial check")
        g = G.element_by_label(args.g) if args.g else next(
            e for e in sorted(N) if not G.is_identity(e)
        )
        ok = identity_lab.factorial_identity_check(G, N, g)
        payload = {
            "identity": f"[x^{len(N)}!, g]",
            "group": G.name,
            "normal_order": len(N),
            "g": G.render_element(g),
            "verdict": ok,
        }
        _emit(args, payload, f"{ok}")
        return EXIT_OK
    if args.word:
        G = identity_lab.small_group(args.group)
        bound = identity_lab.GroupWithConstants(G, G.constants())
        word = parse_mixed_word(args.word, bound.group, constants=bound.constants)
        verdict = identity_lab.is_mixed_identity(word, bound.group)
        payload = verdict.to_json_dict(bound.group, word)
        _emit(args, payload, f"{verdict.holds}")
        return EXIT_OK
    raise ParseError("check needs --id or --word")


def cmd_grig(args) -> int:
    if args.grig_command == "act":
        word = grigorchuk.reduce_word(args.word) if args.reduce else args.word
        result = grigorchuk.act(word, args.string)
        _emit(args, {"word": args.word, "string": args.string, "result": result}, result)
        return EXIT_OK
    if args.grig_command == "trivial":
        verdict = grigorchuk.is_trivial(args.word)
        payload = {"word": args.word, "trivial": verdict}
        if not verdict:
            payload["moved_string"] = grigorchuk.find_moved_string(args.word)
        _emit(args, payload, str(verdict))
        return EXIT_OK
    if args.grig_command == "verify-identity":
        report = grigorchuk.verify_grig_identity(args.max_len)
        _emit(
            args,
            report.to_json_dict(),
            f"checked {report.words_checked} words, {len(report.violations)} violations",
        )
        return EXIT_OK if report.ok else EXIT_VERIFICATION
    raise ParseError(f"unknown grig subcommand {args.grig_command!r}")


def cmd_search(args) -> int:
    config = InstanceConfig.from_args(args)
    group = config.group()
    word = parse_mixed_word(args.word, group)
    if word.is_empty():
        _emit(args, {"word": args.word, "status": mif_search.TRIVIAL_IN_FREE_PRODUCT}, "trivial in free product")
        return EXIT_OK
    result = mif_search.find_witness(word, config.bounds)
    payload = {
        "word": word.render(),
        "status": result.status,
        "candidates_tried": result.candidates_tried,
    }
    text = result.status
    if result.status == mif_search.WITNESS_FOUND:
        payload["witness"] = result.witness.render()
        payload["evaluation_normal_form"] = result.value.render_canonical()
        text = f"witness {result.witness.render()}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_drive(args) -> int:
    config = InstanceConfig.from_args(args)
    group = config.group()
    result = mif_search.drive(group, args.count, config.bounds)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            mif_search.write_certificates(result, group, fh)
    else:
        mif_search.write_certificates(result, group, sys.stdout)
    return EXIT_OK if result.complete else EXIT_CAPACITY


def cmd_verify(args) -> int:
    with open(args.certificates, "r", encoding="utf-8") as fh:
        report = mif_search.verify_certificates(fh.read())
    payload = {
        "checked": report.checked,
        "witnesses_ok": report.witnesses_ok,
        "failures": [{"line": l, "reason": r} for l, r in report.failures],
    }
    _emit(args, payload, f"checked {report.checked}, failures {len(report.failures)}")
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_selftest(args) -> int:
    """Sampled invariants; the only subcommand whose work depends on --seed."""
    rng = random.Random(args.seed)
    config = InstanceConfig.from_args(args)
    group = config.group()
    failures = []
    for _ in range(args.samples):
        # random narrow-support elements; raw-level group laws must hold exactly
        lo = rng.randint(-2, 0)
        letters = [(rng.randint(lo, lo + 2), rng.randint(1, group.p - 1)) for _ in range(rng.randint(0, 4))]
        beta = rng.randint(-2, 2)
        g = group.element(letters, beta)
        h = group.element([(rng.randint(-1, 1), 1)], rng.randint(-1, 1))
        k = group.element([(rng.randint(0, 2), 1)])
        if not ((g * h) * k == g * (h * k)):
            failures.append("associativity")
        if not (g * g.inverse()).is_trivial():
            failures.append("inverse")
        img = g.abelianize()
        if img.nonzero_on_a_part and g.is_trivial():
            failures.append("oracle-soundness")
    payload = {"seed": args.seed, "samples": args.samples, "failures": failures}
    _emit(args, payload, "ok" if not failures else f"failures: {failures}")
    return EXIT_OK if not failures else EXIT_VERIFICATION


# -- argument plumbing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="miflab",
        description="Exact workbench for window p-groups, mixed identities and witness search",
    )
    ap.add_argument("--json", action="store_true", help="emit JSON output")
    ap.add_argument("--threads", type=int, default=0,
                    help="advertised parallelism; results are independent of it")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("order", help="order of a window group B(window)")
    _add_instance_flags(sp)
    sp.add_argument("--window", required=True, help="index window 'lo..hi'")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("check", help="canned or explicit mixed-identity checks on finite groups")
    sp.add_argument("--id", choices=["direct-product", "wreath", "factorial"])
    sp.add_argument("--A", help="left factor for direct-product")
    sp.add_argument("--B", help="right factor for direct-product")
    sp.add_argument("--base", help="wreath base group")
    sp.add_argument("--top", help="wreath top group (cyclic)")
    sp.add_argument("--group", help="group for --word or --id factorial")
    sp.add_argument("--normal", help="labels generating the normal subgroup (factorial)")
    sp.add_argument("--g", help="label of the nontrivial element of N (factorial)")
    sp.add_argument("--word", help="mixed word over the group's element labels")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("grig", help="Grigorchuk group commands")
    gsub = sp.add_subparsers(dest="grig_command", required=True)
    g1 = gsub.add_parser("act", help="apply a word to a binary string")
    g1.add_argument("--word", required=True)
    g1.add_argument("--string", required=True)
    g1.add_argument("--reduce", action="store_true")
    g2 = gsub.add_parser("trivial", help="decide the word problem")
    g2.add_argument("--word", required=True)
    g3 = gsub.add_parser("verify-identity", help="check [[[[x,b],d],d],ada]=1 exhaustively")
    g3.add_argument("--max-len", type=int, default=6, dest="max_len")
    sp.set_defaults(func=cmd_grig)

    sp = sub.add_parser("search", help="find a witness for a single-variable word")
    _add_instance_flags(sp)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("drive", help="run the certificate-producing driver")
    _add_instance_flags(sp)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--out", help="certificate JSONL file (default: stdout)")
    sp.set_defaults(func=cmd_drive)

    sp = sub.add_parser("verify", help="re-check a certificate file")
    sp.add_argument("certificates")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("selftest", help="sampled invariant checks")
    _add_instance_flags(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=200)
    sp.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 0:
        print(json.dumps({"error": "threads must be non-negative"}), file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(json.dumps({"error": "parse", "detail": str(exc)}), file=sys.stderr)
        return EXIT_PARSE
    except (CapacityExceeded, BudgetExceeded) as exc:
        print(json.dumps({"error": "capacity", "detail": str(exc)}), file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as exc:
        print(json.dumps({"error": "verification", "detail": str(exc)}), file=sys.stderr)
        return EXIT_VERIFICATION
    except MiflabError as exc:
        print(json.dumps({"error": "miflab", "detail": str(exc)}), file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
