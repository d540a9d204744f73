"""Command line front end.

Exit codes: 0 success (or solvable), 1 unsolvable, 2 invalid input,
3 internal verification failure.  Seeds come from --seed, falling back to
the REVCUBE_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable

import numpy as np

from . import counting, cube, geometry, oracle, sims

EXIT_OK = 0
EXIT_UNSOLVABLE = 1
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _seed_from(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("REVCUBE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"error: REVCUBE_SEED must be an integer, got {env!r}", file=sys.stderr)
            raise SystemExit(EXIT_BAD_INPUT) from None
    return 0


def _read_state(path: str) -> cube.CubeState:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: cannot read {path}: {e.strerror}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT) from None
    try:
        return cube.parse_state(text)
    except ValueError as e:
        print(f"error: {path}: {e}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT) from None


def _cmd_count(args: argparse.Namespace) -> int:
    if args.mode == "marked":
        print(counting.num_classes_marked())
    else:
        print(counting.num_classes_mechanical())
    return EXIT_OK


def _cmd_prob(args: argparse.Namespace) -> int:
    if args.mc is not None:
        if args.mc <= 0 or args.workers < 1:
            print("error: --mc and --workers must be positive", file=sys.stderr)
            return EXIT_BAD_INPUT
        est, err = counting.estimate_probability(
            args.mode, args.mc, _seed_from(args), args.workers
        )
        print(f"estimate: {est.numerator}/{est.denominator}")
        print(f"stderr: {err:.6e}")
    else:
        p = counting.exact_probability(args.mode)
        print(f"{p.numerator}/{p.denominator}")
    return EXIT_OK


def _cmd_solvable(args: argparse.Namespace) -> int:
    t = _read_state(args.file)
    if args.mode == "mechanical":
        if not cube.preserves_marking(t):
            print("not mechanically admissible", file=sys.stderr)
            return EXIT_BAD_INPUT
        solvable = cube.is_solvable_mechanical(t)
    else:
        solvable = cube.is_solvable(t)
    if solvable:
        print("solvable")
        return EXIT_OK
    print(f"unsolvable: {cube.classify(t).to_string()}")
    return EXIT_UNSOLVABLE


def _cmd_invariant(args: argparse.Namespace) -> int:
    print(cube.classify(_read_state(args.file)).to_string())
    return EXIT_OK


def _cmd_canonical(args: argparse.Namespace) -> int:
    try:
        cls = cube.StateClass.from_string(args.cls)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    sys.stdout.write(cube.format_state(cube.representative(cls)))
    return EXIT_OK


def _cmd_random_assembly(args: argparse.Namespace) -> int:
    rng = _rng(_seed_from(args))
    if args.mode == "mechanical":
        t = cube.random_mechanical_assembly(rng)
    else:
        t = cube.random_assembly(rng)
    sys.stdout.write(cube.format_state(t))
    return EXIT_OK


# ---------------------------------------------------------------------------
# self checks


def _verify_rows(level: str) -> Iterable[tuple[str, bool, str]]:
    for name, ok, detail in geometry.validate_geometry():
        yield f"geometry: {name}", ok, detail

    ident = cube.identity_state()
    for m in cube.Move:
        g = cube.generator(m)
        yield f"generator {m.value} has order 4", (
            g * g * g * g == ident and g * g != ident
        ), ""
        yield f"generator {m.value} preserves the marking", cube.preserves_marking(
            g
        ), ""
        yield f"generator {m.value} is licit", cube.is_licit(g), ""

    rng = _rng(20260818)
    ok = True
    for _ in range(200):
        a = cube.random_mechanical_assembly(rng)
        b = cube.random_mechanical_assembly(rng)
        ta, sa = cube.characteristic(a)
        tb, sb = cube.characteristic(b)
        if cube.characteristic(a * b) != ((ta + tb) % 3, sa * sb):
            ok = False
            break
    yield "characteristic is a homomorphism (200 random pairs)", ok, ""

    moves = list(cube.Move)
    ok = True
    for _ in range(100):
        t = cube.random_assembly(rng)
        i = cube.random_relabeling(rng)
        word = [moves[int(rng.integers(0, 12))] for _ in range(8)]
        l = cube.apply_word(word)
        if cube.classify(i * t * l) != cube.classify(t):
            ok = False
            break
        if cube.is_solvable(t) != (cube.classify(t) == cube.classify(ident)):
            ok = False
            break
    yield "class invariant constant under relabeling and licit moves", ok, ""

    po = oracle.pair_orbits()
    ok = po == [((0, 0), (1, 1)), ((0, 1),), ((1, 0),)]
    points, group, act = oracle.pair_flip_action()
    ok = ok and oracle.burnside_count(points, group, act) == 3
    yield "pair-flip orbit table (3 classes, merged (0,0)~(1,1))", ok, ""

    ts = oracle.twist_sign_orbits()
    ok = len(ts) == 3 and all(len(o) == 2 for o in ts)
    points, group, act = oracle.twist_sign_action()
    ok = ok and oracle.burnside_count(points, group, act) == 3
    yield "twist-sign orbit table (3 classes, sign collapses)", ok, ""

    if level == "full":
        model = oracle.MiniModel(2, 2, 1)
        expect_classes, expect_free = 27, 3
    else:
        model = oracle.MiniModel(1, 1, 1)
        expect_classes, expect_free = 9, 3
    try:
        model.check_subgroup_constructions()
        ok, detail = True, ""
    except AssertionError as e:
        ok, detail = False, str(e)
    yield f"mini model {model.pairs}/{model.corners}/{model.blocks} subgroups", ok, detail
    got = model.class_count()
    yield (
        f"mini class count = {expect_classes}",
        got == expect_classes,
        f"got {got}",
    )
    got = model.class_count_flip_free()
    yield f"mini flip-free class count = {expect_free}", got == expect_free, f"got {got}"
    total, bad = model.sweep_closed_form()
    yield (
        f"closed-form solvability matches brute force on {total} elements",
        bad == 0,
        f"{bad} mismatches",
    )
    from fractions import Fraction

    want = Fraction(1, 3 * 2**model.pairs)
    got_p = model.solvable_probability()
    yield f"mini solvable probability = {want}", got_p == want, f"got {got_p}"
    got_p = model.solvable_probability_flip_free()
    yield f"mini flip-free probability = 1/3", got_p == Fraction(1, 3), f"got {got_p}"

    if level == "full":
        sgs = sims.build_bsgs([sims.embed(g) for g in cube.all_generators()])
        want_order = counting.num_licit()
        yield (
            "slice-move group order matches the closed formula",
            sgs.order() == want_order,
            f"got {sgs.order()}",
        )
        ok = True
        for _ in range(1000):
            t = cube.random_mechanical_assembly(rng)
            if sgs.contains(sims.embed(t)) != cube.is_licit(t):
                ok = False
                break
        yield "sifting agrees with the licitness predicate (1000 samples)", ok, ""


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for name, ok, detail in _verify_rows(args.level):
        if ok:
            print(f"ok: {name}")
        else:
            failures += 1
            suffix = f" ({detail})" if detail else ""
            print(f"FAIL: {name}{suffix}")
    if failures:
        print(f"{failures} check(s) failed")
        return EXIT_VERIFY_FAILED
    print("all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revcube",
        description="Solvability, counting and probabilities for 4x4x4 cube assemblies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--mode",
            choices=counting.MODES,
            default="marked",
            help="marked tracks every sticker, mechanical ignores flips "
            "(default: marked)",
        )

    p = sub.add_parser("count", help="number of visibly distinct assembly classes")
    add_mode(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("prob", help="probability that a random assembly is solvable")
    add_mode(p)
    p.add_argument("--exact", action="store_true", help="exact fraction (default)")
    p.add_argument("--mc", type=int, metavar="N", help="Monte Carlo with N samples")
    p.add_argument("--seed", type=int, help="random seed (default: REVCUBE_SEED or 0)")
    p.add_argument("--workers", type=int, default=1, help="stream scheduling only")
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("solvable", help="decide solvability of a state file")
    p.add_argument("file")
    add_mode(p)
    p.set_defaults(func=_cmd_solvable)

    p = sub.add_parser("invariant", help="print the class string of a state file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("canonical", help="print the canonical state of a class")
    p.add_argument("cls", metavar="CLASS", help="12 pair labels, colon, twist")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("random-assembly", help="sample a uniform assembly")
    add_mode(p)
    p.add_argument("--seed", type=int, help="random seed (default: REVCUBE_SEED or 0)")
    p.set_defaults(func=_cmd_random_assembly)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument(
        "--level",
        choices=("quick", "full"),
        default="full",
        help="full adds the strong-generating-set rebuild (default: full)",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
