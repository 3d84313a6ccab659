"""Command-line surface.

Subcommands wrap the library one-to-one; every subcommand accepts --json.
Exit codes: 0 success, 1 validation or usage error, 2 preservation-property
violation in family mode.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .criteria import closure_hilbert_series, full_verdict
from .errors import StarglueError, ValidationError
from .family import random_star_family
from .poly import buchberger
from .semigroup import (
    apery,
    format_generators,
    frobenius,
    genus,
    glue,
    gluing_spec,
    is_symmetric,
    make_semigroup,
    parse_generators,
    star_glue,
)
from .toric import (
    complete_glued_ideal,
    defining_ideal,
    glued_ideal,
    ideal_to_json,
    projective_closure_ideal,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _semigroup(text):
    return make_semigroup(parse_generators(text))


def _cmd_apery(args):
    S = _semigroup(args.generators)
    ap = apery(S, args.n)
    if args.json:
        return _dump({"generators": format_generators(S), "modulus": ap.modulus,
                      "elements": list(ap.elements)})
    return f"Ap({S}, {ap.modulus}) = {{{', '.join(map(str, ap.sorted()))}}}"


def _cmd_frobenius(args):
    S = _semigroup(args.generators)
    f, g = frobenius(S), genus(S)
    if args.json:
        return _dump({"generators": format_generators(S), "frobenius": f, "genus": g})
    return f"frobenius({S}) = {f}\ngenus({S}) = {g}"


def _cmd_symmetric(args):
    S = _semigroup(args.generators)
    sym = is_symmetric(S)
    if args.json:
        return _dump({"generators": format_generators(S), "symmetric": sym})
    return f"{S} is {'symmetric' if sym else 'not symmetric'}"


def _cmd_ideal(args):
    S = _semigroup(args.generators)
    ideal = defining_ideal(S)
    if args.json:
        return _dump(ideal_to_json(ideal))
    lines = [f"defining ideal of {S}:"]
    lines += [f"  {g}" for g in ideal.basis.generators]
    return "\n".join(lines)


def _cmd_closure(args):
    S = _semigroup(args.generators)
    closure = projective_closure_ideal(defining_ideal(S))
    if args.json:
        return _dump(ideal_to_json(closure))
    lines = [f"projective closure ideal of {S}:"]
    lines += [f"  {g}" for g in closure.basis.generators]
    return "\n".join(lines)


def _verdict_text(verdict) -> str:
    def show(flag):
        return "n/a" if flag is None else ("yes" if flag else "no")

    v = verdict
    return "\n".join(
        [
            f"curve {v.semigroup}:",
            f"  ACM (leading monomials): {show(v.acm_groebner)}",
            f"  ACM (good Apery set):    {show(v.acm_apery)}",
            f"  Gorenstein (Apery sums): {show(v.gorenstein_apery)}",
            f"  Gorenstein (Hilbert):    {show(v.gorenstein_hilbert)}",
        ]
    )


def _cmd_verdict(args):
    S = _semigroup(args.generators)
    verdict = full_verdict(S)
    if args.json:
        data = verdict.to_json()
        if args.trace:
            trace: list = []
            buchberger(verdict.closure.affine.basis.generators, trace=trace)
            data["buchberger_trace"] = [
                event[0] + ":" + ",".join(map(str, event[1:]))
                if event[0] == "pair"
                else f"add:{event[1]}"
                for event in trace
            ]
        return _dump(data)
    return _verdict_text(verdict)


def _cmd_hilbert(args):
    S = _semigroup(args.generators)
    series = closure_hilbert_series(projective_closure_ideal(defining_ideal(S)))
    if args.json:
        return _dump(
            {
                "generators": format_generators(S),
                "numerator": list(series.numerator),
                "denominator_power": series.denominator_power,
                "palindromic": series.is_palindromic,
            }
        )
    def term(d, c):
        if d == 0:
            return str(c)
        t = "t" if d == 1 else f"t^{d}"
        return t if c == 1 else f"{c}*{t}"

    num = " + ".join(term(d, c) for d, c in enumerate(series.numerator) if c)
    num = num.replace("+ -", "- ")
    return f"H(closure of {S}, t) = ({num}) / (1-t)^{series.denominator_power}"


def _glue_payload(spec, verdict_wanted):
    result = glue(spec)
    data = {
        "spec": spec.to_json(),
        "glued_input_order": list(spec.glued_generators()),
        "generators": format_generators(result.semigroup),
        "provenance": [
            {"generator": value, "side": side, "source": source}
            for value, side, source in result.provenance
        ],
    }
    lines = [
        f"glued semigroup: {result.semigroup}",
        "provenance: "
        + ", ".join(f"{v}={side}:{src}" for v, side, src in result.provenance),
    ]
    if verdict_wanted:
        raw = glued_ideal(spec, defining_ideal(spec.left), defining_ideal(spec.right))
        completed, added_nothing = complete_glued_ideal(raw)
        verdict = full_verdict(result.semigroup, affine_ideal=completed)
        data["basis_already_groebner"] = added_nothing
        data["verdict"] = verdict.to_json()
        lines.append(f"assembled basis already Groebner: {added_nothing}")
        lines.append(_verdict_text(verdict))
    return data, "\n".join(lines)


def _cmd_glue(args):
    spec = gluing_spec(
        _semigroup(args.left), _semigroup(args.right), args.p, args.q, star=False
    )
    data, text = _glue_payload(spec, args.verdict)
    return _dump(data) if args.json else text


def _cmd_star_glue(args):
    avec = parse_generators(args.a)
    spec = star_glue(_semigroup(args.left), _semigroup(args.right), args.bl, avec)
    data, text = _glue_payload(spec, args.verdict)
    return _dump(data) if args.json else text


def _cmd_family(args):
    report = random_star_family(
        args.trials, args.max_gen, args.seed, star_only=args.star_only
    )
    if args.json:
        out = _dump(report.to_json())
    else:
        lines = [
            f"seed {report.seed}: {report.star_trials} star trials "
            f"({report.trials} total incl. controls)",
            f"  ACM preserved:        {report.acm_preserved}/{report.star_trials}",
            f"  Gorenstein preserved: {report.gorenstein_preserved}/{report.gorenstein_eligible}",
            f"  counterexamples (non-star controls): {len(report.counterexamples)}",
            f"  skipped: {len(report.skipped)}",
        ]
        if report.violations:
            lines.append(f"  VIOLATIONS: {len(report.violations)}")
        out = "\n".join(lines)
    return out, (0 if report.ok else 2)


def paper_example() -> dict:
    """The fixed regression example: two plane curves whose closures are ACM
    and Gorenstein, glued with p=8, q=19 into a curve whose closure is
    neither ACM nor (hence) Gorenstein."""
    left = make_semigroup((3, 5))
    right = make_semigroup((7, 12))
    spec = gluing_spec(left, right, 8, 19)
    raw = glued_ideal(spec, defining_ideal(left), defining_ideal(right))
    completed, added_nothing = complete_glued_ideal(raw)
    glued_verdict = full_verdict(completed.semigroup, affine_ideal=completed)
    return {
        "left": full_verdict(left).to_json(),
        "right": full_verdict(right).to_json(),
        "gluing": {
            "spec": spec.to_json(),
            "glued_input_order": list(spec.glued_generators()),
            "basis_already_groebner": added_nothing,
            "verdict": glued_verdict.to_json(),
        },
    }


def _cmd_paper_example(args):
    data = paper_example()
    if args.json:
        return _dump(data)
    lines = ["fixed gluing example:"]
    for side in ("left", "right"):
        v = data[side]
        lines.append(
            f"  <{v['generators']}>: ACM={v['acm_groebner']}, "
            f"Gorenstein={v['gorenstein_apery']}"
        )
    g = data["gluing"]
    lines.append(
        f"  glue p={g['spec']['p']}, q={g['spec']['q']} -> "
        f"<{g['verdict']['generators']}>: ACM={g['verdict']['acm_groebner']}, "
        f"Gorenstein={g['verdict']['gorenstein_apery']}"
    )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="starglue", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("apery", _cmd_apery, help="Apery set of a semigroup element")
    p.add_argument("generators", help='comma-separated generators, e.g. "3,5"')
    p.add_argument("-n", type=int, required=True, help="modulus (must lie in the semigroup)")

    p = add("frobenius", _cmd_frobenius, help="Frobenius number and genus")
    p.add_argument("generators")

    p = add("symmetric", _cmd_symmetric, help="symmetry test")
    p.add_argument("generators")

    p = add("ideal", _cmd_ideal, help="defining ideal of the affine curve")
    p.add_argument("generators")

    p = add("closure", _cmd_closure, help="ideal of the projective closure")
    p.add_argument("generators")

    p = add("verdict", _cmd_verdict, help="ACM/Gorenstein verdict for the closure")
    p.add_argument("generators")
    p.add_argument("--trace", action="store_true", help="include the Buchberger pair log (JSON only)")

    p = add("hilbert", _cmd_hilbert, help="Hilbert series of the closure")
    p.add_argument("generators")

    p = add("glue", _cmd_glue, help="glue two semigroups")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--verdict", action="store_true", help="also run the closure verdict")

    p = add("star-glue", _cmd_star_glue, help="star-glue two semigroups")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--bl", type=int, required=True, help="coefficient on the largest left generator")
    p.add_argument("--a", required=True, help='comma-separated avec, e.g. "1,1"')
    p.add_argument("--verdict", action="store_true", help="also run the closure verdict")

    p = add("family", _cmd_family, help="randomized preservation harness")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--max-gen", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--star-only", action="store_true", help="skip non-star controls")

    p = add("paper-example", _cmd_paper_example, help="fixed regression example")
    return parser


def dispatch(argv) -> tuple[int, str]:
    """Run one command; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.func(args)
    except UsageError as exc:
        return 1, f"usage error: {exc}"
    except (ValidationError, ValueError) as exc:
        return 1, f"error: {type(exc).__name__}: {exc}"
    except StarglueError as exc:
        return 1, f"error: {type(exc).__name__}: {exc}"
    if isinstance(out, tuple):
        text, code = out
        return code, text
    return 0, out


def main(argv=None) -> int:
    code, text = dispatch(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
