"""Command-line front end.

    sylq FILE [--mode M] [--levels N] [--format text|json|csv]
              [--epsilon-count X] [--epsilon-prop X] [--verify CAP]
    sylq verify FILE [--cap N]

Reads a syllogism document (or stdin when FILE is ``-``), runs inference, and
prints the result.  ``verify`` cross-checks the engine against brute-force
enumeration of integer populations.  Exit codes: 0 success, 1 input error,
2 infeasible premises, 3 size guard exceeded or verification disagreement.

JSON and CSV output are deterministic: fixed key order and numbers printed
to 12 significant digits (integers without a decimal point).  An unbounded
upper end renders as ``null`` in JSON and an empty CSV cell.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import optimizer
from .compiler import UnitMixingError, compile_syllogism
from .dsl import DslError, conclusion_text, parse
from .inference import (
    InfeasiblePremisesError,
    InferenceConfig,
    InferenceResult,
    infer,
)
from .oracle import enumerate_range
from .quantifiers import Interval, as_fraction, kernel_of, support_of
from .statements import Syllogism
from .terms import SizeGuardError

__all__ = ["main"]


def _number(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _run_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sylq",
        description="Interval bounds for syllogisms with generalized quantifiers.",
    )
    p.add_argument("file", nargs="?", default="-", help="syllogism document ('-' for stdin)")
    p.add_argument(
        "--mode",
        choices=("auto", "crisp", "kersup", "alpha"),
        default=None,
        help="inference mode (default: document option, else auto)",
    )
    p.add_argument("--levels", type=int, default=None, help="alpha grid size (default 11)")
    p.add_argument(
        "--epsilon-count",
        type=_number,
        default=None,
        metavar="X",
        help="margin replacing strict count inequalities (default 1)",
    )
    p.add_argument(
        "--epsilon-prop",
        type=_number,
        default=None,
        metavar="X",
        help="relative margin for strict rows in proportion contexts (default 1e-6)",
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument(
        "--verify",
        type=int,
        default=None,
        metavar="CAP",
        help="also cross-check against enumeration of populations up to CAP",
    )
    return p


def _verify_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sylq verify",
        description="Cross-check engine bounds against brute-force enumeration.",
    )
    p.add_argument("file", nargs="?", default="-", help="syllogism document ('-' for stdin)")
    p.add_argument("--cap", type=int, default=10, help="largest universe size to enumerate")
    p.add_argument("--epsilon-count", type=_number, default=None, metavar="X")
    p.add_argument("--epsilon-prop", type=_number, default=None, metavar="X")
    return p


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _config(doc_options, args) -> InferenceConfig:
    cli_levels = getattr(args, "levels", None)
    levels = cli_levels if cli_levels is not None else doc_options.get("levels", 11)
    eps_count = (
        args.epsilon_count
        if args.epsilon_count is not None
        else doc_options.get("eps_count", Fraction(1))
    )
    eps_prop = (
        args.epsilon_prop
        if args.epsilon_prop is not None
        else doc_options.get("eps_prop", Fraction(1, 10**6))
    )
    return InferenceConfig(levels=levels, eps_count=eps_count, eps_prop=eps_prop)


def _num(value) -> Optional[object]:
    """JSON-ready number: exact int when integral, else 12-significant float."""
    if value is None:
        return None
    f = as_fraction(value)
    if f.denominator == 1:
        return int(f)
    return float("%.12g" % float(f))


def _num_text(value) -> str:
    n = _num(value)
    if n is None:
        return ""
    return repr(n) if isinstance(n, float) else str(n)


def _level_rows(result: InferenceResult) -> List[dict]:
    rows = []
    for level, iv in result.cuts or []:
        rows.append(
            {
                "level": _num(level),
                "lo": None if iv is None else _num(iv.lo),
                "hi": None if iv is None or iv.hi is None else _num(iv.hi),
                "feasible": iv is not None,
            }
        )
    return rows


def _json_payload(result: InferenceResult, syl: Syllogism) -> dict:
    meta = result.metadata
    payload: dict = {}
    if result.mode == "crisp":
        payload["lo"] = _num(meta.get("lo"))
        payload["hi"] = _num(meta.get("hi"))
    payload["mode"] = result.mode
    payload["conclusion"] = conclusion_text(syl.conclusion)
    if result.mode == "crisp":
        payload["status"] = meta.get("status")
        if "attained_lo" in meta:
            payload["attained_lo"] = _num(meta["attained_lo"])
    if result.mode == "kersup":
        pair = result.pair
        payload["kernel"] = (
            None
            if pair is None
            else {"lo": _num(pair.kernel.lo), "hi": _num(pair.kernel.hi)}
        )
        support = result.cuts[0][1] if result.cuts else None
        payload["support"] = (
            None
            if support is None
            else {"lo": _num(support.lo), "hi": _num(support.hi)}
        )
    payload["levels"] = _level_rows(result)
    payload["fitted"] = (
        None if result.fitted is None else [_num(v) for v in result.fitted.as_tuple()]
    )
    payload["max_feasible_level"] = _num(result.max_feasible_level)
    payload["epsilon"] = {
        "kind": meta.get("epsilon_kind"),
        "value": _num(meta.get("epsilon")),
    }
    if meta.get("warnings"):
        payload["warnings"] = list(meta["warnings"])
    return payload


def _print_text(result: InferenceResult, syl: Syllogism) -> None:
    meta = result.metadata
    out = ["mode: %s" % result.mode, "conclusion: %s" % conclusion_text(syl.conclusion)]
    if result.mode == "crisp":
        out.append("lo: %s" % (_num_text(meta.get("lo")) or "-inf"))
        out.append("hi: %s" % (_num_text(meta.get("hi")) or "inf"))
        out.append("status: %s" % meta.get("status"))
        if "attained_lo" in meta:
            out.append("attained lo: %s" % _num_text(meta["attained_lo"]))
    else:
        for level, iv in result.cuts or []:
            if iv is None:
                out.append("level %s: infeasible" % _num_text(level))
            else:
                hi = _num_text(iv.hi) if iv.hi is not None else "inf"
                out.append(
                    "level %s: [%s, %s]" % (_num_text(level), _num_text(iv.lo), hi)
                )
        out.append("max feasible level: %s" % _num_text(result.max_feasible_level))
        if result.fitted is not None:
            out.append(
                "fitted: tz(%s)"
                % ", ".join(_num_text(v) for v in result.fitted.as_tuple())
            )
    out.append(
        "epsilon: %s (%s)" % (_num_text(meta.get("epsilon")), meta.get("epsilon_kind"))
    )
    for warning in meta.get("warnings", []):
        out.append("warning: %s" % warning)
    print("\n".join(out))


def _print_csv(result: InferenceResult) -> None:
    lines = ["level,lo,hi"]
    for row in _level_rows(result):
        lines.append(
            "%s,%s,%s"
            % (
                _num_text(row["level"]),
                "" if row["lo"] is None else _num_text(row["lo"]),
                "" if row["hi"] is None else _num_text(row["hi"]),
            )
        )
    print("\n".join(lines))


def _crisp_readings(syl: Syllogism):
    """(name, premise bounds) pairs to audit: one per distinct cut level."""
    shapes = [p.quantifier.shape for p in syl.premises]
    if all(s is None or isinstance(s, Interval) for s in shapes):
        return [("crisp", [s for s in shapes])]
    sup = [None if s is None else support_of(s) for s in shapes]
    ker = [None if s is None else kernel_of(s) for s in shapes]
    return [("support", sup), ("kernel", ker)]


def _verify_doc(syl: Syllogism, cap: int, config: InferenceConfig) -> int:
    """Compare engine bounds with enumeration; 0 on agreement, 3 otherwise."""
    failures = 0
    for name, bounds in _crisp_readings(syl):
        system = compile_syllogism(syl, bounds)
        outcome = optimizer.solve(
            system, eps_count=config.eps_count, eps_prop=config.eps_prop
        )
        exact = enumerate_range(syl, cap, premise_bounds=bounds)
        lp_lo = outcome.attained_lo if outcome.attained_lo is not None else outcome.lo
        if exact is None:
            witness = "no integer witness up to cap %d" % cap
            ok = True
        else:
            witness = "enumerated [%s, %s]" % (_num_text(exact.lo), _num_text(exact.hi))
            ok = (
                outcome.status != optimizer.INFEASIBLE
                and (lp_lo is None or lp_lo <= exact.lo)
                and (outcome.hi is None or exact.hi <= outcome.hi)
            )
        if outcome.status == optimizer.INFEASIBLE:
            engine = "engine: infeasible"
        else:
            engine = "engine [%s, %s]" % (
                _num_text(outcome.lo) or "-inf",
                _num_text(outcome.hi) or "inf",
            )
        verdict = "OK" if ok else "DISAGREE"
        print("verify %s: %s; %s: %s" % (name, engine, witness, verdict), file=sys.stderr)
        if not ok:
            failures += 1
    return 0 if failures == 0 else 3


def _cmd_run(argv: Sequence[str]) -> int:
    args = _run_parser().parse_args(list(argv))
    try:
        doc = parse(_read_text(args.file))
        syl = doc.to_syllogism()
        config = _config(doc.options, args)
        mode = args.mode or doc.options.get("mode", "auto")
        result = infer(syl, mode=mode, config=config)
    except DslError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except InfeasiblePremisesError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (UnitMixingError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1

    if args.format == "json":
        print(json.dumps(_json_payload(result, syl), indent=2))
    elif args.format == "csv":
        _print_csv(result)
    else:
        _print_text(result, syl)

    if args.verify is not None:
        try:
            return _verify_doc(syl, args.verify, config)
        except SizeGuardError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 3
    return 0


def _cmd_verify(argv: Sequence[str]) -> int:
    args = _verify_parser().parse_args(list(argv))
    try:
        doc = parse(_read_text(args.file))
        syl = doc.to_syllogism()
        config = _config(doc.options, args)
        return _verify_doc(syl, args.cap, config)
    except DslError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except SizeGuardError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (UnitMixingError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    if argv and argv[0] == "verify":
        return _cmd_verify(argv[1:])
    return _cmd_run(argv)


if __name__ == "__main__":
    sys.exit(main())
