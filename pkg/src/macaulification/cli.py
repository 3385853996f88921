"""Command line front end: ``macaulify <subcommand> [input]``.

Input is a file path or ``-`` for stdin, holding a Betti diagram in text
layout, a JSON table, or a JSON h-vector array.  Exit status is 0 on
success, 2 on invalid input and 1 when an internal cross-check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algorithms import algorithm_one, algorithm_one_table, algorithm_two, check_numerically_acm, minimal_profile
from .bdl import BdlSequence, apply_bdl_hvector, apply_bdl_table
from .betti import ensure_valid, numerical_reduction, profile_from_table, remove_common_pairs
from .curves import (
    NumericalCharacter,
    character_from_hvector,
    family_report,
    hvector_from_character,
    smoothability_check,
)
from .errors import DefectError, ValidationError
from .hilbert import deficit, hvector, hvector_from_profile
from .io import format_hvector, read_input, render_betti_text, to_jsonable
from .liaison import normalize_with_table

__all__ = ["main", "run_cli", "build_parser"]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError("readable input file", str(exc)) from exc


def _load(path: str, num_vars: int):
    kind, value = read_input(_read(path), num_vars)
    if kind == "table":
        ensure_valid(value)
    return kind, value


def _json_arg(text: str):
    """Inline JSON, or a path to a JSON file."""
    stripped = text.strip()
    if not stripped.startswith(("[", "{")):
        stripped = _read(text)
    try:
        return json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise ValidationError("valid JSON", str(exc)) from exc


def _start_hvector(text: str, num_vars: int):
    data = _json_arg(text) if text.strip().startswith("[") else None
    if data is not None:
        return hvector(data)
    kind, value = _load(text, num_vars)
    return value if kind == "hvector" else hvector_from_profile(profile_from_table(value))


def _steps(text: str) -> list[str]:
    return [f"({st.d},{st.a})" for st in text] if text else []


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def _verdict_lines(v) -> list[str]:
    lines = [f"numerically ACM: {_yes(v.numerically_acm)}"]
    for name, ok in v.criteria().items():
        lines.append(f"  {name}: {_yes(ok)}")
    if v.witness is not None:
        lines.append(f"  witness diagonal exponents: {list(v.witness.diagonal)}")
        lines.append(f"  witness superdiagonal exponents: {list(v.witness.superdiagonal)}")
    return lines


# --- subcommands --------------------------------------------------------------

def cmd_macaulify(args) -> tuple[dict, list[str]]:
    kind, value = _load(args.input, args.num_vars)
    if kind == "table":
        profile = profile_from_table(value)
    else:
        profile = minimal_profile(value)
    h0 = hvector_from_profile(profile)
    data = {"input_hvector": list(h0), "deficit": deficit(h0)}
    lines = [f"input h-vector: {format_hvector(h0)}", f"deficit: {data['deficit']}"]
    finals = []
    if args.alg in ("1", "both"):
        run = algorithm_one_table(value) if kind == "table" else algorithm_one(profile)
        final_h = hvector_from_profile(run.final)
        finals.append(final_h)
        trace = [e.hvector for e in run.trace]
        data["algorithm_one"] = {
            "steps": to_jsonable(run.steps),
            "trace": [list(h) for h in trace],
            "final_hvector": list(final_h),
            "final_table": to_jsonable(run.final_table) if run.final_table is not None else None,
        }
        lines.append("algorithm 1 steps: " + " ".join(_steps(run.steps)))
        if args.trace:
            lines.extend(format_hvector(h) for h in trace)
        lines.append(f"algorithm 1 final h-vector: {format_hvector(final_h)}")
        if run.final_table is not None:
            lines.append("algorithm 1 final Betti table:")
            lines.append(render_betti_text(run.final_table).rstrip("\n"))
        verdict = check_numerically_acm(run.final)
    if args.alg in ("2", "both"):
        run2 = algorithm_two(h0)
        finals.append(run2.final)
        data["algorithm_two"] = {
            "steps": to_jsonable(run2.steps),
            "degrees": run2.steps.degrees,
            "trace": [list(h) for h in run2.trace],
            "final_hvector": list(run2.final),
        }
        lines.append("algorithm 2 degrees: " + ", ".join(map(str, run2.steps.degrees)))
        if args.trace:
            lines.extend(format_hvector(h) for h in run2.trace)
        lines.append(f"algorithm 2 final h-vector: {format_hvector(run2.final)}")
        if args.alg == "2":
            verdict = check_numerically_acm(minimal_profile(run2.final))
    if len(finals) == 2:
        if finals[0] != finals[1]:
            raise DefectError(f"algorithms disagree: {finals[0]} vs {finals[1]}")
        data["finals_agree"] = True
        lines.append("final h-vectors agree: true")
    data["verdict"] = to_jsonable(verdict)
    lines.extend(_verdict_lines(verdict))
    return data, lines


def cmd_check(args):
    kind, value = _load(args.input, args.num_vars)
    profile = profile_from_table(value) if kind == "table" else minimal_profile(value)
    verdict = check_numerically_acm(profile)
    h = hvector_from_profile(profile)
    data = {"hvector": list(h), "deficit": deficit(h), "verdict": to_jsonable(verdict)}
    lines = [f"h-vector: {format_hvector(h)}", f"deficit: {data['deficit']}"] + _verdict_lines(verdict)
    return data, lines


def cmd_bdl(args):
    kind, value = _load(args.input, args.num_vars)
    seq = BdlSequence(_json_arg(args.seq))
    if kind == "table":
        table = value
        h = hvector_from_profile(profile_from_table(table))
    else:
        table, h = None, value
    trace = [h]
    for st in seq:
        h = apply_bdl_hvector(h, st)
        trace.append(h)
        if table is not None:
            table = apply_bdl_table(table, st)
    if table is not None and hvector_from_profile(profile_from_table(table)) != h:
        raise DefectError("table and h-vector transforms disagree")
    data = {"steps": to_jsonable(seq), "trace": [list(t) for t in trace], "final_hvector": list(h),
            "total_height": seq.total_height}
    lines = [format_hvector(t) for t in trace]
    if table is not None:
        data["final_table"] = to_jsonable(table)
        lines.append(render_betti_text(table).rstrip("\n"))
    return data, lines


def cmd_reduce(args):
    kind, value = _load(args.input, args.num_vars)
    if kind != "table":
        raise ValidationError("reduce needs a Betti table", kind)
    reduced = numerical_reduction(value)
    p = remove_common_pairs(profile_from_table(reduced))
    data = {"table": to_jsonable(reduced), "profile": to_jsonable(p)}
    return data, [render_betti_text(reduced).rstrip("\n"), f"s: {list(p.s)}", f"r: {list(p.r)}"]


def cmd_normalize(args):
    if args.input is not None:
        doc = _json_arg(args.input)
        if not isinstance(doc, dict) or "sequence" not in doc or "start" not in doc:
            raise ValidationError("normalize input has 'sequence' and 'start'", type(doc).__name__)
        seq, start = BdlSequence(doc["sequence"]), hvector(doc["start"])
    else:
        if args.seq is None or args.start is None:
            raise ValidationError("normalize needs an input document or --seq and --start")
        seq, start = BdlSequence(_json_arg(args.seq)), _start_hvector(args.start, args.num_vars)
    canon, rows = normalize_with_table(seq, start)
    data = {"canonical": to_jsonable(canon), "rows": [list(r) for r in rows]}
    width = max(len(str(d)) for r in rows for d in r) if rows and rows[0] else 1
    lines = [" ".join(f"{d:>{width}}" for d in r) for r in rows]
    lines.append(f"canonical: a = {canon.a}, b = {canon.b}, g = {list(canon.gs)}, shift = {canon.shift}")
    return data, lines


def cmd_family(args):
    rep = family_report(args.n)
    n = args.n
    y_check = smoothability_check(rep.y_character, n)
    c_check = smoothability_check(rep.character, n)
    data = {
        "n": n,
        "minimal": to_jsonable(rep.minimal),
        "y": {"steps": to_jsonable(rep.y_steps), "curve": to_jsonable(rep.y),
              "character": list(rep.y_character.values), "smoothable": y_check.ok, "failed": y_check.failed},
        "c_prime": {"steps": to_jsonable(rep.steps), "curve": to_jsonable(rep.curve),
                    "character": list(rep.character.values), "smoothable": c_check.ok, "failed": c_check.failed},
    }
    lines = []
    for label, curve, steps, char, check in (
        ("minimal curve", rep.minimal, None, None, None),
        ("Y", rep.y, rep.y_steps, rep.y_character, y_check),
        ("C'", rep.curve, rep.steps, rep.character, c_check),
    ):
        lines.append(f"{label}:")
        if steps is not None:
            lines.append("  steps: " + " ".join(_steps(steps)))
        lines.append(f"  degree: {curve.degree}")
        lines.append(f"  genus: {curve.genus}")
        lines.append(f"  h-vector: {format_hvector(curve.hvector)}")
        lines.append(f"  hyperplane h-vector: {format_hvector(curve.hyperplane_hvector)}")
        lines.append(f"  module degree: {curve.module_degree}")
        lines.append(f"  shift: {curve.shift}")
        if char is not None:
            lines.append(f"  character: {format_hvector(char.values)}, sigma = {char.sigma}")
            lines.append(f"  smoothability conditions: {_yes(check.ok)}")
            lines.extend(f"    {c.name}: {_yes(c.ok)}" for c in check.conditions)
    return data, lines


def cmd_character(args):
    values = _json_arg(args.input if args.input != "-" else sys.stdin.read())
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise ValidationError("JSON integer array", values)
    to = args.to
    if to == "auto":
        to = "character" if values and values[0] == 1 else "hvector"
    if to == "character":
        c = character_from_hvector(values)
        data = {"hvector": list(hvector(values)), "character": list(c.values), "sigma": c.sigma}
        lines = [f"character: {format_hvector(c.values)}", f"sigma: {c.sigma}"]
    else:
        c = NumericalCharacter(values)
        h = hvector_from_character(c)
        data = {"character": list(c.values), "hvector": list(h), "sigma": c.sigma}
        lines = [f"h-vector: {format_hvector(h)}", f"sigma: {c.sigma}"]
    return data, lines


COMMANDS = {
    "macaulify": cmd_macaulify,
    "check": cmd_check,
    "bdl": cmd_bdl,
    "reduce": cmd_reduce,
    "normalize": cmd_normalize,
    "family": cmd_family,
    "character": cmd_character,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--trace", action="store_true", help="print intermediate h-vectors")
    common.add_argument("--num-vars", type=int, default=4, help="number of variables of the ring")

    p = argparse.ArgumentParser(prog="macaulify", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("macaulify", parents=[common], help="run the algorithms")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--alg", choices=("1", "2", "both"), default="both")

    s = sub.add_parser("check", parents=[common], help="numerically ACM verdict")
    s.add_argument("input", nargs="?", default="-")

    s = sub.add_parser("bdl", parents=[common], help="apply a sequence of basic double links")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--seq", required=True, help="JSON [[d, a], ...] inline or as a file")

    s = sub.add_parser("reduce", parents=[common], help="numerical reduction of a Betti table")
    s.add_argument("input", nargs="?", default="-")

    s = sub.add_parser("normalize", parents=[common], help="canonical form of a link sequence")
    s.add_argument("input", nargs="?", default=None,
                   help='JSON {"sequence": [[d, a], ...], "start": [h...]} inline or as a file')
    s.add_argument("--seq")
    s.add_argument("--start", help="start h-vector as JSON, or a table/h-vector file")

    s = sub.add_parser("family", parents=[common], help="smooth numerically ACM curves in L_n")
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("character", parents=[common], help="h-vector <-> numerical character")
    s.add_argument("input", nargs="?", default="-", help="JSON array inline or as a file")
    s.add_argument("--to", choices=("auto", "character", "hvector"), default="auto")
    return p


def run_cli(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        data, lines = COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=stderr)
        return 2
    except DefectError as exc:
        print(f"internal defect: {exc}", file=stderr)
        return 1
    if args.format == "json":
        stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
