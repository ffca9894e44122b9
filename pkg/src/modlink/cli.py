"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (error class name on
stderr), 2 on a usage error. Every subcommand takes ``--json``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .annulus import AbWord, distinct_classes, last_winding_number, reduce
from .bounds import (
    V_TET,
    VolumeBound,
    best_lower_bound,
    family_bounds,
    lower_bound_distinct,
    lower_bound_maximal,
)
from .classify import partition_by_base_order, read_link_file
from .codeword import ModularLink, exponent_sets, labelled_exponents, parse_code_word, parse_link
from .cutting import SignCase, XYWord, check_admissible, lr_from_xy, sign_case, xy_from_slope
from .errors import ModlinkError, NotInFamily
from .exponents import Side, greedy_cardinality_bound, maximal_exponent_set
from .subwords import find_winding_subwords, is_linear
from .svg import RenderOptions, render_svg
from .walker import closing_power, trace, winding_number


def _rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _bound(b: VolumeBound) -> dict:
    return {"kind": b.kind.value, "coefficient": _rational(b.coefficient), "numeric": b.numeric}


def _parse_slope(text: str) -> tuple[int, int]:
    try:
        p, q = text.split("/")
        return int(p), int(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"slope must look like p/q, got {text!r}")


def _parse_point(text: str) -> tuple[int, int]:
    try:
        i, j = text.split(",")
        return int(i), int(j)
    except ValueError:
        raise argparse.ArgumentTypeError(f"center must look like i,j, got {text!r}")


# -- subcommands: each returns (inputs, outputs) ---------------------------


def cmd_parse(args):
    w = parse_code_word(args.word)
    return {"word": args.word}, {
        "canonical": str(w),
        "letters": w.letters,
        "syllables": [list(s) for s in w.syllables],
        "n": w.n,
        "length": len(w),
        "primitive": True,
        "rotation_offset": w.canonical_rotation,
    }


def _link_report(link: ModularLink) -> dict:
    ls, rs = labelled_exponents(link)
    a, b = exponent_sets(link)
    a_t, b_t = maximal_exponent_set(ls, Side.L), maximal_exponent_set(rs, Side.R)
    thm = lower_bound_maximal(len(a_t), len(b_t))
    cor = lower_bound_distinct(len(a), len(b))
    best = best_lower_bound(link)
    family = None
    if link.c == 1:
        try:
            lower, upper = family_bounds(link.words[0])
        except NotInFamily:
            pass
        else:
            family = {"lower": _bound(lower), "upper": _bound(upper)}
    return {
        "link": str(link),
        "components": link.c,
        "A": sorted(a),
        "B": sorted(b),
        "A_tilde": a_t.sorted(),
        "B_tilde": b_t.sorted(),
        "labelled_L": list(ls),
        "labelled_R": list(rs),
        "greedy_guarantee": [_rational(greedy_cardinality_bound(len(a))),
                             _rational(greedy_cardinality_bound(len(b)))],
        "bounds": {"thm": _bound(thm), "cor": _bound(cor), "best": _bound(best), "family": family},
    }


def cmd_bounds(args):
    if args.file:
        links = read_link_file(args.file)
        inputs = {"file": args.file}
    elif args.link:
        links = [parse_link(args.link)]
        inputs = {"link": args.link}
    else:
        raise _Usage("bounds needs a link or --file")
    reports = [_link_report(link) for link in links]
    return inputs, {"v_tet": V_TET, "links": reports}


def cmd_xy(args):
    p, q = args.slope
    w = xy_from_slope(p, q)
    rep = check_admissible(w)
    return {"slope": f"{p}/{q}"}, {
        "xy": w.letters,
        "count_X": w.letters.count("X"),
        "count_Y": w.letters.count("Y"),
        "admissible": rep.admissible,
        "isolated_letter": rep.isolated_letter,
        "k": rep.block_length_k,
        "sign_case": sign_case(p, q).value,
        "lr": lr_from_xy(w, sign_case(p, q)),
    }


def cmd_lr_from_xy(args):
    case = SignCase(args.case)
    return {"xy": args.xyword, "case": case.value}, {"lr": lr_from_xy(XYWord(args.xyword), case)}


def cmd_linear(args):
    res = is_linear(args.letters, args.bound, cyclic=args.cyclic)
    witness = None if res.witness is None else f"{res.witness[0]}/{res.witness[1]}"
    bound = args.bound if args.bound is not None else 2 * len(args.letters) + 4
    return {"letters": args.letters, "bound": bound, "cyclic": args.cyclic}, {
        "linear": res.linear,
        "witness": witness,
        "case": None if res.case is None else res.case.value,
    }


def cmd_winding(args):
    w = parse_code_word(args.word)
    subs = find_winding_subwords(w)
    return {"word": args.word}, {
        "canonical": str(w),
        "winding_subwords": [
            {"direction": s.direction.value, "m": s.central_exponent, "k": s.k, "r": s.r,
             "position": s.position}
            for s in subs
        ],
    }


def _longest_run_pivot(path) -> tuple[int, int]:
    letters = path.letters
    best_start, best_len, i = 0, 0, 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        if j - i > best_len:
            best_start, best_len = i, j - i
        i = j
    return path.pivot(best_start)


def cmd_walk(args):
    if not args.letters:
        raise _Usage("walk needs a nonempty word")
    path = trace(args.letters)
    center = args.center if args.center is not None else _longest_run_pivot(path)
    power = closing_power(args.letters)
    end = trace(args.letters * power).end
    translation = [end.base[0], end.base[1]]
    if args.svg:
        svg = render_svg(path, RenderOptions(highlight=center))
        Path(args.svg).write_text(svg, encoding="utf-8")
    return {"letters": args.letters, "center": list(center), "svg": args.svg}, {
        "crossings": [
            [c.base[0], c.base[1], c.kind.name.lower(), c.orientation.name.lower()]
            for c in path.crossings
        ],
        "closing_power": power,
        "deck_translation": translation if power == 1 else None,
        "closed_translation": translation,
        "winding_number": winding_number(path, center),
    }


def cmd_annulus(args):
    w = reduce(AbWord(args.abword))
    outputs = {"reduced": w.letters, "last_winding_number": last_winding_number(w)}
    inputs = {"abword": args.abword}
    if args.other is not None:
        other = reduce(AbWord(args.other))
        inputs["other"] = args.other
        outputs["other_reduced"] = other.letters
        outputs["other_last_winding_number"] = last_winding_number(other)
        outputs["classes"] = distinct_classes(w, other).value
    return inputs, outputs


def cmd_classify(args):
    links = read_link_file(args.file)
    classes = partition_by_base_order(links)
    return {"file": args.file}, {
        "links": [str(link) for link in links],
        "classes": [
            {
                "members": list(c.members),
                "l_tuples": [list(t) for t in c.signature.l_tuples],
                "r_tuples": [list(t) for t in c.signature.r_tuples],
                "shared_bound": _bound(c.shared_bound),
                "member_thm_bounds": [_bound(b) for b in c.member_bounds],
            }
            for c in classes
        ],
    }


# -- plumbing ----------------------------------------------------------------


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modlink", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"modlink {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("parse", cmd_parse, "canonical form of a code word")
    p.add_argument("word")
    p = add("bounds", cmd_bounds, "exponent sets and volume bounds of a link")
    p.add_argument("link", nargs="?", help="comma-separated code words")
    p.add_argument("--file", help="link-list file, one link per line")
    p = add("xy", cmd_xy, "XY cutting sequence of a slope")
    p.add_argument("--slope", type=_parse_slope, required=True, metavar="P/Q")
    p = add("lr-from-xy", cmd_lr_from_xy, "convert an XY word to LR letters")
    p.add_argument("xyword")
    p.add_argument("--case", choices=[c.value for c in SignCase], required=True)
    p = add("linear", cmd_linear, "bounded linearity test")
    p.add_argument("letters")
    p.add_argument("--bound", type=int)
    p.add_argument("--cyclic", action="store_true", help="read the word as closed")
    p = add("winding", cmd_winding, "winding subwords of a code word")
    p.add_argument("word")
    p = add("walk", cmd_walk, "trace letters through the triangulated grid")
    p.add_argument("letters")
    p.add_argument("--svg", help="write an SVG figure here")
    p.add_argument("--center", type=_parse_point, metavar="I,J")
    p = add("annulus", cmd_annulus, "reduce an ab-word, last winding number")
    p.add_argument("abword", help="letters a A b B (A = a^-1, B = b^-1)")
    p.add_argument("other", nargs="?", help="second ab-word to compare against")
    p = add("classify", cmd_classify, "partition links by base order")
    p.add_argument("--file", required=True)
    return parser


def _emit_text(outputs, indent=0) -> list[str]:
    lines = []
    pad = "  " * indent
    for key, value in outputs.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_emit_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  -")
                lines.extend(_emit_text(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return lines


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        inputs, outputs = args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"modlink: error: {exc}", file=sys.stderr)
        return 2
    except (ModlinkError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        report = {"command": args.command, "version": __version__,
                  "inputs": inputs, "outputs": outputs}
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_emit_text(outputs)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
