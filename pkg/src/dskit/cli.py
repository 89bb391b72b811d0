"""Command-line interface.

Compute commands read a .cplx complex from FILE or stdin, so `gen`
composes with everything: `dskit gen cylinder | dskit f-vector`.

Exit codes: 0 all good, 1 a verified relation failed, 2 usage or
parameter validation, 3 file parse error (message carries the line
number), 4 precondition/domain failure (message carries a witness face)
or the face-count cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import balanced, generators, relations, stanley_reisner
from .complexes import Complex, parse_cplx, read_colors, write_cplx, write_colors
from .enumeration import (
    f_vector,
    h_vector,
    interior_f_vector,
    multiplicities,
    euler_from_f,
    reduced_euler_from_f,
)
from .errors import (
    DomainError,
    DskitError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .homology import (
    FieldSpec,
    boundary_faces_homological,
    is_downward_closed,
    reduced_betti,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4


def _read_complex(path: str, max_faces: int | None) -> Complex:
    if path == "-":
        return parse_cplx(sys.stdin.read(), max_faces=max_faces)
    return parse_cplx(Path(path).read_text(encoding="utf-8"), max_faces=max_faces)


def _read_coloring(cx: Complex, path: str) -> balanced.Coloring:
    kappa = read_colors(path)
    try:
        return balanced.validate_balanced(cx, kappa)
    except ValidationError as exc:
        # an unbalanced coloring is a precondition failure for flag commands
        raise PreconditionError(str(exc))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _print_json(data, out: str | None) -> None:
    _emit(json.dumps(data, indent=2) + "\n", out)


def _vector_text(vec) -> str:
    return " ".join(str(x) for x in vec) + "\n"


def _face_text(face) -> str:
    return " ".join(str(v) for v in face) if face else "-"


def _add_common(p: argparse.ArgumentParser, colors: bool = False) -> None:
    p.add_argument("file", nargs="?", default="-", help=".cplx file or - for stdin")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-faces", type=int, default=None, help="face-count cap")
    p.add_argument("-o", dest="out", default=None, help="write output to a file")
    if colors:
        p.add_argument("--colors", default=None, help=".colors sidecar file")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dskit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("f-vector", "h-vector", "multiplicities", "interior"):
        _add_common(sub.add_parser(name))

    p = sub.add_parser("classify")
    _add_common(p)
    p.add_argument("--field", default="q", help="q or a prime")

    p = sub.add_parser("betti")
    _add_common(p)
    p.add_argument("--field", default="q", help="q or a prime")

    p = sub.add_parser("verify")
    _add_common(p)
    p.add_argument("--field", default="q", help="q or a prime")
    p.add_argument(
        "--relation",
        default="all",
        choices=list(relations.RELATION_NAMES) + ["all"],
    )

    p = sub.add_parser("flag")
    _add_common(p, colors=True)

    p = sub.add_parser("hilbert")
    _add_common(p, colors=True)

    p = sub.add_parser("gen")
    p.add_argument("family", help=", ".join(generators.FAMILIES))
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-faces", type=int, default=None)
    p.add_argument("-o", dest="out", default=None)
    p.add_argument("--colors-out", default=None, help="write the canonical coloring")

    p = sub.add_parser("batch")
    p.add_argument("dir", help="directory of .cplx files")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-faces", type=int, default=None)
    p.add_argument("-o", dest="out", default=None)
    return ap


# -- subcommand bodies ----------------------------------------------------


def _cmd_vectors(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    f = f_vector(cx)
    if args.command == "f-vector":
        if args.json:
            _print_json({"f": [str(x) for x in f]}, args.out)
        else:
            _emit(_vector_text(f), args.out)
    else:
        h = h_vector(f)
        if args.json:
            _print_json({"h": [str(x) for x in h]}, args.out)
        else:
            _emit(_vector_text(h), args.out)
    return EXIT_OK


def _cmd_multiplicities(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    table = multiplicities(cx)
    f = f_vector(cx)
    if args.json:
        data = {
            "f": [str(x) for x in f],
            "h": [str(x) for x in h_vector(f)],
            "m": [
                {"face": list(face), "m": str(m)} for face, m in table.items()
            ],
            "chi": str(euler_from_f(f)),
            "chi_reduced": str(reduced_euler_from_f(f)),
        }
        _print_json(data, args.out)
    else:
        lines = [f"{_face_text(face)} : {m}" for face, m in table.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_interior(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    f_int = interior_f_vector(cx)
    if args.json:
        _print_json({"f_int": [str(x) for x in f_int]}, args.out)
    else:
        _emit(_vector_text(f_int), args.out)
    return EXIT_OK


def _cmd_classify(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    fld = FieldSpec.parse(args.field)
    cls = relations.classify(cx, fld)
    data = cls.to_json_dict()
    homology = {
        "homology_manifold": cls.homology_manifold,
        "witness": list(cls.witnesses["homology_manifold"])
        if "homology_manifold" in cls.witnesses
        else None,
        "boundary_faces": None,
        "boundary_is_subcomplex": None,
    }
    if cls.homology_manifold:
        bd = boundary_faces_homological(cx, fld)
        homology["boundary_faces"] = [list(face) for face in bd]
        homology["boundary_is_subcomplex"] = is_downward_closed(bd, cx)
    data["homology"] = homology
    if args.json:
        _print_json(data, args.out)
    else:
        lines = []
        for flag in ("reciprocal", "semi_eulerian", "eulerian", "homology_manifold"):
            val = getattr(cls, flag)
            suffix = ""
            if not val and flag in cls.witnesses:
                suffix = f"  (witness: {_face_text(cls.witnesses[flag])})"
            lines.append(f"{flag}: {str(val).lower()}{suffix}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_betti(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    fld = FieldSpec.parse(args.field)
    table = reduced_betti(cx, fld)
    if args.json:
        data = {
            "field": str(fld),
            "betti": [{"dim": i, "b": str(b)} for i, b in table.items()],
        }
        _print_json(data, args.out)
    else:
        _emit(
            " ".join(f"b[{i}]={b}" for i, b in table.items()) + "\n", args.out
        )
    return EXIT_OK


def _report_line(rep) -> str:
    if rep.skipped:
        return f"{rep.relation}: skipped ({rep.skipped})"
    if rep.holds:
        return f"{rep.relation}: ok"
    bad = [
        f"{lbl}={res}" for lbl, res in zip(rep.labels, rep.residuals) if res
    ]
    return f"{rep.relation}: FAIL [{', '.join(bad)}]"


def _cmd_verify(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    if args.relation == "all":
        reports = relations.verify_all(cx)
    else:
        reports = [relations.verify_relation(cx, args.relation)]
    if args.json:
        _print_json([rep.to_json_dict() for rep in reports], args.out)
    else:
        _emit("\n".join(_report_line(r) for r in reports) + "\n", args.out)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED


def _cmd_flag(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    if not args.colors:
        raise ValidationError("flag requires --colors")
    coloring = _read_coloring(cx, args.colors)
    f = balanced.flag_f(cx, coloring)
    h = balanced.flag_h(cx, coloring)
    entries = [
        {"b": list(b), "f": str(f[b]), "h": str(h[b])} for b in sorted(f)
    ]
    if args.json:
        _print_json({"a": list(coloring.a), "flags": entries}, args.out)
    else:
        lines = [
            "b=({}) f={} h={}".format(
                ",".join(str(x) for x in e["b"]), e["f"], e["h"]
            )
            for e in entries
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    cx = _read_complex(args.file, args.max_faces)
    if args.colors:
        coloring = _read_coloring(cx, args.colors)
        series = stanley_reisner.hilbert_series_colored(cx, coloring)
        numer = series.numerator
        if args.json:
            data = {
                "numerator": [
                    {"e": list(e), "c": str(c)} for e, c in numer.items_sorted()
                ],
                "denominator_exponent": list(series.denominator_exponent),
            }
            _print_json(data, args.out)
        else:
            terms = " ".join(
                f"({','.join(str(x) for x in e)}):{c}" for e, c in numer.items_sorted()
            )
            exps = ",".join(str(x) for x in series.denominator_exponent)
            _emit(f"numerator: {terms}\ndenominator: prod (1-w_i)^({exps})\n", args.out)
    else:
        series = stanley_reisner.hilbert_series(cx)
        if args.json:
            data = {
                "numerator": [str(c) for c in series.numerator.coeffs],
                "denominator_exponent": series.denominator_exponent,
            }
            _print_json(data, args.out)
        else:
            coeffs = " ".join(str(c) for c in series.numerator.coeffs)
            _emit(
                f"numerator: {coeffs}\ndenominator: (1-x)^{series.denominator_exponent}\n",
                args.out,
            )
    return EXIT_OK


def _cmd_gen(args) -> int:
    base = None
    params = list(args.params)
    if args.family == "barycentric-subdivision":
        if len(params) != 1:
            raise ValidationError("barycentric-subdivision takes one FILE parameter")
        base = _read_complex(params[0], args.max_faces)
        params = []
    made = generators.gen(args.family, params, base=base)
    _emit(write_cplx(made.complex), args.out)
    if args.colors_out:
        if made.coloring is None:
            raise ValidationError(
                f"family {args.family!r} has no canonical coloring"
            )
        Path(args.colors_out).write_text(
            write_colors(dict(made.coloring.kappa)), encoding="utf-8"
        )
    return EXIT_OK


def _cmd_batch(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise ValidationError(f"not a directory: {args.dir}")
    all_ok = True
    results = {}
    for path in sorted(root.glob("*.cplx")):
        cx = parse_cplx(path.read_text(encoding="utf-8"), max_faces=args.max_faces)
        reports = relations.verify_all(cx)
        results[path.name] = reports
        all_ok = all_ok and all(r.holds for r in reports)
    if args.json:
        data = {
            name: [rep.to_json_dict() for rep in reps]
            for name, reps in results.items()
        }
        _print_json(data, args.out)
    else:
        lines = []
        for name, reps in results.items():
            for rep in reps:
                status = "skip" if rep.skipped else ("ok" if rep.holds else "FAIL")
                lines.append(f"{name}\t{rep.relation}\t{status}")
        checked = sum(1 for reps in results.values() for r in reps if not r.skipped)
        failed = sum(1 for reps in results.values() for r in reps if not r.holds)
        lines.append(f"# {len(results)} files, {checked} relations checked, {failed} failed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all_ok else EXIT_FAILED


_COMMANDS = {
    "f-vector": _cmd_vectors,
    "h-vector": _cmd_vectors,
    "multiplicities": _cmd_multiplicities,
    "interior": _cmd_interior,
    "classify": _cmd_classify,
    "betti": _cmd_betti,
    "verify": _cmd_verify,
    "flag": _cmd_flag,
    "hilbert": _cmd_hilbert,
    "gen": _cmd_gen,
    "batch": _cmd_batch,
}


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"dskit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, DomainError, ResourceLimitError) as exc:
        print(f"dskit: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValidationError as exc:
        print(f"dskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DskitError as exc:
        print(f"dskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dskit: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
