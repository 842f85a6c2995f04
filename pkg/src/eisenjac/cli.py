"""Command-line interface: ``eisenjac <command> ...``.

Exit status is 0 on success, 1 when a computation or check fails and 2 on
usage errors.  ``--json`` replaces the text report with one JSON object of
flat key/value pairs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .constructions import gen_family, parse_family, read_matrix, two_sum, write_matrix, format_matrix
from .eisenstein import Eisenstein, parse_eisenstein
from .hmatrix import (
    FULL_MODE_GUARD,
    HRepresentation,
    MinorGuardExceeded,
    ValidationError,
    apply_ops,
    parse_ops,
    validate,
)
from .jacobian import abelianize, compare, jacobian_class, jacobian_of
from .matrix import MatrixE, det
from .matroid import enumerate_bases
from .projection import averaging_matrix, projector

__all__ = ["main", "CommandResult"]


@dataclass
class CommandResult:
    exit_code: int
    report: str
    payload: dict = field(default_factory=dict)


class _Failure(Exception):
    pass


def _load(args, which: int = 0) -> tuple[str, MatrixE]:
    sources = [("file", f) for f in (args.file or [])] + [("family", f) for f in (args.family or [])]
    if which >= len(sources):
        raise _Usage("an input is required: --file PATH or --family SPEC")
    kind, value = sources[which]
    if kind == "file":
        try:
            return value, read_matrix(value)
        except OSError as exc:
            raise _Failure(f"cannot read {value}: {exc.strerror}") from None
    try:
        spec = parse_family(value)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    return str(spec), gen_family(spec, check=False).matrix


def _load_with_ops(args, which: int = 0) -> tuple[str, MatrixE]:
    name, M = _load(args, which)
    path = getattr(args, "ops", None)
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                ops = parse_ops(fh.read())
            M = apply_ops(M, ops)
        except OSError as exc:
            raise _Failure(f"cannot read {path}: {exc.strerror}") from None
        except (ValueError, IndexError) as exc:
            raise _Failure(f"{path}: {exc}") from None
        name = f"{name} after {len(ops)} ops"
    return name, M


class _Usage(Exception):
    pass


def _validated(args, M: MatrixE) -> HRepresentation:
    mode = "full" if getattr(args, "full", False) else "maximal"
    try:
        if getattr(args, "no_validate", False):
            return HRepresentation(M)
        return HRepresentation.checked(M, mode, guard=getattr(args, "guard", FULL_MODE_GUARD))
    except ValidationError as exc:
        raise _Failure(str(exc)) from None
    except MinorGuardExceeded as exc:
        raise _Failure(str(exc)) from None
    except ValueError as exc:
        raise _Failure(str(exc)) from None


def cmd_validate(args) -> CommandResult:
    name, M = _load_with_ops(args)
    mode = "full" if args.full else "maximal"
    try:
        report = validate(M, mode, guard=args.guard)
    except MinorGuardExceeded as exc:
        raise _Failure(str(exc)) from None
    payload = {"input": name, "mode": mode, "ok": report.ok, "minors_checked": report.minors_checked}
    if not report.ok:
        v = report.violation
        payload.update(
            violation_rows=[i + 1 for i in v.rows],
            violation_cols=[str(c) for c in v.cols],
            violation_value=str(v.value),
        )
    return CommandResult(0 if report.ok else 1, report.describe(), payload)


def cmd_jacobian(args) -> CommandResult:
    name, M = _load_with_ops(args)
    rep = _validated(args, M)
    j = jacobian_of(rep)
    A = j.representation
    basis_count = det(A @ A.H).a
    ab = abelianize(j)
    payload = {
        "input": name,
        "divisors": [str(d) for d in j.divisors],
        "elementary_divisors": [str(d) for d in j.all_divisors],
        "abelian": str(ab),
        "order": j.order,
        "bases": basis_count,
    }
    lines = [
        f"divisors: {', '.join(payload['divisors']) or '(trivial)'}",
        f"abelian: {payload['abelian']}",
        f"order: {j.order}",
        f"bases: {basis_count}",
    ]
    code = 0
    if args.verify:
        counted = len(enumerate_bases(A, check_count=False))
        ok = counted == basis_count and j.order == counted * counted
        payload["verified"] = ok
        lines.append(f"order = bases^2 {'verified' if ok else 'FAILED'} ({counted} bases enumerated)")
        code = 0 if ok else 1
    return CommandResult(code, "\n".join(lines), payload)


def cmd_bases(args) -> CommandResult:
    name, M = _load_with_ops(args)
    rep = _validated(args, M)
    A = rep.matrix.full_row_rank_restriction()
    bases = enumerate_bases(A)
    payload = {"input": name, "count": len(bases)}
    if args.count:
        return CommandResult(0, str(len(bases)), payload)
    payload["bases"] = [" ".join(str(x) for x in B) for B in bases]
    return CommandResult(0, "\n".join(payload["bases"] + [f"# {len(bases)} bases"]), payload)


def cmd_projection(args) -> CommandResult:
    name, M = _load_with_ops(args)
    rep = _validated(args, M)
    A = rep.matrix.full_row_rank_restriction()
    p = projector(A)
    ok = p.is_idempotent() and p.is_hermitian()
    lines = [f"projector: {A.cols}x{A.cols}, idempotent and Hermitian: {ok}",
             f"denominator: {p.P.denominator()}"]
    payload = {"input": name, "projector_ok": ok, "denominator": p.P.denominator()}
    if args.verify_averaging:
        try:
            N, kappa = averaging_matrix(A)
        except (AssertionError, ValueError) as exc:
            raise _Failure(str(exc)) from None
        herm = N.is_hermitian()
        lines.append(f"N = {kappa}·P verified")
        lines.append(f"N Hermitian: {herm}")
        payload.update(kappa=kappa, averaging_ok=True, n_hermitian=herm)
        ok = ok and herm
    if args.show:
        lines.append(format_matrix(A))
        lines += [" ".join(str(x) for x in r) for r in p.P.entries]
    return CommandResult(0 if ok else 1, "\n".join(lines), payload)


def cmd_twosum(args) -> CommandResult:
    n1, M1 = _load(args, 0)
    n2, M2 = _load(args, 1)
    b1 = _label_arg(args.basepoint1)
    b2 = _label_arg(args.basepoint2)
    if args.conjugate_second:
        M2 = M2.conj()
    if set(M1.col_labels) & set(M2.col_labels):
        M2 = M2.with_labels([f"{lab}'" for lab in M2.col_labels])
        b2 = f"{b2}'"
    try:
        rep = two_sum(M1, b1, M2, b2)
    except (ValidationError, MinorGuardExceeded, ValueError, KeyError) as exc:
        raise _Failure(str(exc)) from None
    out = rep.matrix.with_labels(range(1, rep.matrix.cols + 1))
    text = format_matrix(out)
    if args.output:
        write_matrix(out, args.output)
    payload = {"inputs": [n1, n2], "rows": out.rows, "cols": out.cols,
               "validated": rep.validated_level}
    return CommandResult(0, text.rstrip("\n"), payload)


def _label_arg(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def cmd_gen(args) -> CommandResult:
    name, M = _load_with_ops(args)
    if args.validate:
        _validated(args, M)
    text = format_matrix(M)
    if args.output:
        write_matrix(M, args.output)
    payload = {"family": name, "rows": M.rows, "cols": M.cols}
    return CommandResult(0, text.rstrip("\n"), payload)


def cmd_compare(args) -> CommandResult:
    n1, M1 = _load(args, 0)
    n2, M2 = _load(args, 1)
    j1 = jacobian_of(_validated(args, M1))
    j2 = jacobian_of(_validated(args, M2))
    same_e, same_z = compare(j1, j2)
    word = {True: "isomorphic", False: "different"}
    lines = [
        f"{n1}: {j1}  [{abelianize(j1)}]",
        f"{n2}: {j2}  [{abelianize(j2)}]",
        f"E-module: {word[same_e]}; abelian: {word[same_z]}",
    ]
    payload = {"inputs": [n1, n2], "e_module_isomorphic": same_e, "abelian_isomorphic": same_z}
    return CommandResult(0, "\n".join(lines), payload)


def cmd_class(args) -> CommandResult:
    name, M = _load_with_ops(args)
    rep = _validated(args, M)
    try:
        v = [parse_eisenstein(t) for t in args.vector.replace(",", " ").split()]
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if len(v) != rep.matrix.cols:
        raise _Usage(f"vector has {len(v)} entries, matrix has {rep.matrix.cols} columns")
    j = jacobian_of(rep)
    cls = jacobian_class(rep, v, j)
    trivial = all(a == 0 and b == 0 for a, b in cls)
    shown = [f"{Eisenstein(a, b)} mod ({d})" for (a, b), d in zip(cls, j.all_divisors) if d.norm() != 1]
    payload = {"input": name, "class": [[a, b] for a, b in cls], "trivial": trivial}
    return CommandResult(0, "trivial class" if trivial else "\n".join(shown), payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenjac",
        description="Jacobians of sixth-root-of-unity matroids from H-matrix representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, inputs=1, validation=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if inputs:
            p.add_argument("--file", action="append", metavar="PATH", help=".hmat input")
            p.add_argument("--family", action="append", metavar="SPEC",
                           help="built-in family, e.g. u24, t_r:4, whirl:3")
        if inputs == 1:
            p.add_argument("--ops", metavar="PATH",
                           help="apply an equivalence-op script (1-based indices) first")
        if validation:
            p.add_argument("--full", action="store_true",
                           help="check every subdeterminant instead of only maximal ones")
            p.add_argument("--guard", type=int, default=FULL_MODE_GUARD,
                           help="maximum number of minors to check")
            if name != "validate":
                p.add_argument("--no-validate", action="store_true",
                               help="trust the input (entries must still lie in H)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("validate", cmd_validate, "check the H-matrix property")
    p = add("jacobian", cmd_jacobian, "Jacobian divisors, abelian form, order")
    p.add_argument("--verify", action="store_true", help="enumerate bases and check order = bases^2")
    p = add("bases", cmd_bases, "enumerate bases")
    p.add_argument("--count", action="store_true", help="print only the number of bases")
    p = add("projection", cmd_projection, "orthogonal projection onto the row space")
    p.add_argument("--verify-averaging", action="store_true", help="check N = kappa * P")
    p.add_argument("--show", action="store_true", help="print the projector")
    p = add("twosum", cmd_twosum, "2-sum of two representations", inputs=2, validation=False)
    p.add_argument("--basepoint1", required=True)
    p.add_argument("--basepoint2", required=True)
    p.add_argument("--conjugate-second", action="store_true")
    p.add_argument("--output", metavar="PATH")
    p = add("gen", cmd_gen, "emit a built-in family as .hmat")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--validate", action="store_true", help="H-validate before writing")
    add("compare", cmd_compare, "compare two Jacobians", inputs=2)
    p = add("class", cmd_class, "class of a vector in the Jacobian")
    p.add_argument("--vector", required=True, help='entries such as "1 0 w 0"')
    return parser


def run(argv=None) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except _Failure as exc:
        return CommandResult(1, f"error: {exc}", {"error": str(exc)})
    except ValueError as exc:  # malformed input files, bad labels
        return CommandResult(1, f"error: {exc}", {"error": str(exc)})


def main(argv=None) -> int:
    args_json = "--json" in (sys.argv[1:] if argv is None else argv)
    result = run(argv)
    if args_json:
        print(json.dumps(result.payload, sort_keys=True))
    else:
        print(result.report)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
