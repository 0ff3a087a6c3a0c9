"""Command-line interface.

Exit codes: 0 success, 1 mathematical infeasibility (a computation that ran
fine but whose verdict is "no": non-integral class, unsolvable degree
equation, failed identity), 2 usage or input errors.  Output is
deterministic; rationals are printed as "p/q" strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chow import ChowVector
from .cycles import CleanCycleModel, convolve, schur_cycle
from .lambdaring import (
    GroupRingElement,
    NonIntegralResultError,
    TensorConstruction,
    gr_adams,
    gr_multiply,
    lambda_op,
    schur_apply,
    sym_op,
)
from .lierep import (
    Character,
    classify_wmf,
    freudenthal_character,
    quasi_minuscule_dim_search,
    root_system,
    wmf_tables_csv,
)
from .schottky import (
    PpavInput,
    cc_odp,
    fake_jacobian_solve,
    fourfold_table,
    fourfold_table_csv,
    genus5_obstruction,
    s_sets,
    simplicity_criteria,
    summand_bound,
    theta_group,
    verify_inverse_galois,
)
from .symfun import elementary_to_powersum, partitions, schur_to_powersum

USAGE_ERROR = 2
MATH_NO = 1


class InputError(Exception):
    pass


def _emit(args, payload, csv_text=None, text=None):
    if args.format == "csv":
        if csv_text is None:
            raise InputError("this subcommand has no CSV output")
        sys.stdout.write(csv_text)
    elif args.format == "text":
        sys.stdout.write((text if text is not None else json.dumps(payload, sort_keys=True, indent=2)) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _parse_coords(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad coordinate list {text!r}: {exc}") from None


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_cycle(path) -> CleanCycleModel:
    """Load and fully validate a cycle file; error messages name the field."""
    data = _load_json(path)
    try:
        return CleanCycleModel.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"cycle schema violation in {path}: missing/bad field {exc}") from None
    except (ValueError, ArithmeticError) as exc:
        raise InputError(f"cycle invariant violated in {path}: {exc}") from None


def load_character(path) -> Character:
    data = _load_json(path)
    try:
        return Character.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"character schema violation in {path}: missing/bad field {exc}") from None
    except (ValueError, ArithmeticError) as exc:
        raise InputError(f"character invariant violated in {path}: {exc}") from None


def _load_element(data) -> GroupRingElement:
    try:
        return GroupRingElement.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"group-ring element schema violation: {exc}") from None


def _symexpr_json(expr):
    return {
        "basis": expr.basis,
        "terms": [
            [list(p.parts), str(c)]
            for p, c in sorted(expr.terms.items(), key=lambda kv: kv[0].parts, reverse=True)
        ],
    }


# -- subcommand handlers: return process exit code ---------------------------


def _cmd_symfun(args):
    if args.what == "partitions":
        ps = partitions(int(args.arg))
        _emit(args, {"n": int(args.arg), "partitions": [list(p.parts) for p in ps]},
              text="\n".join(str(p) for p in ps))
        return 0
    if args.what == "schur":
        expr = schur_to_powersum(_parse_coords(args.arg))
    elif args.what == "elementary":
        expr = elementary_to_powersum(int(args.arg))
    else:
        raise InputError(f"unknown symfun operation {args.what!r}")
    _emit(args, _symexpr_json(expr), text=str(expr))
    return 0


def _cmd_lambda_eval(args):
    data = _load_json(args.input)
    x = _load_element(data["element"])
    op = data["op"]
    kind = op["kind"]
    try:
        if kind == "adams":
            out = gr_adams(int(op["n"]), x)
        elif kind == "lambda":
            out = lambda_op(int(op["k"]), x)
        elif kind == "sym":
            out = sym_op(int(op["k"]), x)
        elif kind == "schur":
            out = schur_apply(tuple(op["alpha"]), x)
        elif kind == "multiply":
            out = gr_multiply(x, _load_element(op["other"]))
        else:
            raise InputError(f"unknown op kind {kind!r}")
    except NonIntegralResultError as exc:
        _emit(args, {"error": "non-integral result", "detail": str(exc)})
        return MATH_NO
    _emit(args, out.to_json())
    return 0


def _cmd_cycle_convolve(args):
    data = _load_json(args.input)
    c1 = CleanCycleModel.from_json(data["c1"])
    c2 = CleanCycleModel.from_json(data["c2"])
    out = convolve(c1, c2, int(data["d_trunc"]))
    _emit(args, out.to_json())
    return 0


def _cmd_cycle_schur(args):
    data = _load_json(args.input)
    c = CleanCycleModel.from_json(data["cycle"])
    try:
        out = schur_cycle(tuple(data["alpha"]), c, int(data["d_trunc"]))
    except NonIntegralResultError as exc:
        _emit(args, {"error": "non-integral result", "detail": str(exc)})
        return MATH_NO
    _emit(args, out.to_json())
    return 0


def _cmd_rep_dim(args):
    rs = root_system(args.type)
    dim = rs.weyl_dim(_parse_coords(args.weight))
    _emit(args, {"type": rs.name, "weight": list(_parse_coords(args.weight)), "dim": dim},
          text=str(dim))
    return 0


def _cmd_rep_char(args):
    rs = root_system(args.type)
    ch = freudenthal_character(rs, _parse_coords(args.weight))
    csv_lines = ["weight,multiplicity"] + [
        f"{' '.join(map(str, w))},{m}" for w, m in sorted(ch.weights.items())
    ]
    _emit(args, ch.to_json(), csv_text="\n".join(csv_lines) + "\n")
    return 0


def _cmd_rep_classify(args):
    rows = classify_wmf(args.max_rank, args.max_dim)
    payload = {"max_rank": args.max_rank, "max_dim": args.max_dim,
               "rows": [r.to_json() for r in rows]}
    csv_lines = ["type,weight,dim,minuscule,fs,family,group"] + [
        f"{r.letter}{r.rank},{' '.join(map(str, r.weight))},{r.dim},"
        f"{r.minuscule},{r.fs},{r.family},{r.group}"
        for r in rows
    ]
    _emit(args, payload, csv_text="\n".join(csv_lines) + "\n")
    return 0


def _cmd_wmf_tables(args):
    csv_text = wmf_tables_csv(args.max_rank, args.max_dim)
    _emit(args, {"csv": csv_text}, csv_text=csv_text, text=csv_text)
    return 0


def _ppav_from_args(args):
    return PpavInput(
        g=args.g,
        k=args.k,
        symmetric=not args.not_symmetric,
        double_points_sum_zero=args.sum_zero,
        pairwise_torsion_independent=not args.torsion_dependent,
        stabilizer_trivial=True,
        gauss_finite=args.gauss_finite,
    )


def _cmd_theta_group(args):
    out = theta_group(_ppav_from_args(args))
    _emit(args, out.to_json(), text=out.label)
    return 0


def _cmd_cc_odp(args):
    out = cc_odp(_ppav_from_args(args))
    _emit(args, out.to_json())
    return 0


def _cmd_genus5(args):
    p = PpavInput(g=5, k=args.k, gauss_finite=args.gauss_finite)
    rec = genus5_obstruction(p)
    _emit(args, rec)
    return 0 if rec["integral"] else MATH_NO


def _cmd_fake_jacobian(args):
    g = args.g
    from .schottky import _theta_cm
    from .cycles import CycleComponent

    cm = _theta_cm(g, args.degree)
    if args.cm1 is not None:
        coords = list(cm.coords)
        coords[1] = Fraction(args.cm1)
        cm = ChowVector(g, tuple(coords))
    target = CleanCycleModel(
        g=g,
        components=(
            CycleComponent("theta", dim=g - 1, mult=1, cm=cm, gauss_finite=True),
        ),
    )
    rec = fake_jacobian_solve(g, target, hyperelliptic=args.hyperelliptic)
    _emit(args, rec)
    return 0 if rec["feasible"] else MATH_NO


def _cmd_summand_bound(args):
    dims = [int(x) for x in args.dims.split(",")] if args.dims else []
    rec = summand_bound(dims, args.dz)
    _emit(args, rec)
    return MATH_NO if rec["no_decomposition"] else 0


def _cmd_simplicity(args):
    c = load_cycle(args.input)
    rec = simplicity_criteria(c, args.divisor, m_bound=args.m_bound)
    _emit(args, rec)
    return 0


def _cmd_fourfold_table(args):
    _emit(args, fourfold_table(), csv_text=fourfold_table_csv())
    return 0


def _cmd_qm_search(args):
    matches = quasi_minuscule_dim_search(args.dim, args.max_rank)
    _emit(
        args,
        {
            "dim": args.dim,
            "max_rank": args.max_rank,
            "matches": [{"type": t, "weight": list(w)} for t, w in matches],
        },
    )
    return 0


def _cmd_s_sets(args):
    sm, sp = s_sets(args.bound)
    _emit(args, {"bound": args.bound, "s_minus": sm, "s_plus": sp})
    return 0


def _cmd_verify_ig(args):
    data = _load_json(args.input)
    target = _load_element(data["target"])
    construction = TensorConstruction.from_json(data["construction"])
    candidates = [_load_element(c) for c in data["candidates"]]
    ok = verify_inverse_galois(target, construction, int(data["e"]), candidates)
    _emit(args, {"verified": ok})
    return 0 if ok else MATH_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetacycles",
        description="exact calculus of clean cycles, characters and "
        "theta-divisor obstructions",
    )
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    # the flag is also accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering the top-level value when absent
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("symfun", help="partition and basis-transition queries")
    p.add_argument("what", choices=("partitions", "schur", "elementary"))
    p.add_argument("arg", help="integer or comma-separated partition")
    p.set_defaults(func=_cmd_symfun)

    p = add_parser("lambda-eval", help="evaluate group-ring operations")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_lambda_eval)

    p = add_parser("cycle-convolve", help="convolve two cycles")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_cycle_convolve)

    p = add_parser("cycle-schur", help="Schur operation on a cycle")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_cycle_schur)

    p = add_parser("rep-dim", help="Weyl dimension")
    p.add_argument("type")
    p.add_argument("weight")
    p.set_defaults(func=_cmd_rep_dim)

    p = add_parser("rep-char", help="full weight multiplicity map")
    p.add_argument("type")
    p.add_argument("weight")
    p.set_defaults(func=_cmd_rep_char)

    p = add_parser("rep-classify", help="weight multiplicity free sweep")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=600)
    p.set_defaults(func=_cmd_rep_classify)

    p = add_parser("wmf-tables", help="classification tables")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=600)
    p.set_defaults(func=_cmd_wmf_tables)

    for name, fn in (("theta-group", _cmd_theta_group), ("cc-odp", _cmd_cc_odp)):
        p = add_parser(name)
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--k", type=int, default=0)
        p.add_argument("--sum-zero", action="store_true")
        p.add_argument("--torsion-dependent", action="store_true")
        p.add_argument("--not-symmetric", action="store_true")
        p.add_argument("--gauss-finite", action="store_true")
        p.set_defaults(func=fn)

    p = add_parser("genus5", help="genus-5 Schottky obstruction")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--gauss-finite", action="store_true")
    p.set_defaults(func=_cmd_genus5)

    p = add_parser("fake-jacobian", help="solve the exterior-power equation")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--hyperelliptic", action="store_true")
    p.add_argument("--cm1", help="degree-1 coefficient of the target, as p/q")
    p.set_defaults(func=_cmd_fake_jacobian)

    p = add_parser("summand-bound")
    p.add_argument("--dims", required=True, help="support dims, comma separated")
    p.add_argument("--dz", type=int, required=True)
    p.set_defaults(func=_cmd_summand_bound)

    p = add_parser("simplicity")
    p.add_argument("--input", required=True)
    p.add_argument("--divisor", default="theta")
    p.add_argument("--m-bound", type=int, default=4)
    p.set_defaults(func=_cmd_simplicity)

    p = add_parser("fourfold-table")
    p.set_defaults(func=_cmd_fourfold_table)

    p = add_parser("qm-search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-rank", type=int, default=20)
    p.set_defaults(func=_cmd_qm_search)

    p = add_parser("s-sets")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_s_sets)

    p = add_parser("verify-ig", help="check an inverse-Galois identity")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_verify_ig)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NonIntegralResultError as exc:
        print(f"non-integral result: {exc}", file=sys.stderr)
        return MATH_NO
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
