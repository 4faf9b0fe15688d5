"""Command-line front end.

Exit codes: 0 success / affirmative answer, 1 negative mathematical answer
(e.g. not threshold), 2 usage or parse error, 3 enumeration budget exceeded,
4 internal verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .complex import is_shifted, join_decomposition, minimal_nonfaces, reduced_euler
from .errors import (
    BudgetExceeded,
    DomainError,
    MinkcxError,
    ParseError,
    StructuralError,
    VerificationError,
)
from .minkowski import minkowski_complex, verify_theorem1
from .realize import (
    discrete_realization,
    minkowski_complex_discrete,
    realize_boxes,
    reduce_dimension,
)
from .threshold import ctd_bounds, find_forbidden, recognize_threshold

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4

CTD_CONVENTION = (
    "ctd 0 belongs to the void complex only; any other complex needs a basepoint "
    "outside P_{} = {0}, hence dimension >= 1"
)


def _sets(sets) -> list:
    return [sorted(s) for s in sets]


def _emit(doc: dict, out) -> None:
    text = io.dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(command: str, result: dict, verified: bool = True) -> dict:
    return {"command": command, "result": result, "verified": verified}


def cmd_complex_info(args) -> int:
    cx = io.complex_from_doc(io.read_doc(args.complex))
    result = {"complex": io.complex_to_doc(cx), "reduced_euler": reduced_euler(cx)}
    if cx.is_void:
        result["note"] = "void complex: no faces, no minimal nonfaces"
    else:
        result["minimal_nonfaces"] = _sets(minimal_nonfaces(cx))
        result["shifted_identity_order"] = is_shifted(cx, list(range(1, cx.n + 1)))
        cert = recognize_threshold(cx)
        result["threshold"] = cert is not None
        if cert is not None:
            order = cert.ordering()
            result["weight_order"] = order
            result["shifted_weight_order"] = is_shifted(cx, order)
        try:
            blocks, cone = join_decomposition(cx)
            result["join_blocks"] = [list(b) for b in blocks]
            result["cone_vertices"] = list(cone)
        except DomainError as exc:
            result["join_blocks"] = None
            result["join_note"] = str(exc)
    _emit(_report("info", result), None)
    return EXIT_OK


def cmd_minkcx(args) -> int:
    fam = io.family_from_doc(io.read_doc(args.family))
    cx = minkowski_complex(fam)
    faces = sum(1 for _ in cx.faces())
    result = {
        "complex": io.complex_to_doc(cx),
        "faces": faces,
        "nonfaces": 2**cx.n - faces,
    }
    _emit(_report("minkcx", result), None)
    return EXIT_OK


def cmd_verify_thm1(args) -> int:
    fam = io.family_from_doc(io.read_doc(args.family))
    rep = verify_theorem1(fam)
    ok = rep.identity_holds and rep.pointwise_holds
    result = rep.as_dict()
    result["lhs"] = rep.sign * rep.cme
    result["rhs"] = rep.euler_sum
    result["status"] = "PASS" if ok else "FAIL"
    _emit(_report("verify-thm1", result, verified=ok), None)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_threshold(args) -> int:
    cx = io.complex_from_doc(io.read_doc(args.complex))
    if cx.is_void:
        raise DomainError("the void complex is not threshold in the sense used here")
    cert = recognize_threshold(cx)
    if cert is not None:
        result = {
            "threshold": True,
            "weights": io.format_vector(cert.weights),
            "mu": io.format_scalar(cert.threshold),
        }
        _emit(_report("threshold", result), None)
        return EXIT_OK
    w = find_forbidden(cx)
    result = {"threshold": False, "witness": None if w is None else w.as_dict()}
    _emit(_report("threshold", result), None)
    return EXIT_NEGATIVE


def cmd_ctd(args) -> int:
    cx = io.complex_from_doc(io.read_doc(args.complex))
    if cx.is_void:
        raise DomainError("ctd bounds are reported for non-void complexes only (void has ctd 0)")
    b = ctd_bounds(cx, budget=args.budget, seed=args.seed)
    fam_doc = io.family_to_doc(b.upper_evidence)
    result = {
        "lower": b.lower,
        "upper": b.upper,
        "lower_evidence": b.lower_evidence.as_dict(),
        "upper_trajectory": [{"from_dim": d, "direction": io.format_vector(v)} for d, v in b.trajectory],
        "convention": CTD_CONVENTION,
    }
    if args.out:
        Path(args.out).write_text(io.dumps(fam_doc))
        result["realization_file"] = str(args.out)
    else:
        result["realization"] = fam_doc
    _emit(_report("ctd", result), None)
    return EXIT_OK


def cmd_realize(args) -> int:
    cx = io.complex_from_doc(io.read_doc(args.complex))
    if cx.is_void:
        raise DomainError("cannot realize the void complex")
    fam = realize_boxes(cx)
    if args.mode == "boxes":
        doc = io.family_to_doc(fam)
        check = minkowski_complex(io.family_from_doc(io.loads(io.dumps(doc))))
    else:
        doc = io.discrete_to_doc(discrete_realization(fam, cx))
        check = minkowski_complex_discrete(io.discrete_from_doc(io.loads(io.dumps(doc))))
    if check != cx:
        raise VerificationError("emitted realization does not reproduce the complex; refusing to emit")
    _emit(doc, args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    fam = io.family_from_doc(io.read_doc(args.family))
    cx = io.complex_from_doc(io.read_doc(args.complex))
    if minkowski_complex(fam) != cx:
        raise DomainError("the family does not realize the complex")
    trace = []
    out = reduce_dimension(fam, cx, budget=args.budget, seed=args.seed, trace=trace)
    if minkowski_complex(out) != cx:
        raise VerificationError("reduced family does not reproduce the complex")
    doc = io.family_to_doc(out)
    result = {
        "start_dim": fam.dim,
        "final_dim": out.dim,
        "trajectory": [{"from_dim": d, "direction": io.format_vector(v)} for d, v in trace],
        "stopped": "no avoiding line found within budget" if out.dim > 0 else "dimension 0 reached",
    }
    if args.out:
        Path(args.out).write_text(io.dumps(doc))
        result["realization_file"] = str(args.out)
    else:
        result["realization"] = doc
    _emit(_report("reduce", result), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minkcx", description="Minkowski complexes and convex threshold dimension")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="combinatorial summary of a complex")
    s.add_argument("complex")
    s.set_defaults(func=cmd_complex_info)

    s = sub.add_parser("minkcx", help="Minkowski complex of a polytope family")
    s.add_argument("family")
    s.set_defaults(func=cmd_minkcx)

    s = sub.add_parser("verify-thm1", help="check (-1)^n CME = sum of reduced Euler characteristics")
    s.add_argument("family")
    s.set_defaults(func=cmd_verify_thm1)

    s = sub.add_parser("threshold", help="threshold certificate or forbidden witness")
    s.add_argument("complex")
    s.set_defaults(func=cmd_threshold)

    s = sub.add_parser("ctd", help="bounds on the convex threshold dimension")
    s.add_argument("complex")
    s.add_argument("--budget", type=int, default=32, help="direction candidates per search stage")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="write the upper-bound realization here")
    s.set_defaults(func=cmd_ctd)

    s = sub.add_parser("realize", help="verified realization of a complex")
    s.add_argument("complex")
    s.add_argument("--mode", choices=("boxes", "discrete"), default="boxes")
    s.add_argument("--out")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("reduce", help="project a realization along avoiding lines")
    s.add_argument("family")
    s.add_argument("complex")
    s.add_argument("--budget", type=int, default=32)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"minkcx: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"minkcx: internal verification failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ParseError, StructuralError, DomainError, MinkcxError) as exc:
        print(f"minkcx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
