"""
Command-line front end.

    skeinfrob mul --surface torus -N 3 "(1,0)" "(0,1)"
    skeinfrob pairing-det --surface annulus -N 5
    skeinfrob frobenius --surface annulus -N 5 --place z=2

Exit codes: 0 success, 2 parse error, 3 domain error (including requests the
theory does not determine), 4 degenerate place under ``--strict``, 1 for an
internal failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import annulus as ann
from . import pants, places, punctured, torus
from .charring import CharElement, CharFraction, laurent_embed
from .chebyshev import verify_cheb_identities, x_power_relation
from .cyclotomic import CycloScalar
from .errors import DomainError, NotComputableError, ParseError, SkeinError
from .laurent import LaurentPoly
from .linalg import RingMatrix
from .skein import ReducedSkein, SkeinElement
from .textio import parse_place, parse_skein

VERBS = ("mul", "reduce", "trace", "invert", "leftmat", "pairing", "pairing-det",
         "frobenius", "embed", "verify-identities", "thread", "quotient")
SURFACES = ("annulus", "pants", "torus", "ptorus")

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_DOMAIN, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class CommandError(Exception):
    def __init__(self, kind, message, code):
        super().__init__(message)
        self.kind = kind
        self.code = code


# -- JSON encoding --------------------------------------------------------------------


def _coeff(c: CycloScalar):
    return [list(t) for t in c.terms()]


def _key(k):
    return list(k) if isinstance(k, tuple) else k


def _terms(terms):
    return [{"key": _key(k), "coeff": _coeff(terms[k])} for k in sorted(terms)]


def encode(x):
    """Canonical JSON-ready form of any result object."""
    if isinstance(x, CycloScalar):
        return _coeff(x)
    if isinstance(x, punctured.PuncturedSkein):
        return {"basis": x.basis, "terms": _terms(x.terms)}
    if isinstance(x, (SkeinElement, CharElement)):
        return _terms(x.terms)
    if isinstance(x, CharFraction):
        return {"num": _terms(x.num.terms), "den": _terms(x.den.terms)}
    if isinstance(x, ReducedSkein):
        return {"basis": [_key(k) for k in x.basis], "coords": [encode(c) for c in x.coeffs]}
    if isinstance(x, RingMatrix):
        return [[encode(e) for e in r] for r in x.rows]
    if isinstance(x, LaurentPoly):
        return [{"exponents": list(e), "coeff": _coeff(x.terms[e])} for e in sorted(x.terms)]
    if isinstance(x, pants.FactoredElement):
        return [{"base": encode(f), "exponent": e} for f, e in x.factors]
    if isinstance(x, places.Verdict):
        return {"verdict": x.verdict,
                "determinant": None if x.determinant is None else encode(x.determinant),
                "reason": x.reason}
    if isinstance(x, dict):
        if x and all(isinstance(k, str) for k in x):
            return {k: encode(v) for k, v in x.items()}
        return [{"key": _key(k), "value": encode(v)} for k, v in sorted(x.items())]
    if isinstance(x, list):
        return [encode(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    raise TypeError(f"cannot encode {type(x).__name__}")


# -- human-readable text --------------------------------------------------------------------


def render(x) -> str:
    if isinstance(x, RingMatrix):
        return "\n".join("[ " + " | ".join(str(e) for e in r) + " ]" for r in x.rows)
    if isinstance(x, ReducedSkein):
        return "\n".join(f"{_key_text(k)}: {c}" for k, c in x.items() if not c.is_zero()) or "0"
    if isinstance(x, dict):
        return "\n".join(f"{_key_text(k)}: {v}" for k, v in sorted(x.items())) or "0"
    if isinstance(x, list):
        return "\n".join(render(v) for v in x)
    return str(x)


def _key_text(k):
    if isinstance(k, tuple):
        return "(" + ",".join(str(v) for v in k) + ")"
    return str(k)


# -- verbs ----------------------------------------------------------------------------------


def _operands(args, count=None):
    ops = [parse_skein(t, args.surface, args.N) for t in args.operands]
    if count is not None and len(ops) != count:
        raise CommandError("usage", f"{args.verb} takes {count} operand(s), got {len(ops)}",
                           EXIT_DOMAIN)
    if not ops:
        raise CommandError("usage", f"{args.verb} needs at least one operand", EXIT_DOMAIN)
    return ops


def _need(args, allowed):
    if args.surface not in allowed:
        raise CommandError(
            "unsupported-surface",
            f"{args.verb} is not available on the {args.surface} surface", EXIT_DOMAIN,
        )


def _place(args):
    if args.place is None:
        return None
    return parse_place(args.place, args.surface, args.N)


def do_mul(args):
    ops = _operands(args)
    out = ops[0]
    for v in ops[1:]:
        out = out * v
    return out


def do_reduce(args):
    (u,) = _operands(args, 1)
    s = args.surface
    if s == "annulus":
        return ann.ann_reduce(u)
    if s == "pants":
        return pants.pants_reduce(u)
    if s == "torus":
        if args.basis == "B":
            return torus.torus_reduce_to_B(u)
        if args.basis == "C":
            return {k: v for k, v in torus.torus_reduce_to_C(u)}
        return torus.torus_reduce_to_Bprime(u)
    return punctured.to_cheb_view(u)


def do_trace(args):
    (u,) = _operands(args, 1)
    return {"annulus": ann.ann_trace, "pants": pants.pants_trace,
            "torus": torus.torus_trace, "ptorus": punctured.punctured_trace}[args.surface](u)


def do_invert(args):
    _need(args, ("annulus", "torus"))
    (u,) = _operands(args, 1)
    return ann.ann_invert(u) if args.surface == "annulus" else torus.torus_invert(u)


def do_leftmat(args):
    _need(args, ("annulus", "torus"))
    (u,) = _operands(args, 1)
    return ann.ann_left_matrix(u) if args.surface == "annulus" else torus.torus_left_matrix(u)


def do_pairing(args):
    _need(args, ("annulus", "pants", "torus"))
    return places.pairing_matrix(args.surface, args.N)


def do_pairing_det(args):
    s, N = args.surface, args.N
    if s == "ptorus":
        raise NotComputableError("the trace pairing of the punctured torus is not determined")
    place = _place(args)
    if place is not None:
        return places.specialized_frobenius_check(s, N, place).determinant
    if s == "annulus":
        return ann.ann_pairing_det(N, method=args.method)
    if s == "pants":
        return pants.pants_pairing_det(N)
    return torus.torus_pairing_det(N, method=args.method)


def do_frobenius(args):
    s, N = args.surface, args.N
    place = _place(args)
    if s == "ptorus":
        v = places.specialized_frobenius_check(s, N, place)
    elif place is None:
        det = do_pairing_det(args)
        v = places.Verdict("degenerate" if det.is_zero() else "frobenius",
                           reason="generic fiber")
    else:
        v = places.specialized_frobenius_check(s, N, place)
    return v


def do_embed(args):
    _need(args, ("torus",))
    (u,) = _operands(args, 1)
    return laurent_embed(u)


def do_verify(args):
    N = args.N
    if args.surface == "torus":
        return [{"identity": c.name, "at": list(c.params), "ok": c.ok}
                for c in torus.verify_identities(N)]
    if args.surface == "ptorus":
        return [{"identity": "delta-power-relation", "at": [N],
                 "ok": punctured.verify_delta_power_relation(N)}]
    out = [{"identity": "chebyshev", "at": [m, n], "ok": verify_cheb_identities(m, n)}
           for m in range(13) for n in range(13)]
    try:
        x_power_relation(N)
        ok = True
    except AssertionError:
        ok = False
    out.append({"identity": "x-power-relation", "at": [N], "ok": ok})
    return out


def do_thread(args):
    _need(args, ("annulus", "pants", "torus"))
    (u,) = _operands(args, 1)
    return {"annulus": ann.ann_thread, "pants": pants.pants_thread,
            "torus": torus.torus_thread}[args.surface](u)


def do_quotient(args):
    _need(args, ("ptorus",))
    (u,) = _operands(args, 1)
    return punctured.quotient_to_torus(u)


HANDLERS = {
    "mul": do_mul, "reduce": do_reduce, "trace": do_trace, "invert": do_invert,
    "leftmat": do_leftmat, "pairing": do_pairing, "pairing-det": do_pairing_det,
    "frobenius": do_frobenius, "embed": do_embed, "verify-identities": do_verify,
    "thread": do_thread, "quotient": do_quotient,
}


# -- entry point -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skeinfrob",
        description="Exact skein algebra computations at odd roots of unity.",
    )
    p.add_argument("verb", choices=VERBS)
    p.add_argument("operands", nargs="*", help="skein expressions")
    p.add_argument("--surface", choices=SURFACES, default="torus")
    p.add_argument("-N", type=int, required=True, help="odd level >= 3")
    p.add_argument("--place", help="e.g. z=3/2, q=A, lambda=2,mu=3")
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.add_argument("--basis", choices=("B", "Bprime", "C"), default="Bprime",
                   help="torus reduction target")
    p.add_argument("--method", choices=("bareiss", "gauss"), default="bareiss",
                   help="determinant algorithm")
    p.add_argument("--strict", action="store_true",
                   help="exit with status 4 when the verdict is degenerate")
    return p


def _emit(args, payload, out):
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def run(argv=None, out=None) -> int:
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    args = build_parser().parse_intermixed_args(argv)
    head = {"verb": args.verb, "surface": args.surface, "N": args.N}
    try:
        if args.N < 3 or args.N % 2 == 0:
            raise DomainError(f"N must be odd and at least 3, got {args.N}")
        result = HANDLERS[args.verb](args)
    except ParseError as exc:
        return _fail(args, head, "parse", str(exc), EXIT_PARSE, out, column=exc.column)
    except CommandError as exc:
        return _fail(args, head, exc.kind, str(exc), exc.code, out)
    except NotComputableError as exc:
        return _fail(args, head, "not-computable", str(exc), EXIT_DOMAIN, out)
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        return _fail(args, head, "domain", str(exc), EXIT_DOMAIN, out)
    except SkeinError as exc:
        return _fail(args, head, "internal", str(exc), EXIT_INTERNAL, out)

    code = EXIT_OK
    if isinstance(result, places.Verdict):
        if result.verdict == "not computable":
            code = EXIT_DOMAIN
        elif result.verdict == "degenerate" and args.strict:
            code = EXIT_DEGENERATE
    if args.verb == "verify-identities" and not all(r["ok"] for r in result):
        code = EXIT_INTERNAL

    if args.json:
        _emit(args, {**head, "result": encode(result)}, out)
    elif args.verb == "verify-identities":
        for r in result:
            at = ",".join(str(v) for v in r["at"])
            out.write(f"{r['identity']}({at}): {'ok' if r['ok'] else 'FAILED'}\n")
    else:
        out.write(render(result) + "\n")
    return code


def _fail(args, head, kind, message, code, out, column=None):
    if args.json:
        err = {"kind": kind, "message": message}
        if column is not None:
            err["column"] = column
        _emit(args, {**head, "error": err}, out)
    else:
        sys.stderr.write(f"skeinfrob: {kind} error: {message}\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
