"""
Command-line interface.

Structured results are printed as JSON (keys in a fixed order, so the same
command and seed give byte-identical output); ``kms`` sweeps are printed as
CSV with 12 significant digits.  Element grammar per family:

* ``nxp``: ``(n,p)`` with ``p`` a product of the generators;
* ``bs`` and ``free``: letter strings, ``1`` for the identity;
* ``matrix``: ``{"g": [..], "n": k}``;
* ``adding``: ``{"word": "..", "g": ".."}`` with ``g`` one of ``e``, ``g``, ``g^k``.

Exit codes: 0 success, 1 a verification suite failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import boundary, kms, ktheory, suites
from .core import CapExceededError, ParseError, RightLCMFamily, UnsupportedError, right_lcm
from .families import AddingMachine, BS, FreeMonoid, MatrixFamily, NxP, ore_degeneracies

MAX_BOUND = 8
MAX_SWEEP = 10_000


class UsageError(ValueError):
    """Invalid command-line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# families and elements


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def build_family(args) -> RightLCMFamily:
    kind = args.family
    try:
        if kind == "nxp":
            return NxP(_int_list(args.primes))
        if kind == "bs":
            return BS(args.c, args.d)
        if kind == "matrix":
            return MatrixFamily(json.loads(args.matrix))
        if kind == "free":
            return FreeMonoid(args.alphabet)
        if kind == "adding":
            return AddingMachine(args.alphabet if args.alphabet != "ab" else "01")
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {kind!r}")


def parse_element(family: RightLCMFamily, text: str):
    """Parse ``text`` in the family's element grammar."""
    return family.parse(text)


def _bound(value: int) -> int:
    if not 0 <= value <= MAX_BOUND:
        raise UsageError(f"bound must lie in [0, {MAX_BOUND}], got {value}")
    return value


# ---------------------------------------------------------------------------
# output


def load_schema(name: str) -> dict:
    """The JSON schema shipped for report or input type ``name``."""
    from importlib.resources import files

    return json.loads(files("rightlcm").joinpath("schemas", f"{name}.json").read_text())


def dump_json(data) -> str:
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def render_text(data, indent: int = 0) -> str:
    """Plain ``key: value`` rendering of a JSON report."""
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return "\n".join(lines)


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, (dict, list)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def _emit(args, data) -> str:
    text = render_text(data) if getattr(args, "text", False) else dump_json(data)
    return text + "\n"


def format_number(x: float) -> str:
    return f"{x:.12g}"


def sweep_csv(rows) -> str:
    """CSV with header ``beta,value`` (``beta,real,imag`` if any value is complex)."""
    complex_rows = any(isinstance(v, complex) and v.imag != 0 for _, v in rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if complex_rows:
        w.writerow(["beta", "real", "imag"])
        for b, v in rows:
            v = complex(v)
            w.writerow([format_number(b), format_number(v.real), format_number(v.imag)])
    else:
        w.writerow(["beta", "value"])
        for b, v in rows:
            w.writerow([format_number(b), format_number(complex(v).real)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _element_row(family, s) -> dict:
    parts = boundary.core_factorize(s)
    return {
        "element": str(s),
        "length": family.length(s),
        "unit": family.is_unit(s),
        "core": family.is_core(s),
        "core_irreducible": family.is_core_irreducible(s),
        "factorization": {"irreducible": str(parts.irreducible_part), "core": str(parts.core_part)},
    }


def cmd_analyze(args) -> dict:
    fam = build_family(args)
    bound = _bound(args.bound)
    try:
        scale = kms.scale_data(fam).to_json()
    except UnsupportedError:
        scale = None
    return {
        "family": fam.to_json(),
        "bound": bound,
        "elements": [_element_row(fam, s) for s in fam.enumerate(bound)],
        "diagram": boundary.diagram_report(fam).to_json(),
        "degeneracies": ore_degeneracies(fam, min(bound, 3)),
        "scale": scale,
        "minimality": kms.minimality_report(fam),
    }


def cmd_lcm(args) -> dict:
    fam = build_family(args)
    s, t = parse_element(fam, args.s), parse_element(fam, args.t)
    out = right_lcm(s, t)
    if out.is_disjoint:
        return {"result": "disjoint"}
    res = {"result": "meet", "lcm": str(out.generator)}
    if not fam.has_trivial_units:
        res["note"] = "canonical up to right units"
    return res


def cmd_core(args) -> dict:
    fam = build_family(args)
    return _element_row(fam, parse_element(fam, args.s))


def _load_foundation(args, fam):
    if args.input:
        data = json.loads(Path(args.input).read_text())
        return boundary.FoundationSet.from_json(data)
    if not args.elements:
        raise UsageError("give --elements or --input")
    return boundary.FoundationSet.of(fam, args.elements)


def cmd_foundation(args) -> dict:
    fam = build_family(args) if not args.input else None
    F = _load_foundation(args, fam)
    bound = _bound(args.bound)
    verdict = boundary.is_foundation(F, bound)
    witness = boundary.foundation_witness(F, bound) if not verdict else None
    out = {
        "set": F.to_json(),
        "foundation": verdict.value,
        "witness": str(witness) if witness is not None else None,
        "accurate": boundary.is_accurate(F),
        "proper": boundary.is_proper(F),
    }
    if args.refine:
        # refinements are only defined for foundation sets
        out["refinement"] = boundary.accurate_refine(F, bound).to_json() if verdict else None
    return out


def _betas(args) -> list[float]:
    if args.betas:
        try:
            vals = [float(x) for x in args.betas.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"could not read --betas {args.betas!r}") from None
    else:
        if args.steps < 1 or args.steps > MAX_SWEEP:
            raise UsageError(f"--steps must lie in [1, {MAX_SWEEP}]")
        if args.steps == 1:
            vals = [args.beta_min]
        else:
            h = (args.beta_max - args.beta_min) / (args.steps - 1)
            vals = [args.beta_min + i * h for i in range(args.steps)]
    if not vals or len(vals) > MAX_SWEEP:
        raise UsageError(f"need between 1 and {MAX_SWEEP} values of β")
    return vals


def _trace(args) -> kms.TraceSpec:
    if args.trace_file:
        return kms.TraceSpec.from_json(json.loads(Path(args.trace_file).read_text()))
    dim = args.trace_dim
    if args.trace == "canonical":
        return kms.TraceSpec.canonical_trace(dim)
    if args.trace == "uniform":
        return kms.TraceSpec.uniform([0, "1/2"], dim) if dim == 1 else kms.TraceSpec.uniform(
            [tuple([0] * dim), tuple(["1/2"] * dim)], dim
        )
    return kms.TraceSpec.point(0, dim)


def cmd_kms(args) -> str:
    fam = build_family(args)
    betas = _betas(args)
    ev = args.evaluator
    if ev == "zeta":
        f = lambda b: kms.zeta(fam, b, args.cutoff)  # noqa: E731
    elif ev == "zeta-closed":
        f = lambda b: kms.zeta_closed(fam, b)  # noqa: E731
    elif ev == "bs-series":
        f = lambda b: kms.psi_series_bs(fam, args.n, b, _trace(args))  # noqa: E731
    else:
        s = parse_element(fam, args.s)
        t = parse_element(fam, args.t if args.t is not None else args.s)
        x = kms.SpanningElement(s, t)
        if ev == "psi":
            f = lambda b: kms.psi_beta(x, b)  # noqa: E731
        elif ev == "psi-tau":
            tau = _trace(args)
            f = lambda b: kms.psi_beta_tau(x, b, tau)  # noqa: E731
        else:
            phi = _trace(args)
            f = lambda b: kms.ground_state(x, phi)  # noqa: E731
    return sweep_csv(kms.sweep(f, betas))


def cmd_ktheory(args) -> dict:
    if args.target == "bs":
        return ktheory.k_boundary_bs(args.c, args.d).to_json()
    P = _int_list(args.primes)
    K = ktheory.k_boundary_nxp(P)
    out = K.to_json()
    out["status"] = K.status
    out["g_P"] = ktheory.g_P(P)
    return out


def cmd_verify(args) -> dict:
    families = None
    if args.family:
        families = [build_family(args)]
    result = suites.run_suite(args.suite, args.seed, _bound(args.bound), families)
    return result.to_json()


def cmd_search(args) -> dict:
    fam = build_family(args)
    bound = _bound(args.bound)
    q = args.question
    out = {"family": fam.to_json(), "question": q, "bound": bound, "seed": args.seed}
    if q == "proper-translates":
        out["findings"] = boundary.search_proper_translates(fam, bound, args.seed)
    elif q == "unfactorizable":
        out["findings"] = boundary.search_unfactorizable(fam, bound)
    elif q == "terminating":
        chain = boundary.longest_chain(fam, bound)
        out["terminating"] = chain is not None
        out["longest_chain"] = chain
    else:
        out["findings"] = boundary.check_translate_factorization(fam, bound, args.seed)
    return out


# ---------------------------------------------------------------------------
# parser


def _add_family_flags(p, required=True):
    p.add_argument("--family", choices=["nxp", "bs", "matrix", "free", "adding"], required=required)
    p.add_argument("--primes", default="2,3", help="generators of P for nxp, e.g. 2,3")
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--matrix", default="[[1,1],[0,2]]", help="integer matrix A as JSON")
    p.add_argument("--alphabet", default="ab", help="alphabet for free (adding defaults to 01)")


def _add_common(p):
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--text", action="store_true", help="human-readable output instead of JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rightlcm", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="core and irreducible tables, quotient diagram, degeneracies")
    _add_family_flags(p)
    p.add_argument("--bound", type=int, default=2)
    _add_common(p)

    p = sub.add_parser("lcm", help="right LCM of two elements")
    _add_family_flags(p)
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    _add_common(p)

    p = sub.add_parser("core", help="core membership and factorization of one element")
    _add_family_flags(p)
    p.add_argument("--s", required=True)
    _add_common(p)

    p = sub.add_parser("foundation", help="foundation, accuracy and properness of a finite set")
    _add_family_flags(p, required=False)
    p.add_argument("--elements", nargs="*")
    p.add_argument("--input", help="foundation set JSON file")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--refine", action="store_true", help="also return an accurate refinement")
    _add_common(p)

    p = sub.add_parser("kms", help="CSV sweep of a KMS evaluator over β")
    _add_family_flags(p)
    p.add_argument(
        "--evaluator",
        choices=["psi", "psi-tau", "ground", "zeta", "zeta-closed", "bs-series"],
        default="psi",
    )
    p.add_argument("--s")
    p.add_argument("--t")
    p.add_argument("--n", type=int, default=1, help="exponent for the b^n series")
    p.add_argument("--cutoff", type=int, default=40)
    p.add_argument("--betas", help="comma separated β values")
    p.add_argument("--beta-min", type=float, default=1.5)
    p.add_argument("--beta-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--trace", choices=["point", "uniform", "canonical"], default="point")
    p.add_argument("--trace-dim", type=int, default=1)
    p.add_argument("--trace-file", help="trace JSON file")
    p.add_argument("--output", "-o")

    p = sub.add_parser("ktheory", help="K-groups of boundary quotients")
    p.add_argument("target", choices=["bs", "nxp"])
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--primes", default="3,5")
    _add_common(p)

    p = sub.add_parser("verify", help="run a property suite; exit 0 iff it passes")
    p.add_argument("--suite", choices=sorted(suites.SUITES) + sorted(suites.ALIASES), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=3)
    _add_family_flags(p, required=False)
    _add_common(p)

    p = sub.add_parser("search", help="bounded searches around the core factorization")
    _add_family_flags(p)
    p.add_argument(
        "--question",
        choices=["proper-translates", "unfactorizable", "terminating", "translate-factorization"],
        default="proper-translates",
    )
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "lcm": cmd_lcm,
    "core": cmd_core,
    "foundation": cmd_foundation,
    "kms": cmd_kms,
    "ktheory": cmd_ktheory,
    "verify": cmd_verify,
    "search": cmd_search,
}


def run(argv=None) -> tuple[int, str]:
    """Execute a command; return ``(exit code, output text)``."""
    args = build_parser().parse_args(argv)
    result = COMMANDS[args.command](args)
    text = result if isinstance(result, str) else _emit(args, result)
    code = 0
    if args.command == "verify" and not result["passed"]:
        code = 1
    return code, text


def main(argv=None) -> int:
    try:
        code, text = run(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, CapExceededError, UnsupportedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = _output_path(argv)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def _output_path(argv):
    args, _ = build_parser().parse_known_args(argv)
    return getattr(args, "output", None)


if __name__ == "__main__":
    sys.exit(main())
