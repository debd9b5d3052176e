"""Command-line interface.

Exit codes: 0 success; 2 parse/usage error; 3 unsupported combination for the
group's data tier; 4 internal consistency failure (cross-checking routes
disagreed -- never ignored).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

from . import closedforms as cf
from .diagrams import basis_count, enumerate_basis
from .errors import ConsistencyError, SpecError, UnsupportedQueryError
from .groups import (
    FULL,
    ParsedSpec,
    both_modules_gl2,
    both_modules_sl2,
    group_to_json,
    parse_spec_full,
)
from .quiver import (
    bratteli,
    bratteli_dot,
    mat_pow,
    mckay_adjacency,
    quiver_dot,
    walk_count_character,
)
from .series import egf_hyperbolic, egf_product, poincare_character, poincare_cramer
from .verify import run_suite


def thread_cap() -> int:
    """Requested parallelism cap from TENSOR_WALKS_THREADS (0 = auto).  All
    computations here are deterministic and single-threaded, which trivially
    respects any cap; the variable is validated so misconfiguration is loud."""
    raw = os.environ.get("TENSOR_WALKS_THREADS", "0")
    try:
        value = int(raw)
    except ValueError as exc:
        raise SpecError(f"TENSOR_WALKS_THREADS must be an integer, got {raw!r}") from exc
    if value < 0:
        raise SpecError("TENSOR_WALKS_THREADS must be nonnegative")
    return value or 1


def emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def emit_csv(rows) -> None:
    for row in rows:
        sys.stdout.write(",".join(str(x) for x in row) + "\n")


def _parse_group(text: str) -> ParsedSpec:
    return parse_spec_full(text)


def _node_index(spec: ParsedSpec, token: str) -> int:
    g = spec.group
    try:
        idx = int(token)
    except ValueError:
        if g.irreps is None:
            raise UnsupportedQueryError(
                f"group {g.name} has no irrep labels; use index 0")
        return g.irrep_index(token)
    n = g.n_classes
    if not 0 <= idx < n:
        raise SpecError(f"node index {idx} out of range 0..{n - 1}")
    return idx


def _abelian_element(radii, index: int) -> tuple[int, ...]:
    return list(itertools.product(*(range(r) for r in radii)))[index]


def _closed_walks(spec: ParsedSpec, k: int, frm: int, to: int) -> list[tuple[str, int]]:
    """All applicable family-specific closed-form evaluations."""
    out = []
    kind, params = spec.kind, spec.params
    if kind == "cyclic":
        out.append(("closed:binomial", cf.cyclic_walks(params["r"], k, frm, to)))
    elif kind == "abelian":
        radii = params["radii"]
        a = _abelian_element(radii, frm)
        c = _abelian_element(radii, to)
        diff = tuple((ci - ai) % ri for ai, ci, ri in zip(a, c, radii))
        out.append(("closed:multinomial", cf.abelian_walks(radii, k, diff)))
    elif kind in ("circulant", "paley"):
        r = params.get("r") or params.get("p")
        conn = params["connection"]
        out.append(("closed:multinomial", cf.circulant_walks(r, conn, k, (to - frm) % r)))
        if kind == "paley":
            out.append(("closed:gauss-sum",
                        cf.paley_closed_form(cf.paley_target_of(params["p"], (to - frm) % params["p"]), k)))
    elif kind == "symmetric" and frm == 0:
        from .combinatorics import partitions_of

        lam = partitions_of(params["n"])[to]
        out.append(("closed:stirling-kostka", cf.sn_irrep_dim_formula(params["n"], k, lam)))
    elif kind == "wreath" and frm == 0 and to == 0:
        out.append(("closed:wreath", cf.wreath_invariants(params["r"], params["n"], k)))
    elif kind in ("gl2", "sl2") and frm == 0 and to == 0:
        which = cf.STEINBERG if spec.steinberg else cf.INDUCED
        dims = cf.gl2_dims if kind == "gl2" else cf.sl2_dims
        out.append(("closed:linear-group", dims(params["q"], k, which)))
    return out


def cmd_walks(args) -> int:
    spec = _parse_group(args.group)
    frm = _node_index(spec, args.frm)
    to = _node_index(spec, args.to)
    g, v = spec.group, spec.module
    results: list[tuple[str, int]] = []
    methods = args.method
    if methods == "auto":
        if g.tier == FULL:
            a = mckay_adjacency(g, v)
            results.append(("matrix", mat_pow(a.rows(), args.k)[frm][to]))
            results.append(("character", walk_count_character(g, v, args.k, frm, to)))
        elif frm == 0 and to == 0:
            results.append(("character", walk_count_character(g, v, args.k, 0, 0)))
        results.extend(_closed_walks(spec, args.k, frm, to))
        if not results:
            raise UnsupportedQueryError(
                f"no applicable method for {g.name} from {frm} to {to}")
        counts = {c for _, c in results}
        if len(counts) != 1:
            raise ConsistencyError(f"methods disagree: {results}")
    elif methods == "matrix":
        a = mckay_adjacency(g, v)
        results.append(("matrix", mat_pow(a.rows(), args.k)[frm][to]))
    elif methods == "character":
        results.append(("character", walk_count_character(g, v, args.k, frm, to)))
    else:  # closed
        results = _closed_walks(spec, args.k, frm, to)
        if not results:
            raise UnsupportedQueryError(
                f"no closed form for {g.name} from node {frm} to {to}")
        if len({c for _, c in results}) != 1:
            raise ConsistencyError(f"closed forms disagree: {results}")
    count = results[0][1]
    emit({"group": g.name, "k": args.k, "from": frm, "to": to,
          "count": str(count), "methods": [m for m, _ in results]})
    return 0


def cmd_dims(args) -> int:
    spec = _parse_group(args.group)
    g, v = spec.group, spec.module
    if g.tier != FULL:
        raise UnsupportedQueryError(
            f"dims needs a full character table; {g.name} is invariant-only")
    a = mckay_adjacency(g, v)
    row = mat_pow(a.rows(), args.k)[0]
    labels = [i.label for i in g.irreps]
    if args.csv:
        emit_csv([("label", "count")] + [(lab, c) for lab, c in zip(labels, row)])
    else:
        emit({"group": g.name, "k": args.k,
              "dims": [{"label": lab, "count": str(c)} for lab, c in zip(labels, row)]})
    return 0


def cmd_invariants(args) -> int:
    spec = _parse_group(args.group)
    g, v = spec.group, spec.module
    counts = []
    for k in range(args.k + 1):
        routes = [walk_count_character(g, v, k, 0, 0)]
        routes.extend(c for _, c in _closed_walks(spec, k, 0, 0))
        if len(set(routes)) != 1:
            raise ConsistencyError(f"invariant routes disagree at k={k}: {routes}")
        counts.append(routes[0])
    if args.csv:
        emit_csv([("k", "count")] + list(enumerate(counts)))
    else:
        emit({"group": g.name, "counts": [str(c) for c in counts]})
    return 0


def cmd_poincare(args) -> int:
    spec = _parse_group(args.group)
    if args.module == "steinberg" and not spec.steinberg:
        if spec.kind not in ("gl2", "sl2"):
            raise UnsupportedQueryError("--module steinberg applies only to GL2/SL2")
        pair = both_modules_gl2(spec.params["q"]) if spec.kind == "gl2" else both_modules_sl2(spec.params["q"])
        spec = ParsedSpec(spec.kind, spec.params, spec.group, pair[1], True)
    g, v = spec.group, spec.module
    lam = _node_index(spec, args.lam)
    if args.method == "cramer":
        rf = poincare_cramer(mckay_adjacency(g, v), lam)
    elif args.method == "character":
        rf = poincare_character(g, v, lam)
    else:  # paper
        if spec.kind not in ("gl2", "sl2") or lam != 0:
            raise UnsupportedQueryError(
                "--method paper provides only the GL2/SL2 invariant series")
        which = cf.STEINBERG if spec.steinberg else cf.INDUCED
        rf = (cf.gl2_poincare if spec.kind == "gl2" else cf.sl2_poincare)(spec.params["q"], which)
    num, den = rf.display_pair()
    emit({"group": g.name, "lambda": lam, "method": args.method,
          "num": num.to_text(), "den": den.to_text(),
          "ratfunc": {"num": [str(Fraction(c)) for c in num.coeffs],
                      "den": [str(Fraction(c)) for c in den.coeffs]},
          "unreduced_degree": g.n_classes})
    return 0


def cmd_egf(args) -> int:
    spec = _parse_group(args.group)
    if spec.kind == "wreath":
        egf = cf.wreath_invariants_egf(spec.params["r"], spec.params["n"], args.order)
    elif spec.kind == "abelian":
        radii = spec.params["radii"]
        target = _parse_target(args.target, len(radii)) if args.target else (0,) * len(radii)
        for t, r in zip(target, radii):
            if not 0 <= t < r:
                raise SpecError(f"target component {t} out of range for Z{r}")
        egf = egf_product([egf_hyperbolic(1 + c, r, args.order)
                           for c, r in zip(target, radii)])
    else:
        raise UnsupportedQueryError(
            "EGFs are defined here for abelian and wreath-product groups")
    emit({"group": spec.group.name, "order": egf.order,
          "coeffs": [str(c) for c in egf.coeffs]})
    return 0


def _parse_target(text: str, n: int) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SpecError(f"bad target {text!r}; expected comma-separated integers") from exc
    if len(parts) != n:
        raise SpecError(f"target needs {n} components, got {len(parts)}")
    return parts


def cmd_bratteli(args) -> int:
    spec = _parse_group(args.group)
    bd = bratteli(spec.group, spec.module, args.levels)
    if args.format == "dot":
        sys.stdout.write(bratteli_dot(bd) + "\n")
    else:
        sys.stdout.write(bd.to_json() + "\n")
    return 0


def cmd_quiver(args) -> int:
    spec = _parse_group(args.group)
    a = mckay_adjacency(spec.group, spec.module)
    if args.format == "dot":
        sys.stdout.write(quiver_dot(spec.group, a) + "\n")
    else:
        labels = [i.label for i in spec.group.irreps]
        sys.stdout.write(a.to_json(labels) + "\n")
    return 0


def cmd_group(args) -> int:
    spec = _parse_group(args.group)
    sys.stdout.write(group_to_json(spec.group, spec.module) + "\n")
    return 0


def cmd_diagalg(args) -> int:
    spec = _parse_group(args.group)
    if spec.kind != "abelian":
        raise UnsupportedQueryError(
            "the diagram basis is defined for abelian groups with the "
            "coordinate module (use ZaxZb... or hypercube(n))")
    radii = spec.params["radii"]
    target = _parse_target(args.target, len(radii)) if args.target else None
    if args.list:
        elements = enumerate_basis(radii, args.k, target)
        emit({"group": spec.group.name, "k": args.k,
              "count": str(len(elements)),
              "elements": [{"bottom": list(e.bottom), "top": list(e.top)}
                           for e in elements]})
    else:
        emit({"group": spec.group.name, "k": args.k,
              "count": str(basis_count(radii, args.k, target))})
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for r in results:
        if r.ok:
            sys.stdout.write(f"PASS {r.name}\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL {r.name}: {r.detail}\n")
    sys.stdout.write(f"{len(results) - failures}/{len(results)} checks passed\n")
    return 0 if failures == 0 else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensorwalks",
        description="Exact walk counts, multiplicities, and Poincare series "
                    "on McKay quivers of finite groups.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_group(p):
        p.add_argument("--group", required=True,
                       help="group spec, e.g. Z10, Z4xZ2, S4, Z2wrS2, GL2(3), "
                            "SL2(3)@steinberg, paley(13), circulant(10;1,9), hypercube(3)")

    p = sub.add_parser("walks", help="count k-step walks between quiver nodes")
    add_group(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="frm", default="0")
    p.add_argument("--to", dest="to", default="0")
    p.add_argument("--method", choices=("auto", "matrix", "character", "closed"),
                   default="auto")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("dims", help="multiplicities of every irrep at tensor depth k")
    add_group(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("invariants", help="invariant dimensions for k = 0..K")
    add_group(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("poincare", help="Poincare series of walk multiplicities")
    add_group(p)
    p.add_argument("--lambda", dest="lam", default="0")
    p.add_argument("--method", choices=("cramer", "character", "paper"),
                   default="character")
    p.add_argument("--module", choices=("standard", "steinberg"), default="standard")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("egf", help="exponential generating function coefficients")
    add_group(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--target", help="comma-separated target element (abelian only)")
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("bratteli", help="branching diagram for levels 0..K")
    add_group(p)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("quiver", help="adjacency matrix of the McKay quiver")
    add_group(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("group", help="serialize the group and module data")
    add_group(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("diagalg", help="diagram basis of the centralizer algebra")
    add_group(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", help="comma-separated target element")
    p.add_argument("--list", action="store_true", help="materialize the elements")
    p.set_defaults(func=cmd_diagalg)

    p = sub.add_parser("verify", help="run a cross-check suite")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        thread_cap()
        return args.func(args)
    except SpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except UnsupportedQueryError as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return 3
    except ConsistencyError as exc:
        sys.stderr.write(f"consistency failure: {exc}\n")
        return 4
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
