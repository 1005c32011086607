"""Command line front end.

Verbs:

  check              validate an algebra table, optionally cocycle vectors
  homset             coloring count of a link by a finite algebra
  cocycle-invariant  state-sum polynomial of each cocycle
  quiver             decorated coloring quiver, emitted as JSON
  invariants         counting invariant, cocycle invariants and the four
                     quiver polynomials in one report
  batch              one row per link; optional grouping by equal values

Algebras are named builtins (swap3, flip2, core-M, alexander-M-T,
trivial-N) or paths to JSON files {"n": n, "under": rows, "over": rows}
with 1-based entries; a file without "over" is read as a quandle.

Exit status: 0 success, 1 validation failure, 2 enumeration cap hit.
"""

import argparse
import json
import os
import sys

from .algebra import Biquandle, builtin, check_axioms, endomorphisms, is_homomorphism
from .catalog import catalog_names, get_diagram
from .cohomology import CoeffGroup, cocycle_invariant, h2_generators, is_cocycle
from .diagram import parse_gauss, parse_pd
from .homset import counting_invariant, pair_basis
from .polynomials import (
    LimitError,
    edge_char_polynomial,
    edge_matrix_polynomial,
    path_char_polynomial,
    path_matrix_polynomial,
)
from .quiver import DataVector, build_representation


def load_algebra(spec):
    if os.path.exists(spec):
        with open(spec) as fh:
            blob = json.load(fh)
        n = blob["n"]
        under = blob["under"]
        over = blob.get("over")
        if over is None:
            over = [[x] * n for x in range(1, n + 1)]
        if len(under) != n or len(over) != n:
            raise ValueError("table size does not match n=%d" % n)
        return Biquandle(under, over, name=os.path.basename(spec))
    try:
        return builtin(spec)
    except KeyError as exc:
        raise ValueError(str(exc.args[0]))


def load_link(args):
    name = args.link
    if name is None:
        raise ValueError("no link given (--link)")
    if name in catalog_names():
        return get_diagram(name)
    if args.format == "pd":
        return parse_pd(name)
    if args.format == "gauss":
        return parse_gauss(name)
    raise ValueError("link %r not in catalog; pass an inline code with --format" % name)


def load_cocycles(args, bq, coeff):
    spec = args.cocycles
    if spec is None:
        raise ValueError("no cocycles given (--cocycles)")
    if spec == "h2-generators":
        return [vec for _, vec in h2_generators(bq, coeff)]
    vectors = [list(v) for v in json.loads(spec)]
    want = len(pair_basis(bq))
    for vec in vectors:
        if len(vec) != want:
            raise ValueError("vector length %d, basis size %d" % (len(vec), want))
    for i, vec in enumerate(vectors):
        if not is_cocycle(bq, coeff, vec):
            # tolerated: any 2-cochain gives a well-defined quiver, it just
            # is not guaranteed to be a knot invariant
            print("note: vector %d is not a cocycle over %s" % (i + 1, coeff),
                  file=sys.stderr)
    return vectors


def load_endos(args, bq):
    spec = args.endos
    if spec is None or spec == "all-endomorphisms":
        return endomorphisms(bq)
    if spec == "identity":
        return [tuple(bq.elements)]
    endos = [tuple(e) for e in json.loads(spec)]
    for endo in endos:
        if not is_homomorphism(bq, bq, endo):
            raise ValueError("map %r is not an endomorphism" % (endo,))
    return endos


def emit(text, args):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def four_polynomials(diagram, data):
    rq = build_representation(diagram, data)
    return rq, {
        "chi_edge": edge_char_polynomial(rq).render(),
        "pm_edge": edge_matrix_polynomial(rq).render(),
        "chi_path": path_char_polynomial(rq).render(),
        "pm_path": path_matrix_polynomial(rq).render(),
    }


def cmd_check(args):
    if os.path.exists(args.quandle):
        with open(args.quandle) as fh:
            blob = json.load(fh)
        n = blob["n"]
        under = blob["under"]
        over = blob.get("over") or [[x] * n for x in range(1, n + 1)]
    else:
        bq = builtin(args.quandle)
        under, over = bq.under_table, bq.over_table
    problems = check_axioms(under, over)
    lines = []
    status = 0
    if problems:
        status = 1
        lines.extend("axiom: " + p for p in problems)
    else:
        lines.append("axioms: ok")
    if args.cocycles is not None and not problems:
        bq = Biquandle(under, over)
        coeff = CoeffGroup.parse(args.group)
        if args.cocycles == "h2-generators":
            vectors = [vec for _, vec in h2_generators(bq, coeff)]
        else:
            vectors = [list(v) for v in json.loads(args.cocycles)]
        for i, vec in enumerate(vectors):
            ok = is_cocycle(bq, coeff, vec)
            lines.append("cocycle %d over %s: %s" % (i + 1, coeff, "ok" if ok else "NOT a cocycle"))
            if not ok:
                status = 1
    emit("\n".join(lines), args)
    return status


def cmd_homset(args):
    d = load_link(args)
    bq = load_algebra(args.quandle)
    count = counting_invariant(d, bq)
    if args.json:
        emit(json.dumps({"link": d.name, "algebra": bq.name, "count": count}), args)
    else:
        emit("colorings: %d" % count, args)
    return 0


def cmd_cocycle_invariant(args):
    d = load_link(args)
    bq = load_algebra(args.quandle)
    coeff = CoeffGroup.parse(args.group)
    vectors = load_cocycles(args, bq, coeff)
    rows = [
        ("phi_%d" % (i + 1), cocycle_invariant(d, bq, coeff, vec).render())
        for i, vec in enumerate(vectors)
    ]
    if args.json:
        emit(json.dumps(dict(rows)), args)
    else:
        emit("\n".join("%s: %s" % row for row in rows), args)
    return 0


def cmd_quiver(args):
    d = load_link(args)
    bq = load_algebra(args.quandle)
    coeff = CoeffGroup.parse(args.group)
    data = DataVector(bq, coeff, load_cocycles(args, bq, coeff), load_endos(args, bq))
    rq = build_representation(d, data)
    emit(rq.to_json(), args)
    return 0


def cmd_invariants(args):
    d = load_link(args)
    bq = load_algebra(args.quandle)
    coeff = CoeffGroup.parse(args.group)
    vectors = load_cocycles(args, bq, coeff)
    data = DataVector(bq, coeff, vectors, load_endos(args, bq))
    _, polys = four_polynomials(d, data)
    record = {
        "link": d.name,
        "algebra": bq.name,
        "coefficients": str(coeff),
        "colorings": counting_invariant(d, bq),
    }
    for i, vec in enumerate(vectors):
        record["phi_%d" % (i + 1)] = cocycle_invariant(d, bq, coeff, vec).render()
    record.update(polys)
    if args.json:
        emit(json.dumps(record, indent=1), args)
    else:
        emit("\n".join("%s: %s" % (k, v) for k, v in record.items()), args)
    return 0


def _batch_subset(spec):
    names = catalog_names()
    if spec == "all":
        return names
    if spec == "classical":
        return [n for n in names if n.startswith("L")]
    if spec == "virtual":
        return [n for n in names if "." in n]
    return [n for n in spec.split(",") if n]


def cmd_batch(args):
    bq = load_algebra(args.quandle)
    coeff = CoeffGroup.parse(args.group)
    vectors = load_cocycles(args, bq, coeff)
    endos = load_endos(args, bq)
    data = DataVector(bq, coeff, vectors, endos)
    keys = ("chi_edge", "pm_edge", "chi_path", "pm_path")
    rows = []
    for name in _batch_subset(args.links):
        try:
            _, polys = four_polynomials(get_diagram(name), data)
            rows.append((name, polys, None))
        except LimitError as exc:
            rows.append((name, None, "limit: %s" % exc))
        except (KeyError, ValueError) as exc:
            rows.append((name, None, "error: %s" % exc))
    if args.group_by:
        groups = {}
        for name, polys, err in rows:
            value = polys[args.group_by] if polys else (err or "error")
            groups.setdefault(value, []).append(name)
        lines = ["%s: %s" % (v, " ".join(ns)) for v, ns in sorted(groups.items())]
        emit("\n".join(lines) if lines else "", args)
        return 0
    if args.json:
        blob = [
            {"link": name, **(polys or {"error": err})} for name, polys, err in rows
        ]
        emit(json.dumps(blob, indent=1), args)
        return 0
    lines = []
    for name, polys, err in rows:
        cells = [polys[k] for k in keys] if polys else [err]
        lines.append("\t".join([name] + cells))
    emit("\n".join(lines) if lines else "", args)
    return 0


def build_parser():
    top = argparse.ArgumentParser(prog="knotquiver", description=__doc__)
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p, link=True):
        if link:
            p.add_argument("--link", help="catalog name or inline diagram code")
            p.add_argument("--format", choices=("pd", "gauss"),
                           help="code format when --link is not a catalog name")
        p.add_argument("--quandle", required=True,
                       help="builtin algebra name or JSON table file")
        p.add_argument("--group", default="Z",
                       help="coefficient group: Z or an integer modulus")
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("check", help="validate axioms and cocycles")
    common(p, link=False)
    p.add_argument("--cocycles", help="JSON vectors or 'h2-generators'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("homset", help="coloring count")
    common(p)
    p.set_defaults(func=cmd_homset)

    p = sub.add_parser("cocycle-invariant", help="state-sum polynomials")
    common(p)
    p.add_argument("--cocycles", required=True)
    p.set_defaults(func=cmd_cocycle_invariant)

    p = sub.add_parser("quiver", help="decorated quiver as JSON")
    common(p)
    p.add_argument("--cocycles", required=True)
    p.add_argument("--endos", help="JSON maps, 'all-endomorphisms' or 'identity'")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("invariants", help="full single-link report")
    common(p)
    p.add_argument("--cocycles", required=True)
    p.add_argument("--endos")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("batch", help="table over several links")
    common(p, link=False)
    p.add_argument("--links", default="all",
                   help="comma list of names, or all/classical/virtual")
    p.add_argument("--cocycles", required=True)
    p.add_argument("--endos")
    p.add_argument("--group-by", dest="group_by",
                   choices=("chi_edge", "pm_edge", "chi_path", "pm_path"),
                   help="collapse the table into value classes")
    p.set_defaults(func=cmd_batch)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitError as exc:
        print("limit exceeded: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
