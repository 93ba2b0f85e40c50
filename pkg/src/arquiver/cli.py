"""Command line interface.

One binary with subcommands; the quiver comes from ``--params r1,r2,s1,s2``
or ``--spec file.json``.  ``--format structured`` emits stable JSON
documents, ``fragment`` additionally understands ``--format dot`` and can
render a matplotlib figure next to its textual output via ``--figure``.

Exit codes: 0 ok, 2 parse/validation errors, 3 domain preconditions,
4 internal invariant breaches.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complexes as cx
from . import direct, triangles, walks
from .classify import ComponentId, census, classify, edge, enumerate_bands, fragment
from .errors import (
    ArquiverError,
    InternalInvariantError,
    PreconditionError,
    StringSyntaxError,
    ValidationError,
)
from .quiver import Parameters, Quiver, normalize_parameters, quiver_from_spec, validate_gentle
from .strings import is_band, parse


def _load_quiver(args) -> Quiver:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            return quiver_from_spec(json.load(fh))
    if args.params:
        try:
            nums = [int(t) for t in args.params.split(",")]
            r1, r2, s1, s2 = nums
        except ValueError:
            raise ValidationError("--params wants four comma-separated integers") from None
        return Quiver(normalize_parameters(Parameters(r1, r2, s1, s2)))
    raise ValidationError("give a quiver via --params r1,r2,s1,s2 or --spec file.json")


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(text)


def _node_text(q, node) -> str:
    m, w = node
    return f"{w.render()}[{m}]"


def _cmd_quiver(q, args):
    ok, bad = validate_gentle(q)
    doc = q.to_doc()
    doc["gentle"] = ok
    doc["violations"] = bad
    text = q.report() + "\n" + ("gentle conditions: pass" if ok else
                                "gentle conditions FAIL:\n  " + "\n  ".join(bad))
    _emit(args, doc, text)
    return 0 if ok else 4


def _cmd_parse(q, args):
    w = parse(q, args.string)
    doc = {
        "string": w.render(),
        "length": w.length,
        "source": None if w.is_empty else q.vertex_token(w.source),
        "target": None if w.is_empty else q.vertex_token(w.target),
        "degree": w.degree(),
        "segments": [p.render() for p in w.partition()] if w.length else [],
        "is_band": is_band(w),
    }
    text = (f"string   {doc['string']}\nlength   {doc['length']}\n"
            f"source   {doc['source']}\ntarget   {doc['target']}\n"
            f"degree   {doc['degree']}\nsegments {' | '.join(doc['segments']) or '-'}\n"
            f"band     {doc['is_band']}")
    _emit(args, doc, text)
    return 0


def _cmd_complex(q, args):
    w = parse(q, args.string)
    x = cx.build_string_complex(q, args.m, w)
    ok = cx.verify_d_squared(x)
    doc = x.to_doc()
    doc["d_squared_zero"] = ok
    _emit(args, doc, x.render() + f"\nd^2 = 0: {ok}")
    return 0 if ok else 4


def _cmd_triangle(q, args):
    w = parse(q, args.string)
    if args.ending:
        tri = triangles.ar_triangle_ending(q, args.m, w)
    else:
        tri = triangles.ar_triangle_starting(q, args.m, w)
    mids = " + ".join(_node_text(q, n) for n in tri.middles)
    text = (f"{_node_text(q, tri.start)} -> {mids} -> "
            f"{_node_text(q, tri.end)} -> {_node_text(q, tri.corner)}[1-shifted]")
    _emit(args, tri.to_doc(), text)
    return 0


def _cmd_tau(q, args):
    w = parse(q, args.string)
    node = (args.m, w)
    step = triangles.tau_inverse if args.inverse else triangles.tau
    for _ in range(args.k):
        node = step(q, node[0], node[1])
    _emit(args, {"degree": node[0], "string": node[1].render()}, _node_text(q, node))
    return 0


def _cmd_walk(q, args):
    x = q.vertex_by_token(args.vertex)
    kind = walks.WalkKind.from_token(args.kind)
    steps = walks.walk(q, x, kind, args.n)
    doc = {"vertex": q.vertex_token(x), "kind": kind.value,
           "steps": [s.render() for s in steps]}
    _emit(args, doc, "\n".join(f"w{i+1} = {s.render()}" for i, s in enumerate(steps)))
    return 0


def _cmd_reduce(q, args):
    w = parse(q, args.string)
    red = walks.reduce_to_base(q, w)
    doc = {
        "string": w.render(),
        "trace": [{"side": t.side, "kind": t.kind.value, "result": t.result.render()}
                  for t in red.trace],
        "base": red.base.render(),
        "base_type": red.base_type.value,
    }
    lines = [w.render()]
    for t in red.trace:
        lines.append(f"  --{t.side} {t.kind.value}--> {t.result.render()}")
    lines.append(f"base: {red.base.render()} ({red.base_type.value})")
    _emit(args, doc, "\n".join(lines))
    return 0


def _cmd_classify(q, args):
    w = parse(q, args.string)
    comp = classify(q, args.m, w)
    _emit(args, {"component": comp.token()}, comp.token())
    return 0


def _cmd_census(q, args):
    fams = census(q)
    doc = {"families": [f.to_doc() for f in fams]}
    lines = []
    for f in fams:
        extra = f" ({f.tau_relation})" if f.tau_relation else ""
        lines.append(f"{f.family:<10} {f.shape:<18} {f.count}{extra}")
        if f.sample_edge:
            lines.append("    edge: " + "  ".join(f"{w.render()}[{m}]" for w, m in f.sample_edge))
    _emit(args, doc, "\n".join(lines))
    return 0


def _parse_component(token: str) -> ComponentId:
    parts = token.split(":")
    fam = parts[0]
    try:
        if fam in ("r", "s"):
            return ComponentId(family=fam, residue=int(parts[1]))
        if fam in ("s-tube", "special"):
            return ComponentId(family=fam, shift=int(parts[1]))
    except (IndexError, ValueError):
        raise ValidationError(f"cannot parse component id {token!r}") from None
    if fam == "central":
        return ComponentId(family="central", key=":".join(parts[1:-1]),
                               shift=int(parts[-1]))
    raise ValidationError(f"cannot parse component id {token!r}")


def _cmd_edge(q, args):
    comp = _parse_component(args.component)
    period = edge(q, comp)
    doc = {"component": comp.token(),
           "edge": [[w.render(), m] for w, m in period]}
    _emit(args, doc, "  ".join(f"{w.render()}[{m}]" for w, m in period))
    return 0


def _cmd_fragment(q, args):
    w = parse(q, args.string)
    frag = fragment(q, args.m, w, args.rows, args.cols)
    if args.figure:
        from .figures import render_fragment_figure
        render_fragment_figure(frag, args.figure,
                               title=f"component fragment around {w.render()}[{args.m}]")
    if args.format == "dot" or args.dot:
        print(frag.to_dot())
        return 0
    rows_text = []
    for r in range(frag.rows - 1, -1, -1):
        cells = [frag.label(c, r) if (c, r) in frag.nodes else ""
                 for c in range(frag.cols)]
        rows_text.append(" | ".join(f"{t:^20}" for t in cells).rstrip())
    _emit(args, frag.to_doc(), "\n".join(rows_text))
    return 0


def _cmd_bands(q, args):
    bands = enumerate_bands(q, args.max_len)
    doc = {"max_len": args.max_len, "bands": [b.render() for b in bands]}
    _emit(args, doc, "\n".join(b.render() for b in bands))
    return 0


def _cmd_crosscheck(q, args):
    rep = direct.crosscheck(q, args.max_len)
    _emit(args, rep.to_doc(), rep.summary())
    return 0 if rep.clean else 4


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="arquiver",
        description="String calculus over normal-form quivers: complexes, "
                    "meshes, and component classification.")
    ap.add_argument("--params", help="quiver parameters r1,r2,s1,s2")
    ap.add_argument("--spec", help="path to a quiver spec document (JSON)")
    ap.add_argument("--format", choices=("text", "structured", "dot"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("quiver", help="print the quiver and validate the gentle axioms")

    p = sub.add_parser("parse", help="parse a string expression and describe it")
    p.add_argument("string")

    p = sub.add_parser("complex", help="materialize the string complex")
    p.add_argument("-m", type=int, default=0)
    p.add_argument("string")

    p = sub.add_parser("triangle", help="the almost split triangle at a complex")
    p.add_argument("--ending", action="store_true")
    p.add_argument("-m", type=int, default=0)
    p.add_argument("string")

    p = sub.add_parser("tau", help="apply the translate (or its inverse) k times")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-m", type=int, default=0)
    p.add_argument("string")

    p = sub.add_parser("walk", help="steps of a quiver walk")
    p.add_argument("vertex")
    p.add_argument("kind", help="cw-r, ccw-r, cw-s or ccw-s")
    p.add_argument("-n", type=int, default=6)

    p = sub.add_parser("reduce", help="admissible reductions down to a base string")
    p.add_argument("string")

    p = sub.add_parser("classify", help="component of a string complex")
    p.add_argument("-m", type=int, default=0)
    p.add_argument("string")

    sub.add_parser("census", help="list all component families")

    p = sub.add_parser("edge", help="one edge period of a component, e.g. r:0")
    p.add_argument("component")

    p = sub.add_parser("fragment", help="a rows-by-cols patch of a component")
    p.add_argument("-m", type=int, default=0)
    p.add_argument("string")
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=11)
    p.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    p.add_argument("--figure", help="also render the patch to this image file")

    p = sub.add_parser("bands", help="canonical bands up to a length bound")
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("crosscheck", help="dispatch tables vs the direct algorithm")
    p.add_argument("--max-len", type=int, required=True)

    return ap


_HANDLERS = {
    "quiver": _cmd_quiver,
    "parse": _cmd_parse,
    "complex": _cmd_complex,
    "triangle": _cmd_triangle,
    "tau": _cmd_tau,
    "walk": _cmd_walk,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
    "census": _cmd_census,
    "edge": _cmd_edge,
    "fragment": _cmd_fragment,
    "bands": _cmd_bands,
    "crosscheck": _cmd_crosscheck,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        q = _load_quiver(args)
        return _HANDLERS[args.command](q, args)
    except (ValidationError, StringSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InternalInvariantError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return 4
    except ArquiverError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
