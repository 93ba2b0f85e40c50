"""Normal-form quivers for cluster-tilted algebras of affine type A.

A quiver in normal form is determined by four non-negative integers
(r1, r2, s1, s2) with r = r1+r2 > 0 and s = s1+s2 > 0.  It consists of a
cycle of vertices (the "circle") carrying two poles: a top pole where the
arrow chains alpha_1..alpha_r and beta_1..beta_s start, and a bottom pole
where both chains end.  The first r2 alpha arrows and the first s2 beta
arrows are each the base of an oriented 3-cycle with an apex vertex (A_i on
the alpha side, A'_j on the beta side); the remaining alpha_{r2+1..r} are
the r-arrows and beta_{s2+1..s} the s-arrows.  The relation ideal is
generated by all length-2 compositions inside the 3-cycles.

Vertex classes:
  A   apexes of alpha-cycles            A'  apexes of beta-cycles
  B   vertices on two alpha-cycles      B'  same on the beta side
  D   sources of r-arrows               D'  sources of s-arrows
  C   bottom pole unless r1 = s1 = 0    F'  bottom pole when r1 = s1 = 0
  F   top pole when s2 > 0 (the top pole is D0 when r2 = 0, D'0 when s2 = 0)

Each arrow additionally carries two signs S and T (a fixed assignment making
the algebra gentle); these drive composability of trivial strings and the
antipath machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateLabel,
    HereditaryCase,
    InvalidParameters,
    UnknownEntity,
    ValidationError,
)


def phi(a: int) -> int:
    """-1 when the argument is zero, 0 otherwise (degree-offset helper)."""
    return -1 if a == 0 else 0


@dataclass(frozen=True)
class Parameters:
    r1: int
    r2: int
    s1: int
    s2: int

    def __post_init__(self):
        for v in (self.r1, self.r2, self.s1, self.s2):
            if v < 0:
                raise InvalidParameters("parameters must be non-negative")
        if self.r == 0 or self.s == 0:
            raise InvalidParameters("need r1+r2 > 0 and s1+s2 > 0")

    @property
    def r(self) -> int:
        return self.r1 + self.r2

    @property
    def s(self) -> int:
        return self.s1 + self.s2

    def swapped(self) -> "Parameters":
        return Parameters(self.s1, self.s2, self.r1, self.r2)


def normalize_parameters(p: Parameters) -> Parameters:
    """Return an equivalent quadruple with r2 > 0, or reject the hereditary case.

    The roles of the two parameter pairs may be exchanged without changing
    the algebra up to derived equivalence, so a quadruple with r2 = 0 is
    replaced by its swap.  When both r2 and s2 vanish the algebra is
    hereditary and out of scope.
    """
    if p.r2 == 0 and p.s2 == 0:
        raise HereditaryCase("r2 = s2 = 0 is the hereditary case")
    return p if p.r2 > 0 else p.swapped()


@dataclass(frozen=True)
class Vertex:
    name: str           # canonical, e.g. "F", "B1", "A'2", "D'0"
    cls: str            # one of A A' B B' C D D' F F'
    index: int | None   # position within its class, None for C/F/F'

    def __repr__(self):
        return f"Vertex({self.name})"


@dataclass(frozen=True)
class Arrow:
    name: str           # canonical, e.g. "a1", "b3", "g2", "d4"
    kind: str           # "alpha" | "beta" | "gamma" | "delta"
    index: int
    source: Vertex
    target: Vertex
    s_sign: int         # S value in {-1, +1}
    t_sign: int         # T value in {-1, +1}

    def __repr__(self):
        return f"Arrow({self.name}: {self.source.name}->{self.target.name})"


_KIND_PREFIX = {"alpha": "a", "beta": "b", "gamma": "g", "delta": "d"}


class Quiver:
    """A normal-form quiver with its relations and string functions S, T.

    Instances are immutable after construction.  ``apply_labels`` returns a
    fresh quiver with user display labels attached; canonical names remain
    the source of truth for every computation.
    """

    def __init__(self, params: Parameters, *, vertex_labels=None, arrow_labels=None):
        if params.r2 == 0 and params.s2 == 0:
            raise HereditaryCase("cannot build the hereditary normal form")
        self.params = params
        self._build()
        self.vertex_labels: dict[str, str] = {}
        self.arrow_labels: dict[str, str] = {}
        self._label_to_vertex: dict[str, Vertex] = {}
        self._label_to_arrow: dict[str, Arrow] = {}
        self._walk_cache: dict = {}
        if vertex_labels or arrow_labels:
            self._attach_labels(vertex_labels or {}, arrow_labels or {})

    # -- construction -----------------------------------------------------

    def _spine_vertex(self, side: str, k: int, r1: int, r2: int) -> Vertex:
        # interior vertex k (1..r-1) of the alpha spine, or the beta mirror
        prime = "'" if side == "s" else ""
        if r2 == 0:
            return Vertex(f"D{prime}{k}", "D" + prime, k)
        if k < r2:
            return Vertex(f"B{prime}{k}", "B" + prime, k)
        if k == r2:
            return Vertex(f"D{prime}0", "D" + prime, 0)
        return Vertex(f"D{prime}{k - r2}", "D" + prime, k - r2)

    def _build(self):
        p = self.params
        r1, r2, s1, s2, r, s = p.r1, p.r2, p.s1, p.s2, p.r, p.s

        if r2 == 0:
            top = Vertex("D0", "D", 0)
        elif s2 == 0:
            top = Vertex("D'0", "D'", 0)
        else:
            top = Vertex("F", "F", None)
        bottom = Vertex("F'", "F'", None) if (r1 == 0 and s1 == 0) else Vertex("C", "C", None)

        rnode = [top] + [self._spine_vertex("r", k, r1, r2) for k in range(1, r)] + [bottom]
        snode = [top] + [self._spine_vertex("s", k, s1, s2) for k in range(1, s)] + [bottom]
        apex_r = [Vertex(f"A{i}", "A", i) for i in range(1, r2 + 1)]
        apex_s = [Vertex(f"A'{j}", "A'", j) for j in range(1, s2 + 1)]

        def alpha_signs(i):
            return (1, 1) if i == 1 else (-1, 1)

        def beta_signs(j):
            return (-1, -1) if j == s else (-1, 1)

        arrows: list[Arrow] = []
        for i in range(1, r + 1):
            ss, tt = alpha_signs(i)
            arrows.append(Arrow(f"a{i}", "alpha", i, rnode[i - 1], rnode[i], ss, tt))
        for j in range(1, s + 1):
            ss, tt = beta_signs(j)
            arrows.append(Arrow(f"b{j}", "beta", j, snode[j - 1], snode[j], ss, tt))
        for i in range(1, r2 + 1):
            # even gamma climbs to the apex, odd gamma descends from it
            ev_t = 1
            ev_s = 1
            od_s, od_t = (1, 1) if i == 1 else (1, -1)
            arrows.append(Arrow(f"g{2 * i}", "gamma", 2 * i, rnode[i], apex_r[i - 1], ev_s, ev_t))
            arrows.append(Arrow(f"g{2 * i - 1}", "gamma", 2 * i - 1, apex_r[i - 1], rnode[i - 1], od_s, od_t))
        for j in range(1, s2 + 1):
            if j == s:  # the cycle carrying beta_s (only possible when s1 = 0)
                ev_s, ev_t = -1, 1
            else:
                ev_s, ev_t = 1, 1
            od_s, od_t = 1, -1
            arrows.append(Arrow(f"d{2 * j}", "delta", 2 * j, snode[j], apex_s[j - 1], ev_s, ev_t))
            arrows.append(Arrow(f"d{2 * j - 1}", "delta", 2 * j - 1, apex_s[j - 1], snode[j - 1], od_s, od_t))

        by_name = {a.name: a for a in arrows}
        relations = set()
        for i in range(1, r2 + 1):
            a, ev, od = by_name[f"a{i}"], by_name[f"g{2 * i}"], by_name[f"g{2 * i - 1}"]
            relations |= {(a.name, ev.name), (ev.name, od.name), (od.name, a.name)}
        for j in range(1, s2 + 1):
            b, ev, od = by_name[f"b{j}"], by_name[f"d{2 * j}"], by_name[f"d{2 * j - 1}"]
            relations |= {(b.name, ev.name), (ev.name, od.name), (od.name, b.name)}

        seen: dict[str, Vertex] = {}
        for v in [top] + rnode[1:-1] + [bottom] + snode[1:-1] + apex_r + apex_s:
            seen.setdefault(v.name, v)
        self.vertices: tuple[Vertex, ...] = tuple(seen.values())
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        self.top, self.bottom = top, bottom
        self._rnode, self._snode = rnode, snode
        self._apex_r, self._apex_s = apex_r, apex_s
        self._arrow_by_name = by_name
        self._vertex_by_name = {v.name: v for v in self.vertices}
        self.relations: frozenset[tuple[str, str]] = frozenset(relations)
        self._out: dict[str, list[Arrow]] = {v.name: [] for v in self.vertices}
        self._in: dict[str, list[Arrow]] = {v.name: [] for v in self.vertices}
        for a in arrows:
            self._out[a.source.name].append(a)
            self._in[a.target.name].append(a)

    # -- basic accessors ---------------------------------------------------

    @property
    def r1(self):
        return self.params.r1

    @property
    def r2(self):
        return self.params.r2

    @property
    def s1(self):
        return self.params.s1

    @property
    def s2(self):
        return self.params.s2

    @property
    def r(self):
        return self.params.r

    @property
    def s(self):
        return self.params.s

    def alpha(self, i: int) -> Arrow:
        return self._arrow_by_name[f"a{i}"]

    def beta(self, j: int) -> Arrow:
        return self._arrow_by_name[f"b{j}"]

    def gamma(self, k: int) -> Arrow:
        return self._arrow_by_name[f"g{k}"]

    def delta(self, k: int) -> Arrow:
        return self._arrow_by_name[f"d{k}"]

    def apex_r(self, i: int) -> Vertex:
        return self._apex_r[i - 1]

    def apex_s(self, j: int) -> Vertex:
        return self._apex_s[j - 1]

    def rnode(self, k: int) -> Vertex:
        return self._rnode[k]

    def snode(self, k: int) -> Vertex:
        return self._snode[k]

    def vertex(self, name: str) -> Vertex:
        try:
            return self._vertex_by_name[name]
        except KeyError:
            raise UnknownEntity(f"no vertex named {name!r}") from None

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_by_name[name]
        except KeyError:
            raise UnknownEntity(f"no arrow named {name!r}") from None

    def out_arrows(self, v: Vertex) -> list[Arrow]:
        return self._out[v.name]

    def in_arrows(self, v: Vertex) -> list[Arrow]:
        return self._in[v.name]

    def is_relation(self, first: Arrow, then: Arrow) -> bool:
        """True when traversing ``first`` and then ``then`` lands in the ideal."""
        return (first.name, then.name) in self.relations

    def in_cycle(self, a: Arrow) -> bool:
        if a.kind in ("gamma", "delta"):
            return True
        if a.kind == "alpha":
            return a.index <= self.r2
        return a.index <= self.s2

    def class_members(self, cls: str) -> list[Vertex]:
        return [v for v in self.vertices if v.cls == cls]

    def class_census(self) -> dict[str, int]:
        census: dict[str, int] = {}
        for v in self.vertices:
            census[v.cls] = census.get(v.cls, 0) + 1
        return census

    # -- labels -------------------------------------------------------------

    def _attach_labels(self, vertex_labels: dict, arrow_labels: dict):
        for name in vertex_labels:
            if name not in self._vertex_by_name:
                raise UnknownEntity(f"vertex label map mentions unknown vertex {name!r}")
        for name in arrow_labels:
            if name not in self._arrow_by_name:
                raise UnknownEntity(f"arrow label map mentions unknown arrow {name!r}")
        for kind, labels, canon in (
            ("vertex", vertex_labels, self._vertex_by_name),
            ("arrow", arrow_labels, self._arrow_by_name),
        ):
            values = list(labels.values())
            if len(set(values)) != len(values):
                raise DuplicateLabel(f"duplicate {kind} label")
            clash = set(values) & (set(canon) - set(labels))
            if clash:
                raise DuplicateLabel(f"{kind} label {sorted(clash)[0]!r} shadows a canonical name")
        self.vertex_labels = dict(vertex_labels)
        self.arrow_labels = dict(arrow_labels)
        self._label_to_vertex = {lab: self._vertex_by_name[n] for n, lab in vertex_labels.items()}
        self._label_to_arrow = {lab: self._arrow_by_name[n] for n, lab in arrow_labels.items()}

    def vertex_token(self, v: Vertex) -> str:
        return self.vertex_labels.get(v.name, v.name)

    def arrow_token(self, a: Arrow) -> str:
        return self.arrow_labels.get(a.name, a.name)

    def vertex_by_token(self, token: str) -> Vertex:
        if token in self._label_to_vertex:
            return self._label_to_vertex[token]
        return self.vertex(token)

    def arrow_by_token(self, token: str) -> Arrow:
        if token in self._label_to_arrow:
            return self._label_to_arrow[token]
        return self.arrow(token)

    # -- reporting ----------------------------------------------------------

    def report(self) -> str:
        p = self.params
        lines = [f"normal form quiver, parameters (r1,r2,s1,s2) = ({p.r1},{p.r2},{p.s1},{p.s2})"]
        lines.append(f"{len(self.vertices)} vertices, {len(self.arrows)} arrows, "
                     f"{len(self.relations)} relations")
        lines.append("vertices:")
        for v in self.vertices:
            lab = f"  label {self.vertex_labels[v.name]}" if v.name in self.vertex_labels else ""
            lines.append(f"  {v.name:<6} class {v.cls}{lab}")
        lines.append("arrows:")
        for a in self.arrows:
            lab = f"  label {self.arrow_labels[a.name]}" if a.name in self.arrow_labels else ""
            lines.append(f"  {a.name:<4} {self.vertex_token(a.source):>5} -> "
                         f"{self.vertex_token(a.target):<5} S={a.s_sign:+d} T={a.t_sign:+d}{lab}")
        rels = sorted(self.arrow_token(self.arrow(b)) + self.arrow_token(self.arrow(a))
                      for a, b in self.relations)
        lines.append("relations (second composed after first): " + ", ".join(rels))
        return "\n".join(lines)

    def to_doc(self) -> dict:
        p = self.params
        return {
            "parameters": [p.r1, p.r2, p.s1, p.s2],
            "vertices": [
                {"name": v.name, "class": v.cls, "label": self.vertex_labels.get(v.name)}
                for v in self.vertices
            ],
            "arrows": [
                {"name": a.name, "label": self.arrow_labels.get(a.name),
                 "source": a.source.name, "target": a.target.name,
                 "S": a.s_sign, "T": a.t_sign}
                for a in self.arrows
            ],
            "relations": sorted([first, then] for first, then in self.relations),
        }


def build_normal_form(p: Parameters, *, vertex_labels=None, arrow_labels=None) -> Quiver:
    """Build the normal-form quiver for normalized parameters."""
    return Quiver(normalize_parameters(p), vertex_labels=vertex_labels, arrow_labels=arrow_labels)


def apply_labels(q: Quiver, vertex_labels=None, arrow_labels=None) -> Quiver:
    """Return a copy of ``q`` with user labels attached (canonical names kept)."""
    return Quiver(q.params, vertex_labels=vertex_labels, arrow_labels=arrow_labels)


def quiver_from_spec(doc: dict) -> Quiver:
    """Build a quiver from the structured spec document.

    Expected shape: ``{"parameters": [r1, r2, s1, s2],
    "vertex_labels": {...}?, "arrow_labels": {...}?}``.
    """
    try:
        r1, r2, s1, s2 = doc["parameters"]
    except (KeyError, TypeError, ValueError):
        raise ValidationError("spec document needs a 'parameters' list [r1,r2,s1,s2]") from None
    p = normalize_parameters(Parameters(int(r1), int(r2), int(s1), int(s2)))
    return Quiver(p,
                  vertex_labels=doc.get("vertex_labels") or {},
                  arrow_labels=doc.get("arrow_labels") or {})


def validate_gentle(q: Quiver) -> tuple[bool, list[str]]:
    """Check the gentle axioms for the stored S, T; return (ok, violations).

    Checked: in/out valency at most two; uniqueness of relational and
    non-relational continuations on both sides of every arrow; the four sign
    conditions relating S and T across shared vertices and compositions;
    relations only between composable arrow pairs.
    """
    bad: list[str] = []
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2:
            bad.append(f"vertex {v.name}: more than two arrows start here")
        if len(q.in_arrows(v)) > 2:
            bad.append(f"vertex {v.name}: more than two arrows end here")
        outs = q.out_arrows(v)
        for i in range(len(outs)):
            for k in range(i + 1, len(outs)):
                if outs[i].s_sign != -outs[k].s_sign:
                    bad.append(f"(a) S({outs[i].name}) = S({outs[k].name}) at {v.name}")
        ins = q.in_arrows(v)
        for i in range(len(ins)):
            for k in range(i + 1, len(ins)):
                if ins[i].t_sign != -ins[k].t_sign:
                    bad.append(f"(b) T({ins[i].name}) = T({ins[k].name}) at {v.name}")
    for first, then in q.relations:
        a, b = q.arrow(first), q.arrow(then)
        if a.target != b.source:
            bad.append(f"relation ({first},{then}) is not a composable pair")
    for b in q.arrows:  # b runs first
        rel_next = [a for a in q.out_arrows(b.target) if q.is_relation(b, a)]
        free_next = [a for a in q.out_arrows(b.target) if not q.is_relation(b, a)]
        if len(rel_next) > 1:
            bad.append(f"arrow {b.name}: two relational continuations")
        if len(free_next) > 1:
            bad.append(f"arrow {b.name}: two non-relational continuations")
        for a in rel_next:
            if a.s_sign != b.t_sign:
                bad.append(f"(d) S({a.name}) != T({b.name}) on relation")
        for a in free_next:
            if a.s_sign != -b.t_sign:
                bad.append(f"(c) S({a.name}) != -T({b.name}) on composition")
        rel_prev = [c for c in q.in_arrows(b.source) if q.is_relation(c, b)]
        free_prev = [c for c in q.in_arrows(b.source) if not q.is_relation(c, b)]
        if len(rel_prev) > 1:
            bad.append(f"arrow {b.name}: two relational predecessors")
        if len(free_prev) > 1:
            bad.append(f"arrow {b.name}: two non-relational predecessors")
    return (not bad, bad)
