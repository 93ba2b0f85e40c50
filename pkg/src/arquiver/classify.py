"""Component classification: every string complex lands in exactly one
connected component of the mesh, and the full census is known in advance.

Component families:

  r-components       r2 many, shape ZA-infinity, translate^r = shift [r2];
                     hold the A-stalks and the inverse r-arrows on the edge
  s-components       mirror family; when s2 = 0 they degenerate to tubes of
                     rank s1, one per integer shift
  special            one ZA-infinity-infinity component per shift carrying
                     all C/D/D' stalks of that degree (absent if r1 = s1 = 0)
  central            one ZA-infinity-infinity component per central string
                     and shift
  band tubes         homogeneous tubes indexed by (band, eigenvalue, shift)

``classify`` reduces a string to its base form, tracking the degree through
each admissible reduction: an upper-right reduction moves the degree by
m'(w), a lower-left one by -m'(result), and right-hand reductions leave it
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import BandComplexDescriptor, iso_normalize
from .errors import (
    EmptyString,
    InternalInvariantError,
    NoSuchComponent,
    NotAnEdgeComponent,
    PreconditionError,
)
from .quiver import Quiver
from .strings import (
    HomotopyString,
    Letter,
    canonical_band,
    concat,
    enumerate_strings,
    is_band,
)
from .triangles import m_prime, omega_plus, tau, tau_inverse
from .walks import (
    BaseType,
    WalkKind,
    left_admissible_reduction,
    right_admissible_reduction,
)


@dataclass(frozen=True)
class ComponentId:
    family: str                 # "r" | "s" | "s-tube" | "special" | "central" | "band-tube"
    residue: int | None = None  # for r/s families
    shift: int | None = None    # for s-tube/special/central/band-tube
    key: str | None = None      # central string or band, canonical rendering
    eigenvalue: str | None = None

    def token(self) -> str:
        if self.family in ("r", "s"):
            return f"{self.family}:{self.residue}"
        if self.family in ("s-tube", "special"):
            return f"{self.family}:{self.shift}"
        if self.family == "central":
            return f"central:{self.key}:{self.shift}"
        return f"band-tube:{self.key}:{self.eigenvalue}:{self.shift}"

    def __str__(self):
        return self.token()


def _tracked_base(q: Quiver, m: int, w: HomotopyString):
    """Reduce to a base form carrying the degree along; returns (m, base, type)."""
    from .walks import base_type_of

    cur_m, cur = m, w
    while True:
        bt = base_type_of(q, cur)
        if bt is not None:
            return cur_m, cur, bt
        got = left_admissible_reduction(q, cur)
        if got is not None:
            kind, nxt = got
            if kind in (WalkKind.CCW_R, WalkKind.CW_S):
                # the reduction is the upper-right neighbour of cur
                cur_m = cur_m + m_prime(q, cur)
            else:
                # lower-left neighbour: cur sits m'(nxt) above it
                cur_m = cur_m - m_prime(q, nxt)
            cur = nxt
            continue
        got = right_admissible_reduction(q, cur)
        if got is None:
            raise InternalInvariantError(
                f"non-base string {cur.render()} admits no admissible reduction")
        _, nxt = got   # both right-hand neighbours live at the same degree
        cur = nxt


def classify(q: Quiver, m: int, w: HomotopyString) -> ComponentId:
    """Component of the string complex w[m]."""
    if w.is_empty:
        raise EmptyString("the zero complex lies in no component")
    bm, base, bt = _tracked_base(q, m, w)
    if bt == BaseType.CENTRAL:
        cm, cw = iso_normalize(q, bm, base)
        return ComponentId(family="central", key=cw.render(), shift=cm)
    if bt == BaseType.STALK_CDD:
        return ComponentId(family="special", shift=bm)
    # edge seeds
    if base.is_trivial:
        v = base.trivial[0]
        if v.cls == "A":
            return ComponentId(family="r", residue=(v.index - bm) % q.r2)
        if q.s2 == 0:
            raise InternalInvariantError("A' stalk on an s2=0 quiver")
        return ComponentId(family="s", residue=(v.index - bm) % q.s2)
    letter = base.letters[0]
    if not letter.inverse:   # forward arrow w[m] = inverse arrow at m+1
        bm += 1
    if letter.arrow.kind == "alpha":
        return ComponentId(family="r", residue=(1 - bm) % q.r2)
    if q.s2 == 0:
        return ComponentId(family="s-tube", shift=bm)
    return ComponentId(family="s", residue=(1 - bm) % q.s2)


def classify_band(q: Quiver, d: BandComplexDescriptor) -> ComponentId:
    c = d.canonical()
    return ComponentId(family="band-tube", key=c.band.render(),
                       eigenvalue=c.eigenvalue, shift=c.base_degree)


# -- census ----------------------------------------------------------------------


@dataclass
class ComponentFamily:
    family: str
    shape: str                      # "ZA-inf" | "tube" | "ZA-inf-inf" | "homogeneous-tube"
    count: str                      # human-readable cardinality
    tau_relation: str | None = None
    parametrized_by: str | None = None
    sample_edge: list | None = None

    def to_doc(self):
        doc = {"family": self.family, "shape": self.shape, "count": self.count}
        if self.tau_relation:
            doc["tau_relation"] = self.tau_relation
        if self.parametrized_by:
            doc["parametrized_by"] = self.parametrized_by
        if self.sample_edge is not None:
            doc["sample_edge"] = [[w.render(), m] for w, m in self.sample_edge]
        return doc


def census(q: Quiver) -> list[ComponentFamily]:
    """The complete list of component families of the mesh category."""
    out = [ComponentFamily(
        family="band-tube", shape="homogeneous-tube", count="one per (band, scalar, shift)",
        parametrized_by="bands x k x Z")]
    out.append(ComponentFamily(
        family="r", shape="ZA-inf", count=str(q.r2),
        tau_relation=f"tau^{q.r} = [{q.r2}]",
        sample_edge=edge(q, ComponentId(family="r", residue=0))))
    if q.s2 == 0:
        out.append(ComponentFamily(
            family="s-tube", shape="tube", count="one per shift",
            tau_relation=f"rank {q.s1}", parametrized_by="Z",
            sample_edge=edge(q, ComponentId(family="s-tube", shift=0))))
    else:
        out.append(ComponentFamily(
            family="s", shape="ZA-inf", count=str(q.s2),
            tau_relation=f"tau^{q.s} = [{q.s2}]",
            sample_edge=edge(q, ComponentId(family="s", residue=0))))
    if q.r1 + q.s1 > 0:
        out.append(ComponentFamily(
            family="special", shape="ZA-inf-inf", count="one per shift",
            parametrized_by="Z"))
    out.append(ComponentFamily(
        family="central", shape="ZA-inf-inf", count="one per (central string, shift)",
        parametrized_by="central strings x Z"))
    return out


def _edge_side(q: Quiver, swapped: bool, anchor: int):
    """One edge period: stalks descending one degree per step, then the
    inverse plain arrows at constant degree, closing one full shift down."""
    if swapped:
        r1, r2 = q.s1, q.s2
        apex = q.apex_s
        arrow = q.beta
    else:
        r1, r2 = q.r1, q.r2
        apex = q.apex_r
        arrow = q.alpha
    period: list[tuple[HomotopyString, int]] = []
    m = anchor
    for i in range(r2, 0, -1):
        period.append((HomotopyString.make_trivial(q, apex(i), 1), m))
        m -= 1
    m += 1
    for i in range(r1 + r2, r2, -1):
        period.append((HomotopyString.word(q, (Letter(arrow(i), True),), validate=False), m))
    period.append((HomotopyString.make_trivial(q, apex(r2), 1), anchor - r2))
    return period


def edge(q: Quiver, comp: ComponentId):
    """One period of the component's edge, as (string, degree) pairs; the
    closing node repeats the first one shift lower."""
    if comp.family == "r":
        return _edge_side(q, False, (-comp.residue) % q.r2)
    if comp.family == "s":
        if q.s2 == 0:
            raise NoSuchComponent("s2 = 0: the s-side components are tubes")
        return _edge_side(q, True, (-comp.residue) % q.s2)
    if comp.family == "s-tube":
        if q.s2 != 0:
            raise NoSuchComponent("s2 > 0: the s-side components are not tubes")
        m = comp.shift or 0
        period = [(HomotopyString.word(q, (Letter(q.beta(j), True),), validate=False), m)
                  for j in range(q.s, q.s2, -1)]
        period.append(period[0])
        return period
    raise NotAnEdgeComponent(f"component {comp.token()} has no edge")


def special_component_maps(q: Quiver, i: int) -> dict:
    """The two stalk chains through the C-stalk of degree i in the special
    component: down-right along the D-stalks when r1 > 0, up-right along the
    D'-stalks when s1 > 0."""
    if q.r1 == 0 and q.s1 == 0:
        raise NoSuchComponent("no special component when r1 = s1 = 0")
    from .triangles import omega_plus_lower

    start = HomotopyString.make_trivial(q, q.bottom, -1)
    chains: dict[str, list[tuple[int, HomotopyString]]] = {"r_chain": [], "s_chain": []}
    if q.r1 > 0:
        chain = [(i, start)]
        cur = start
        for _ in range(q.r1):
            cur = omega_plus_lower(q, cur)
            if cur is None:
                raise InternalInvariantError("D-stalk chain broke early")
            chain.append((i, cur))
        chains["r_chain"] = chain
    if q.s1 > 0:
        chain = [(i, start)]
        m, cur = i, start
        for _ in range(q.s1):
            cur, mp = omega_plus(q, cur)
            if cur is None:
                raise InternalInvariantError("D'-stalk chain broke early")
            m += mp
            chain.append((m, cur))
        chains["s_chain"] = chain
    return chains


# -- mesh fragments -----------------------------------------------------------


@dataclass
class Fragment:
    rows: int
    cols: int
    # (col, row) -> (degree, string); row 0 is the translate orbit of the anchor
    nodes: dict[tuple[int, int], tuple[int, HomotopyString]]

    def arrows(self):
        out = []
        for (c, r) in self.nodes:
            for dr in (1, -1):
                if (c + 1, r + dr) in self.nodes:
                    out.append(((c, r), (c + 1, r + dr)))
        return out

    def label(self, c, r) -> str:
        m, w = self.nodes[(c, r)]
        return f"{w.render()}[{m}]"

    def to_doc(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "nodes": {f"{c},{r}": {"string": w.render(), "degree": m}
                      for (c, r), (m, w) in sorted(self.nodes.items())},
            "arrows": [[list(a), list(b)] for a, b in self.arrows()],
        }

    def to_dot(self) -> str:
        lines = ["digraph fragment {", "  rankdir=LR;", "  node [shape=plaintext];"]
        for (c, r) in sorted(self.nodes):
            lines.append(f'  "n{c}_{r}" [label="{self.label(c, r)}"];')
        for col in sorted({c for c, _ in self.nodes}):
            members = " ".join(f'"n{c}_{r}";' for c, r in sorted(self.nodes) if c == col)
            lines.append("  { rank=same; " + members + " }")
        for (a, b) in self.arrows():
            lines.append(f'  "n{a[0]}_{a[1]}" -> "n{b[0]}_{b[1]}";')
        lines.append("}")
        return "\n".join(lines)


def fragment(q: Quiver, m: int, w: HomotopyString, rows: int, cols: int) -> Fragment:
    """A rows-by-cols patch of the component of w[m].

    Row 0 is the translate orbit through the anchor (even columns); climbing
    a diagonal applies the upper-right operation.  Nodes sit at (col, row)
    with col and row of equal parity.
    """
    if w.is_empty:
        raise EmptyString("no fragment around the zero complex")
    if rows < 1 or cols < 1:
        raise PreconditionError("rows and cols must be positive")
    # translate orbit along row 0; diagonals entering from the left need a
    # few translates of the anchor as well
    kmin = -((rows - 1) // 2)
    kmax = (cols - 1) // 2
    orbit: dict[int, tuple[int, HomotopyString]] = {0: (m, w)}
    node = (m, w)
    for k in range(1, kmax + 1):
        node = tau_inverse(q, node[0], node[1])
        orbit[k] = node
    node = (m, w)
    for k in range(1, -kmin + 1):
        node = tau(q, node[0], node[1])
        orbit[-k] = node
    nodes: dict[tuple[int, int], tuple[int, HomotopyString]] = {}
    for k, anchor in orbit.items():
        cur_m, cur = anchor
        col = 2 * k
        row = 0
        while col < cols:
            if 0 <= col and 0 <= row < rows:
                nodes[(col, row)] = (cur_m, cur)
            row += 1
            if row >= rows:
                break
            nxt, mp = omega_plus(q, cur)
            if nxt is None:
                break
            cur_m, cur = cur_m + mp, nxt
            col += 1
    return Fragment(rows=rows, cols=cols, nodes=nodes)


# -- bands ------------------------------------------------------------------------


def central_band(q: Quiver) -> HomotopyString:
    """The band running once around the circle: up the beta chain backwards,
    down the alpha chain forwards."""
    letters = [Letter(q.beta(j), True) for j in range(1, q.s + 1)]
    letters += [Letter(q.alpha(i), False) for i in range(q.r, 0, -1)]
    return HomotopyString.word(q, letters)


def band_family(q: Quiver, n: int) -> HomotopyString:
    """The n-th member of the infinite band family: a seed band composed
    with n copies of the central band.  The seed depends on whether the
    alpha side is a single 3-cycle."""
    if n < 0:
        raise PreconditionError("family index must be non-negative")
    if q.r2 == 0:
        raise PreconditionError("band families need r2 > 0")
    betas_down = [Letter(q.beta(j), True) for j in range(1, q.s + 1)]
    betas_up = [Letter(q.beta(j), False) for j in range(q.s, 0, -1)]
    g1, g2 = Letter(q.gamma(1), False), Letter(q.gamma(2), False)
    a1 = Letter(q.alpha(1), False)
    if q.r == 1:
        seed = (betas_down + [g2.inv, g1.inv, a1.inv]
                + betas_up + [g1, g2, a1])
    else:
        alphas_up = [Letter(q.alpha(i), False) for i in range(q.r, 1, -1)]
        alphas_down = [Letter(q.alpha(i), True) for i in range(1, q.r + 1)]
        seed = (betas_down + alphas_up + [g2.inv, g1.inv]
                + alphas_down + betas_up + [g1, g2, a1])
    band = HomotopyString.word(q, seed)
    wc = central_band(q)
    for _ in range(n):
        band = concat(band, wc)
    return band


def enumerate_bands(q: Quiver, max_len: int) -> list[HomotopyString]:
    """All bands of length at most max_len, one canonical representative per
    rotation-and-inversion class, sorted by length then text."""
    seen: dict[str, HomotopyString] = {}
    for w in enumerate_strings(q, max_len):
        if w.source != w.target:
            continue
        if not is_band(w):
            continue
        c = canonical_band(w)
        seen.setdefault(c.render(), c)
    return sorted(seen.values(), key=lambda b: (b.length, b.render()))
