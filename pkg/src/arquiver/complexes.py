"""String complexes: graded projectives with path-labelled differentials.

A string w with segments sigma_L ... sigma_1 and a base degree m produce a
complex with one indecomposable projective summand per prefix index
i in [0, L], placed in degree m + deg(prefix(i)) at the projective over the
prefix's source vertex.  Differential entries are the forward versions of
the segments, stored symbolically as path labels; composites vanish exactly
when they pass through the relation ideal, which is what the d^2 check
verifies.

Band complexes are never expanded to the chain level; they are carried
symbolically as (base degree, band, eigenvalue, Jordan size) descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, PreconditionError
from .quiver import Quiver, Vertex
from .strings import HomotopyString, canonical_band, is_band


@dataclass(frozen=True)
class PathLabel:
    """A non-zero forward path, the label of one differential entry."""
    string: HomotopyString  # direct word

    def render(self) -> str:
        return "p_" + "".join(l.token(self.string.quiver) for l in self.string.letters)


@dataclass
class StringComplex:
    quiver: Quiver
    base_degree: int
    string: HomotopyString
    # degree -> ordered list of (prefix index, vertex)
    objects: dict[int, list[tuple[int, Vertex]]]
    # degree d -> matrix rows over slots at d+1, cols over slots at d
    differentials: dict[int, list[list[PathLabel | None]]]

    @property
    def is_zero(self) -> bool:
        return not self.objects

    def degrees(self) -> list[int]:
        return sorted(self.objects)

    def summand_count(self) -> int:
        return sum(len(slots) for slots in self.objects.values())

    def render(self) -> str:
        if self.is_zero:
            return "0 (zero complex)"
        q = self.quiver
        lines = []
        for d in self.degrees():
            obj = " + ".join(f"P_{q.vertex_token(v)}" for _, v in self.objects[d])
            lines.append(f"degree {d}: {obj}")
            mat = self.differentials.get(d)
            if mat is not None:
                rows = ["[" + ", ".join(e.render() if e else "0" for e in row) + "]"
                        for row in mat]
                lines.append("  d -> " + "; ".join(rows))
        return "\n".join(lines)

    def to_doc(self) -> dict:
        q = self.quiver
        return {
            "base_degree": self.base_degree,
            "string": self.string.render(),
            "objects": {str(d): [f"P_{q.vertex_token(v)}" for _, v in self.objects[d]]
                        for d in self.degrees()},
            "differentials": {
                str(d): [[e.render() if e else None for e in row] for row in mat]
                for d, mat in sorted(self.differentials.items())
            },
        }


def build_string_complex(q: Quiver, m: int, w: HomotopyString) -> StringComplex:
    """Materialize the complex of w at base degree m."""
    if w.is_empty:
        return StringComplex(q, m, w, {}, {})
    if w.is_trivial:
        return StringComplex(q, m, w, {m: [(0, w.trivial[0])]}, {})
    parts = w.partition()
    L = len(parts)
    # prefix degrees and source vertices for i in [0, L]
    degs = [m]
    verts = [w.target]
    d = m
    for part in parts:
        d += -1 if part.letters[0].inverse else 1
        degs.append(d)
        verts.append(part.source)
    objects: dict[int, list[tuple[int, Vertex]]] = {}
    for i in range(L + 1):
        objects.setdefault(degs[i], []).append((i, verts[i]))
    for slots in objects.values():
        slots.sort(key=lambda t: t[0])
    differentials: dict[int, list[list[PathLabel | None]]] = {}
    for d in objects:
        if d + 1 not in objects:
            continue
        cols = objects[d]
        rows = objects[d + 1]
        mat: list[list[PathLabel | None]] = []
        for i, _ in rows:
            row: list[PathLabel | None] = []
            for j, _ in cols:
                entry = None
                if i == j - 1 and parts[i].letters[0].inverse:
                    entry = PathLabel(parts[i].inverse())
                elif i == j + 1 and not parts[j].letters[0].inverse:
                    entry = PathLabel(parts[j])
                row.append(entry)
            mat.append(row)
        differentials[d] = mat
    return StringComplex(q, m, w, objects, differentials)


def _path_vanishes(q: Quiver, first: HomotopyString, then: HomotopyString) -> bool:
    """Whether traversing ``first`` and then ``then`` hits the ideal."""
    seq = [l.arrow for l in reversed(first.letters)] + \
          [l.arrow for l in reversed(then.letters)]
    return any(q.is_relation(seq[k], seq[k + 1]) for k in range(len(seq) - 1))


def verify_d_squared(x: StringComplex) -> bool:
    """Symbolically check that consecutive differentials compose to zero."""
    q = x.quiver
    for d, mat in x.differentials.items():
        nxt = x.differentials.get(d + 1)
        if nxt is None:
            continue
        n_mid = len(mat)       # slots at degree d+1
        n_out = len(nxt)       # slots at degree d+2
        n_in = len(mat[0]) if mat else 0
        for i in range(n_out):
            for j in range(n_in):
                for k in range(n_mid):
                    a = mat[k][j]       # degree d -> d+1
                    b = nxt[i][k]       # degree d+1 -> d+2
                    if a is None or b is None:
                        continue
                    if a.string.source != b.string.target:
                        raise InternalInvariantError("differential entries do not chain")
                    # the composite traverses b's label first, then a's
                    if not _path_vanishes(q, b.string, a.string):
                        return False
    return True


def shift(x: StringComplex, k: int) -> StringComplex:
    """The complex shifted by [k]: degree d moves to d - k."""
    return StringComplex(
        x.quiver, x.base_degree - k, x.string,
        {d - k: list(slots) for d, slots in x.objects.items()},
        {d - k: [row[:] for row in mat] for d, mat in x.differentials.items()},
    )


def iso_normalize(q: Quiver, m: int, w: HomotopyString) -> tuple[int, HomotopyString]:
    """Canonical (degree, string) pair of the isomorphism class of w[m].

    Inverting a string shifts the base degree by its own degree; the
    representative is whichever of w, w^{-1} renders lexicographically
    smaller.
    """
    if w.is_empty:
        return (m, w)
    inv = w.inverse()
    if inv.render() < w.render():
        return (m + w.degree(), inv)
    return (m, w)


# -- band complexes -----------------------------------------------------------


@dataclass(frozen=True)
class BandComplexDescriptor:
    """Symbolic stand-in for the band complex at (m, band) twisted by the
    Jordan block of size n at eigenvalue lam."""
    base_degree: int
    band: HomotopyString
    eigenvalue: str
    jordan_size: int

    def __post_init__(self):
        if self.jordan_size < 1:
            raise PreconditionError("Jordan size must be at least 1")
        if not is_band(self.band):
            raise PreconditionError("descriptor needs a homotopy band")

    def canonical(self) -> "BandComplexDescriptor":
        return BandComplexDescriptor(self.base_degree, canonical_band(self.band),
                                     self.eigenvalue, self.jordan_size)

    def render(self) -> str:
        return (f"Y[{self.base_degree}, {self.band.render()}, "
                f"V_{self.jordan_size}({self.eigenvalue})]")


@dataclass
class BandARTriangle:
    start: BandComplexDescriptor
    middles: list[BandComplexDescriptor]
    end: BandComplexDescriptor

    def to_doc(self):
        return {"start": self.start.render(),
                "middles": [m.render() for m in self.middles],
                "end": self.end.render()}


def band_ar_triangle(d: BandComplexDescriptor) -> BandARTriangle:
    """Mesh around a band complex: Jordan sizes n-1 and n+1 in the middle,
    with the size-0 summand dropped; start and end coincide."""
    middles = []
    if d.jordan_size > 1:
        middles.append(BandComplexDescriptor(d.base_degree, d.band,
                                             d.eigenvalue, d.jordan_size - 1))
    middles.append(BandComplexDescriptor(d.base_degree, d.band,
                                         d.eigenvalue, d.jordan_size + 1))
    return BandARTriangle(start=d, middles=middles, end=d)
