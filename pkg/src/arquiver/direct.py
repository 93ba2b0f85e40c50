"""First-principles computation of the upper-right mesh neighbour.

This is an independent implementation used to cross-check the dispatch
tables in ``triangles``.  For a string w:

  rho(w)    longest antipath forming the last letters of w (0 unless the
            last letter is a forward arrow);
  w'        w with that antipath removed (a signed trivial when everything
            goes, the sign being S of the removed word's first letter);
  sigma     the maximal relation-free forward path that composes onto w.

Then six cases decide the neighbour from sigma, the longest antipath theta
at the relevant vertex, and w'; the degree offset is l(theta) - 1 when
sigma is non-trivial and l(theta) + rho(w) - 1 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyString, InternalInvariantError
from .quiver import Arrow, Quiver
from .strings import HomotopyString, Letter, concat, enumerate_strings, theta


def _rho(q: Quiver, w: HomotopyString) -> int:
    """Length of the longest antipath at the left end of the word."""
    if w.is_trivial or w.is_empty or w.letters[0].inverse:
        return 0
    n = 1
    ls = w.letters
    while (n < len(ls) and not ls[n].inverse
           and q.is_relation(ls[n].arrow, ls[n - 1].arrow)):
        n += 1
    return n


def _truncate(q: Quiver, w: HomotopyString, rho: int) -> HomotopyString:
    if rho == 0:
        return w
    if rho == w.length:
        return HomotopyString.make_trivial(q, w.source, w.sign_s)
    return HomotopyString(q, w.letters[rho:], validate=False)


def _sigma_first(q: Quiver, w: HomotopyString) -> Arrow | None:
    """First arrow of the maximal forward path composing onto w, if any."""
    if w.is_trivial:
        v, eps = w.trivial
        for a in q.out_arrows(v):
            if a.s_sign == eps:
                return a
        return None
    last = w.letters[0]
    if not last.inverse:
        for a in q.out_arrows(w.target):
            if q.is_relation(last.arrow, a):
                return a
        return None
    for a in q.out_arrows(w.target):
        if a.name != last.arrow.name:
            return a
    return None


def _sigma(q: Quiver, w: HomotopyString) -> list[Arrow]:
    """The maximal relation-free forward path with sigma . w defined,
    returned in traversal order (first arrow first)."""
    first = _sigma_first(q, w)
    if first is None:
        return []
    path = [first]
    guard = 2 * (q.r + q.s) + 4
    while True:
        cur = path[-1]
        nxt = None
        for a in q.out_arrows(cur.target):
            if not q.is_relation(cur, a):
                nxt = a
                break
        if nxt is None:
            return path
        path.append(nxt)
        if len(path) > guard:
            raise InternalInvariantError("relation-free path failed to terminate")


def omega_plus_direct(q: Quiver, w: HomotopyString):
    """Upper-right neighbour and degree offset, computed from scratch.

    Returns (string or None, m'); unlike the table version, m' is defined
    even when the neighbour is empty.
    """
    if w.is_empty:
        raise EmptyString("no mesh successor of the empty string")
    rho = _rho(q, w)
    wp = _truncate(q, w, rho)
    sig = _sigma(q, w)
    if sig:
        sig_str = HomotopyString.word(q, tuple(Letter(a) for a in reversed(sig)), validate=False)
        th = theta(q, sig[-1].target, -sig[-1].t_sign)
        grown = concat(sig_str, w)
        if th.kind == "path":
            grown = concat(th.string.inverse(), grown)
        return grown, th.length - 1
    th = theta(q, wp.target, -wp.sign_t)
    m = th.length + rho - 1
    if th.length > 0 and wp.length > 0:
        return concat(th.string.inverse(), wp), m
    if th.length > 0 and wp.length == 0:
        return th.string.strip_leading_segment().inverse(), m
    if wp.length > 0:
        if wp.letters[0].inverse:
            return wp.strip_leading_segment(), m
        return wp, m
    return None, m


# -- cross-check harness ------------------------------------------------------


@dataclass
class Disagreement:
    string: str
    field: str          # "string" | "m"
    table_value: str
    direct_value: str
    row: str
    documented: bool


@dataclass
class CrosscheckReport:
    parameters: tuple[int, int, int, int]
    max_len: int
    checked: int = 0
    string_disagreements: list[Disagreement] = field(default_factory=list)
    documented_m: list[Disagreement] = field(default_factory=list)
    unexpected_m: list[Disagreement] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.string_disagreements and not self.unexpected_m

    def to_doc(self) -> dict:
        def rows(items):
            return [{"string": d.string, "field": d.field, "table": d.table_value,
                     "direct": d.direct_value, "row": d.row} for d in items]
        return {
            "parameters": list(self.parameters),
            "max_len": self.max_len,
            "checked": self.checked,
            "string_disagreements": rows(self.string_disagreements),
            "documented_m_deviations": rows(self.documented_m),
            "unexpected_m_disagreements": rows(self.unexpected_m),
            "clean": self.clean,
        }

    def summary(self) -> str:
        lines = [f"cross-check over {self.checked} strings "
                 f"(params {self.parameters}, length <= {self.max_len})"]
        lines.append(f"  string disagreements: {len(self.string_disagreements)}")
        lines.append(f"  documented m' deviations (A/A' stalk rows): {len(self.documented_m)}")
        lines.append(f"  unexpected m' disagreements: {len(self.unexpected_m)}")
        for d in self.string_disagreements + self.unexpected_m:
            lines.append(f"    {d.string}: table {d.table_value} vs direct "
                         f"{d.direct_value} [{d.field}, row {d.row}]")
        lines.append("  verdict: " + ("clean" if self.clean else "DISAGREES"))
        return "\n".join(lines)


def _documented_m_deviation(w: HomotopyString, row: str) -> bool:
    # literal stalk rows for A/A' carry 0 where the mesh forces -1 (index > 1)
    if not w.is_trivial:
        return False
    v, eps = w.trivial
    return eps > 0 and v.cls in ("A", "A'") and (v.index or 0) > 1


def crosscheck(q: Quiver, max_len: int) -> CrosscheckReport:
    """Compare the table dispatch with the direct algorithm on every string
    up to the length bound (trivial strings included)."""
    from .triangles import omega_plus_table

    p = q.params
    rep = CrosscheckReport(parameters=(p.r1, p.r2, p.s1, p.s2), max_len=max_len)
    for w in enumerate_strings(q, max_len, include_trivial=True):
        rep.checked += 1
        t_str, t_m, row = omega_plus_table(q, w)
        d_str, d_m = omega_plus_direct(q, w)
        t_render = t_str.render() if t_str is not None else "@"
        d_render = d_str.render() if d_str is not None else "@"
        if (t_str is None) != (d_str is None) or (t_str is not None and t_str != d_str):
            rep.string_disagreements.append(Disagreement(
                w.render(), "string", t_render, d_render, row, False))
            continue
        if t_str is None:
            continue  # table leaves m' blank for empty neighbours
        if t_m != d_m:
            doc = _documented_m_deviation(w, row)
            item = Disagreement(w.render(), "m", str(t_m), str(d_m), row, doc)
            (rep.documented_m if doc else rep.unexpected_m).append(item)
    return rep
