"""Periodic traversals of the normal-form quiver and string reductions.

Four walk kinds exist: clockwise and counter-clockwise on the alpha side
(cw-r, ccw-r) and their mirror images on the beta side (ccw-s, cw-s).  The
mirror is implemented mechanically: an s-walk is the corresponding r-walk
computed through a swapped view of the same quiver (alpha <-> beta,
gamma <-> delta, parameters exchanged), so there is a single transcription of
each case list.

A walk is defined by its generating step at every on-walk vertex; at every
other vertex the unique shortest terminal segment of a step passing through
it (its "prefix step") extends the definition, so steps exist at all
vertices a table dispatch can ever request.

A reduction strips from a string the longest shared leading segment with the
walk step arriving at its target; it applies exactly when the string's last
letter agrees with that arriving step's last letter.  At most one of the
four kinds applies to any string.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyString, InternalInvariantError, NoWalkStep
from .quiver import Quiver, Vertex
from .strings import HomotopyString, Letter


class WalkKind(Enum):
    CW_R = "cw-r"
    CCW_R = "ccw-r"
    CW_S = "cw-s"
    CCW_S = "ccw-s"

    @classmethod
    def from_token(cls, token: str) -> "WalkKind":
        for k in cls:
            if k.value == token:
                return k
        raise NoWalkStep(f"unknown walk kind {token!r} (use cw-r, ccw-r, cw-s, ccw-s)")


# mirror pairing: the s-kinds are r-kinds seen through the swapped view
_VIEW_SIDE = {WalkKind.CW_R: "r", WalkKind.CCW_R: "r",
              WalkKind.CW_S: "s", WalkKind.CCW_S: "s"}
_VIEW_CLOCKWISE = {WalkKind.CW_R: True, WalkKind.CCW_R: False,
                   WalkKind.CCW_S: True, WalkKind.CW_S: False}


class _SideView:
    """Accessors for one side of the quiver; ``swapped`` reads the beta side
    through alpha-side names so both walk orientations are written once."""

    def __init__(self, q: Quiver, swapped: bool):
        self.q = q
        self.swapped = swapped
        if swapped:
            self.r1, self.r2 = q.s1, q.s2
            self.s_total = q.r
        else:
            self.r1, self.r2 = q.r1, q.r2
            self.s_total = q.s
        self.r = self.r1 + self.r2

    def alpha(self, i):
        return self.q.beta(i) if self.swapped else self.q.alpha(i)

    def beta(self, j):
        return self.q.alpha(j) if self.swapped else self.q.beta(j)

    def gamma(self, k):
        return self.q.delta(k) if self.swapped else self.q.gamma(k)

    def apex(self, i):
        return self.q.apex_s(i) if self.swapped else self.q.apex_r(i)

    def node(self, k):
        return self.q.snode(k) if self.swapped else self.q.rnode(k)

    def view_class(self, v: Vertex):
        """Class of ``v`` in view coordinates: ("A", i), ("D", i), ("C", None)
        or None when the vertex plays no on-walk role for this side."""
        cls = v.cls
        if self.swapped:
            trade = {"A'": "A", "D'": "D", "A": "A'", "D": "D'",
                     "B'": "B", "B": "B'"}
            cls = trade.get(cls, cls)
        if cls in ("A", "D", "C"):
            return (cls, v.index)
        return None


def _D(arrow):
    return Letter(arrow, False)


def _I(arrow):
    return Letter(arrow, True)


def _cw_case(v: _SideView, cls: str, i: int) -> list[Letter]:
    """Clockwise step at an on-walk vertex, display order."""
    if cls == "A":
        if i > 1:
            return [_D(v.gamma(2 * (i - 1))), _D(v.gamma(2 * i - 1))]
        mids = [_D(v.beta(j)) for j in range(v.s_total, 0, -1)]
        head = [_D(v.gamma(2 * v.r2))] if v.r1 == 0 else [_I(v.alpha(v.r))]
        return head + mids + [_D(v.gamma(1))]
    # cls == "D"
    if i > 0:
        return [_I(v.alpha(v.r2 + i))]
    if v.r2 == 0:
        return [_I(v.alpha(v.r))] + [_D(v.beta(j)) for j in range(v.s_total, 0, -1)]
    return [_D(v.gamma(2 * v.r2))]


def _ccw_case(v: _SideView, cls: str, i: int) -> list[Letter]:
    """Counter-clockwise step at an on-walk vertex, display order."""
    if cls == "A":
        if i < v.r2:
            return [_I(v.gamma(2 * i + 1)), _I(v.gamma(2 * i))]
        if v.r1 == 0:
            return ([_I(v.gamma(1))]
                    + [_I(v.beta(j)) for j in range(1, v.s_total + 1)]
                    + [_I(v.gamma(2 * v.r2))])
        return [_D(v.alpha(v.r2 + 1)), _I(v.gamma(2 * v.r2))]
    if cls == "C":
        head = [_D(v.alpha(1))] if v.r2 == 0 else [_I(v.gamma(1))]
        return head + [_I(v.beta(j)) for j in range(1, v.s_total + 1)]
    # cls == "D", i >= 1
    return [_D(v.alpha(v.r2 + i + 1))]


@dataclass
class _WalkTable:
    steps: dict        # vertex name -> step (on-walk steps and prefix steps)
    arriving: dict     # vertex name -> the orbit step ending there
    period: int


def _build_walk_table(q: Quiver, kind: WalkKind) -> _WalkTable:
    view = _SideView(q, _VIEW_SIDE[kind] == "s")
    clockwise = _VIEW_CLOCKWISE[kind]
    case = _cw_case if clockwise else _ccw_case

    def on_walk(vc):
        if vc is None:
            return False
        cls, i = vc
        if clockwise:
            return cls in ("A", "D")
        return cls == "A" or cls == "C" or (cls == "D" and i >= 1)

    steps: dict[str, HomotopyString] = {}
    for x in q.vertices:
        vc = view.view_class(x)
        if on_walk(vc):
            steps[x.name] = HomotopyString.word(q, case(view, *vc), validate=False)

    # the orbit: iterate the step map; it closes after one period
    arriving: dict[str, HomotopyString] = {}
    if view.r2 > 0:
        start = view.apex(1)
    else:
        start = q.bottom if not clockwise else view.node(view.r2)
    x = start
    for _ in range(view.r):
        st = steps[x.name]
        arriving[st.target.name] = st
        x = st.target
    if x is not start:
        raise InternalInvariantError("walk orbit failed to close")

    # prefix steps: shortest terminal segment of an on-walk step through x
    on_names = set(steps)
    for x in q.vertices:
        if x.name in on_names:
            continue
        best: HomotopyString | None = None
        for st in list(steps.values()):
            letters = st.letters
            # traversal vertex after j letters is the source of display letter -1-j
            for j in range(1, len(letters)):
                if letters[-j].target == x:
                    cand = HomotopyString(q, letters[: len(letters) - j], validate=False)
                    if best is None or cand.length < best.length:
                        best = cand
        if best is not None:
            steps[x.name] = best
    return _WalkTable(steps=steps, arriving=arriving, period=view.r)


def _table(q: Quiver, kind: WalkKind) -> _WalkTable:
    tbl = q._walk_cache.get(kind)
    if tbl is None:
        tbl = _build_walk_table(q, kind)
        q._walk_cache[kind] = tbl
    return tbl


def walk_step(q: Quiver, x: Vertex, kind: WalkKind) -> HomotopyString:
    """The walk step (or prefix step) starting at ``x``."""
    tbl = _table(q, kind)
    try:
        return tbl.steps[x.name]
    except KeyError:
        raise NoWalkStep(f"{kind.value} walk is not defined at vertex {x.name}") from None


def walk(q: Quiver, x: Vertex, kind: WalkKind, n: int) -> list[HomotopyString]:
    """First ``n`` steps of the walk starting at ``x``."""
    out = []
    here = x
    for _ in range(n):
        st = walk_step(q, here, kind)
        out.append(st)
        here = st.target
    return out


def arriving_step(q: Quiver, x: Vertex, kind: WalkKind) -> HomotopyString | None:
    """The orbit step that ends at ``x``, or None when none does."""
    return _table(q, kind).arriving.get(x.name)


# -- reductions ------------------------------------------------------------------


def reduction_applies(q: Quiver, w: HomotopyString, kind: WalkKind) -> bool:
    """Whether ``w`` satisfies the reduction property for this walk kind:
    its target is on-walk and its last letter ends the arriving step."""
    if w.is_empty or w.is_trivial:
        return False
    arr = arriving_step(q, w.target, kind)
    return arr is not None and arr.letters[0] == w.letters[0]


def applicable_reduction_kind(q: Quiver, w: HomotopyString) -> WalkKind | None:
    hits = [k for k in WalkKind if reduction_applies(q, w, k)]
    if len(hits) > 1:
        raise InternalInvariantError(
            f"string {w.render()} satisfies two reduction properties {hits}")
    return hits[0] if hits else None


def reduce_once(q: Quiver, w: HomotopyString, kind: WalkKind) -> HomotopyString | None:
    """The ``kind`` reduction of ``w``: strip the longest shared leading
    segment with the arriving walk step.  None when the property fails.
    Stripping everything leaves the trivial string composable on the right.
    """
    if not reduction_applies(q, w, kind):
        return None
    arr = arriving_step(q, w.target, kind)
    n = 0
    for a, b in zip(w.letters, arr.letters):
        if a != b:
            break
        n += 1
    if n == 0:
        raise InternalInvariantError("reduction property held but no shared prefix")
    if n == w.length:
        return w.right_unit()
    return HomotopyString(q, w.letters[n:], validate=False)


def _is_plain_arrow(q: Quiver, w: HomotopyString) -> bool:
    """Length one and the letter is an r-arrow or s-arrow (either way round)."""
    if w.length != 1:
        return False
    a = w.letters[0].arrow
    return (a.kind == "alpha" and a.index > q.r2) or (a.kind == "beta" and a.index > q.s2)


def left_admissible_reduction(q: Quiver, w: HomotopyString):
    """The unique left admissible reduction as (kind, result), or None.

    Plain r-/s-arrows and their inverses are excluded by definition, as are
    trivial and empty strings.
    """
    if w.is_empty or w.is_trivial or _is_plain_arrow(q, w):
        return None
    kind = applicable_reduction_kind(q, w)
    if kind is None:
        return None
    out = reduce_once(q, w, kind)
    return (kind, out)


def right_admissible_reduction(q: Quiver, w: HomotopyString):
    """Right admissible reduction: invert, reduce on the left, invert back.
    Returns (kind acting on the inverse, result) or None."""
    if w.is_empty or w.is_trivial or _is_plain_arrow(q, w):
        return None
    got = left_admissible_reduction(q, w.inverse())
    if got is None:
        return None
    kind, res = got
    return (kind, res.inverse())


# -- central strings and bases ------------------------------------------------


def _central_first_letters(q: Quiver):
    ok = set()
    for i in range(1, q.r2 + 1):
        ok.add(("alpha", i, False))
        ok.add(("alpha", i, True))
        ok.add(("gamma", 2 * i, False))
        ok.add(("gamma", 2 * i - 1, True))
    for j in range(1, q.s2 + 1):
        ok.add(("beta", j, False))
        ok.add(("beta", j, True))
        ok.add(("delta", 2 * j, False))
        ok.add(("delta", 2 * j - 1, True))
    return ok


def _central_last_letters(q: Quiver):
    ok = set()
    for i in range(1, q.r2 + 1):
        ok.add(("alpha", i, False))
        ok.add(("alpha", i, True))
        ok.add(("gamma", 2 * i - 1, False))
        ok.add(("gamma", 2 * i, True))
    for j in range(1, q.s2 + 1):
        ok.add(("beta", j, False))
        ok.add(("beta", j, True))
        ok.add(("delta", 2 * j - 1, False))
        ok.add(("delta", 2 * j, True))
    return ok


def is_central(q: Quiver, w: HomotopyString) -> bool:
    """Central strings: B/B'/F/F' trivials, and words whose first and last
    letters lie in the two cycle-letter sets.  These admit no admissible
    reduction and each sits in its own component."""
    if w.is_empty:
        return False
    if w.is_trivial:
        return w.trivial[0].cls in ("B", "B'", "F", "F'")
    first = w.letters[-1]
    last = w.letters[0]
    return ((first.arrow.kind, first.arrow.index, first.inverse) in _central_first_letters(q)
            and (last.arrow.kind, last.arrow.index, last.inverse) in _central_last_letters(q))


class BaseType(Enum):
    EDGE_SEED = "edge-seed"       # r-/s-arrow (either way) or A/A' trivial
    CENTRAL = "central"
    STALK_CDD = "stalk-c-d-d'"    # C/D/D' trivial


@dataclass
class ReductionTrace:
    side: str                     # "left" | "right"
    kind: WalkKind
    result: HomotopyString


@dataclass
class BaseReduction:
    base: HomotopyString
    base_type: BaseType
    trace: list[ReductionTrace]


def base_type_of(q: Quiver, w: HomotopyString) -> BaseType | None:
    if w.is_trivial:
        cls = w.trivial[0].cls
        if cls in ("A", "A'"):
            return BaseType.EDGE_SEED
        if cls in ("B", "B'", "F", "F'"):
            return BaseType.CENTRAL
        return BaseType.STALK_CDD
    if _is_plain_arrow(q, w):
        return BaseType.EDGE_SEED
    if is_central(q, w):
        return BaseType.CENTRAL
    return None


def reduce_to_base(q: Quiver, w: HomotopyString) -> BaseReduction:
    """Apply admissible reductions until one of the three base forms remains.

    Every step strictly shortens the string, so this terminates; the base is
    an edge seed, a central string, or a C/D/D' stalk.
    """
    if w.is_empty:
        raise EmptyString("cannot reduce the empty string")
    trace: list[ReductionTrace] = []
    cur = w
    while True:
        bt = base_type_of(q, cur)
        if bt is not None:
            return BaseReduction(base=cur, base_type=bt, trace=trace)
        got = left_admissible_reduction(q, cur)
        side = "left"
        if got is None:
            got = right_admissible_reduction(q, cur)
            side = "right"
        if got is None:
            raise InternalInvariantError(
                f"non-base string {cur.render()} admits no admissible reduction")
        kind, nxt = got
        if nxt.length >= cur.length:
            raise InternalInvariantError("admissible reduction failed to shorten")
        trace.append(ReductionTrace(side=side, kind=kind, result=nxt))
        cur = nxt
