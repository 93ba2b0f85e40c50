"""Homotopy strings over the double quiver: words, composition, bands.

A homotopy string is a path in the double quiver (arrows plus formal
inverses) with no immediate backtrack x x^-1 or x^-1 x.  Words are stored in
display order: ``letters[0]`` is the last letter traversed and
``letters[-1]`` the first, matching the usual right-to-left reading of
compositions.  Besides words there are two trivial strings 1_x^{+1}, 1_x^{-1}
per vertex and the empty string.

Text grammar (whitespace separated tokens, leftmost token = last letter):

    word     letters, each an arrow token with optional trailing '-' marking
             the inverse, e.g. "u- c b f"
    trivial  "1_<vertex>" with optional trailing '-', e.g. "1_7", "1_A2-"
    empty    "@"

Arrow and vertex tokens resolve through user labels first, canonical names
second.
"""

from __future__ import annotations

from functools import cached_property

from .errors import (
    EmptyString,
    IndexOutOfRange,
    InternalInvariantError,
    NotAString,
    StringSyntaxError,
)
from .quiver import Arrow, Quiver, Vertex


class Letter:
    """One step of a word: an arrow traversed forwards or backwards."""

    __slots__ = ("arrow", "inverse")

    def __init__(self, arrow: Arrow, inverse: bool = False):
        self.arrow = arrow
        self.inverse = inverse

    @property
    def source(self) -> Vertex:
        return self.arrow.target if self.inverse else self.arrow.source

    @property
    def target(self) -> Vertex:
        return self.arrow.source if self.inverse else self.arrow.target

    @property
    def s_sign(self) -> int:
        # S extended to inverses: S(x^-1) = T(x)
        return self.arrow.t_sign if self.inverse else self.arrow.s_sign

    @property
    def t_sign(self) -> int:
        return self.arrow.s_sign if self.inverse else self.arrow.t_sign

    @property
    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def token(self, q: Quiver) -> str:
        return q.arrow_token(self.arrow) + ("-" if self.inverse else "")

    def __eq__(self, other):
        return (isinstance(other, Letter)
                and self.arrow.name == other.arrow.name
                and self.inverse == other.inverse)

    def __hash__(self):
        return hash((self.arrow.name, self.inverse))

    def __repr__(self):
        return f"Letter({self.arrow.name}{'-' if self.inverse else ''})"


class HomotopyString:
    """A word, a signed trivial string, or the empty string."""

    def __init__(self, quiver: Quiver, letters=(), trivial=None, validate=True):
        self.quiver = quiver
        self.letters: tuple[Letter, ...] = tuple(letters)
        self.trivial: tuple[Vertex, int] | None = trivial
        if validate and self.letters:
            self._check_word()

    # -- constructors -------------------------------------------------------

    @classmethod
    def word(cls, q: Quiver, letters, validate=True) -> "HomotopyString":
        return cls(q, letters=letters, validate=validate)

    @classmethod
    def make_trivial(cls, q: Quiver, v: Vertex, sign: int = 1) -> "HomotopyString":
        if sign not in (-1, 1):
            raise ValueError("trivial sign must be +1 or -1")
        return cls(q, trivial=(v, sign))

    @classmethod
    def empty(cls, q: Quiver) -> "HomotopyString":
        return cls(q)

    def _check_word(self):
        ls = self.letters
        for k in range(len(ls) - 1):
            left, right = ls[k], ls[k + 1]
            if left.source != right.target:
                raise NotAString(
                    f"letters {right!r} then {left!r} do not concatenate to a path")
            if left.arrow.name == right.arrow.name and left.inverse != right.inverse:
                raise NotAString(f"forbidden backtrack at {left.arrow.name}")

    # -- structure -----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.letters and self.trivial is None

    @property
    def is_trivial(self) -> bool:
        return self.trivial is not None

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def source(self) -> Vertex:
        if self.is_trivial:
            return self.trivial[0]
        if self.is_empty:
            raise EmptyString("the empty string has no source")
        return self.letters[-1].source

    @property
    def target(self) -> Vertex:
        if self.is_trivial:
            return self.trivial[0]
        if self.is_empty:
            raise EmptyString("the empty string has no target")
        return self.letters[0].target

    @property
    def sign_s(self) -> int:
        """S of the string: sign of a trivial, extended S of the first letter."""
        if self.is_trivial:
            return self.trivial[1]
        if self.is_empty:
            raise EmptyString("S undefined for the empty string")
        return self.letters[-1].s_sign

    @property
    def sign_t(self) -> int:
        """T of the string: minus the sign of a trivial, extended T of the last letter."""
        if self.is_trivial:
            return -self.trivial[1]
        if self.is_empty:
            raise EmptyString("T undefined for the empty string")
        return self.letters[0].t_sign

    def inverse(self) -> "HomotopyString":
        if self.is_empty:
            return self
        if self.is_trivial:
            v, sign = self.trivial
            return HomotopyString.make_trivial(self.quiver, v, -sign)
        return HomotopyString(self.quiver,
                              letters=tuple(l.inv for l in reversed(self.letters)),
                              validate=False)

    @cached_property
    def _parts(self) -> tuple["HomotopyString", ...]:
        if not self.letters:
            return ()
        q = self.quiver
        parts = []
        start = 0
        for k in range(len(self.letters) - 1):
            left, right = self.letters[k], self.letters[k + 1]
            if left.inverse != right.inverse:
                split = True
            elif not left.inverse:
                # both forward; the pair splits exactly when it lies in the ideal
                split = q.is_relation(right.arrow, left.arrow)
            else:
                split = q.is_relation(left.arrow, right.arrow)
            if split:
                parts.append(HomotopyString(q, self.letters[start:k + 1], validate=False))
                start = k + 1
        parts.append(HomotopyString(q, self.letters[start:], validate=False))
        return tuple(parts)

    def partition(self) -> tuple["HomotopyString", ...]:
        """Maximal-segment factorization, in display order (last segment first)."""
        if self.is_empty:
            raise EmptyString("the empty string has no partition")
        return self._parts

    @property
    def segment_count(self) -> int:
        return len(self._parts) if self.letters else 0

    @property
    def is_direct(self) -> bool:
        return bool(self.letters) and not any(l.inverse for l in self.letters)

    @property
    def is_inverse_word(self) -> bool:
        return bool(self.letters) and all(l.inverse for l in self.letters)

    def degree(self) -> int:
        """Number of forward segments minus number of backward segments."""
        if not self.letters:
            return 0
        d = 0
        for part in self._parts:
            d += -1 if part.letters[0].inverse else 1
        return d

    def prefix(self, i: int) -> "HomotopyString":
        """First ``i`` segments from the left; ``prefix(0)`` is the trivial
        string at the target that composes onto this string."""
        if self.is_empty:
            raise EmptyString("no prefixes of the empty string")
        if self.is_trivial:
            if i != 0:
                raise IndexOutOfRange("a trivial string only has prefix 0")
            return self
        parts = self._parts
        if i < 0 or i > len(parts):
            raise IndexOutOfRange(f"prefix index {i} outside [0, {len(parts)}]")
        if i == 0:
            first = self.letters[0]
            eps = first.t_sign if not first.inverse else -first.t_sign
            return HomotopyString.make_trivial(self.quiver, self.target, eps)
        letters = tuple(l for part in parts[:i] for l in part.letters)
        return HomotopyString(self.quiver, letters, validate=False)

    def left_unit(self) -> "HomotopyString":
        """The trivial string 1_t with 1_t . self defined."""
        return self.prefix(0) if not self.is_trivial else self

    def right_unit(self) -> "HomotopyString":
        """The trivial string 1_s with self . 1_s defined."""
        if self.is_trivial:
            return self
        if self.is_empty:
            raise EmptyString("no unit for the empty string")
        last = self.letters[-1]
        eps = last.s_sign if not last.inverse else -last.s_sign
        return HomotopyString.make_trivial(self.quiver, self.source, eps)

    def strip_leading_segment(self) -> "HomotopyString":
        """Drop the leftmost segment; collapses to the right unit when only
        one segment remains."""
        parts = self.partition()
        if len(parts) == 1:
            return self.right_unit()
        letters = tuple(l for part in parts[1:] for l in part.letters)
        return HomotopyString(self.quiver, letters, validate=False)

    # -- text ------------------------------------------------------------------

    def render(self) -> str:
        if self.is_empty:
            return "@"
        if self.is_trivial:
            v, sign = self.trivial
            return f"1_{self.quiver.vertex_token(v)}" + ("-" if sign < 0 else "")
        return " ".join(l.token(self.quiver) for l in self.letters)

    def __repr__(self):
        return f"<{self.render()}>"

    def __eq__(self, other):
        if not isinstance(other, HomotopyString):
            return NotImplemented
        if self.trivial is not None or other.trivial is not None:
            return self.trivial == other.trivial
        return self.letters == other.letters

    def __hash__(self):
        return hash((self.trivial, self.letters))


def parse(q: Quiver, text: str) -> HomotopyString:
    """Parse the string grammar; inverse of ``render`` on valid strings."""
    tokens = text.split()
    if not tokens:
        raise StringSyntaxError("empty expression (use '@' for the empty string)")
    if tokens == ["@"]:
        return HomotopyString.empty(q)
    if len(tokens) == 1 and tokens[0].startswith("1_"):
        body = tokens[0][2:]
        sign = 1
        if body.endswith("-"):
            sign, body = -1, body[:-1]
        if not body:
            raise StringSyntaxError("trivial token needs a vertex, e.g. 1_7")
        return HomotopyString.make_trivial(q, q.vertex_by_token(body), sign)
    letters = []
    for token in tokens:
        if token.startswith("1_") or token == "@":
            raise StringSyntaxError(f"token {token!r} cannot appear inside a word")
        inverse = token.endswith("-")
        base = token[:-1] if inverse else token
        letters.append(Letter(q.arrow_by_token(base), inverse))
    return HomotopyString.word(q, letters)


def compose(w: HomotopyString, u: HomotopyString) -> HomotopyString | None:
    """Composition of homotopy strings (w after u); None when undefined.

    For two words the junction must either change direction without
    backtracking or continue in the same direction through the ideal.
    Trivial strings compose when the sign matches the adjacent letter's
    composability rule; the empty string is a two-sided unit.
    """
    if w.is_empty:
        return u
    if u.is_empty:
        return w
    q = w.quiver
    if w.is_trivial and u.is_trivial:
        return w if w.trivial == u.trivial else None
    if w.is_trivial:
        v, eps = w.trivial
        if v != u.target:
            return None
        last = u.letters[0]
        ok = (eps == last.t_sign) if not last.inverse else (eps == -last.t_sign)
        return u if ok else None
    if u.is_trivial:
        v, eps = u.trivial
        if v != w.source:
            return None
        first = w.letters[-1]
        ok = (eps == first.s_sign) if not first.inverse else (eps == -first.s_sign)
        return w if ok else None
    if w.source != u.target:
        return None
    left, right = w.letters[-1], u.letters[0]
    if left.inverse != right.inverse:
        if left.arrow.name == right.arrow.name:
            return None
    elif not left.inverse:
        if not q.is_relation(right.arrow, left.arrow):
            return None
    else:
        if not q.is_relation(left.arrow, right.arrow):
            return None
    return HomotopyString(q, w.letters + u.letters, validate=False)


def concat(w: HomotopyString, u: HomotopyString) -> HomotopyString:
    """Path concatenation w.u (w on the left); trivial strings act as units.

    Unlike ``compose`` this does not require a segment boundary at the
    junction, only that the result is again a homotopy string.
    """
    if w.is_empty or w.is_trivial:
        if w.is_trivial and not u.is_empty and w.trivial[0] != u.target:
            raise NotAString("trivial prefix sits at the wrong vertex")
        return u
    if u.is_empty or u.is_trivial:
        if u.is_trivial and u.trivial[0] != w.source:
            raise NotAString("trivial suffix sits at the wrong vertex")
        return w
    return HomotopyString(w.quiver, w.letters + u.letters, validate=True)


# -- antipaths ------------------------------------------------------------------


class Theta:
    """Longest antipath into a vertex with prescribed T-sign.

    ``kind`` is "path" (a direct word whose consecutive arrows all compose
    into the ideal), "trivial", or "empty" when the family of such antipaths
    has no maximal element.  ``length`` is 0 for both trivial and empty.
    """

    __slots__ = ("kind", "string")

    def __init__(self, kind: str, string: HomotopyString | None):
        self.kind = kind
        self.string = string

    @property
    def length(self) -> int:
        return self.string.length if self.kind == "path" else 0

    def __repr__(self):
        return f"Theta({self.kind}, {self.string!r})"


def theta(q: Quiver, x: Vertex, eps: int) -> Theta:
    """Maximal antipath ending at ``x`` with T equal to ``eps``.

    When some 3-cycle arrow ends at ``x`` with matching T the antipaths wind
    around that cycle without bound and there is no maximum.  Otherwise the
    maximum is the unique non-cycle arrow into ``x`` with matching T, if one
    exists, and the trivial antipath 1_x^{-eps} if not.
    """
    for a in q.in_arrows(x):
        if a.t_sign == eps and q.in_cycle(a):
            return Theta("empty", None)
    for a in q.in_arrows(x):
        if a.t_sign == eps:
            return Theta("path", HomotopyString.word(q, (Letter(a),), validate=False))
    return Theta("trivial", HomotopyString.make_trivial(q, x, -eps))


def brute_force_theta(q: Quiver, x: Vertex, eps: int, bound: int | None = None) -> Theta:
    """Independent antipath search for testing ``theta``.

    Enumerates all direct antipaths into ``x`` with the requested T-sign up
    to one more than the arrow count; finding one that long certifies an
    unbounded family.
    """
    bound = bound if bound is not None else len(q.arrows) + 1
    longest: list[Arrow] | None = None
    stack: list[list[Arrow]] = [[a] for a in q.in_arrows(x) if a.t_sign == eps]
    while stack:
        path = stack.pop()
        if len(path) >= bound:
            return Theta("empty", None)
        if longest is None or len(path) > len(longest):
            longest = path
        first = path[-1]  # display order: path[0] is the last arrow traversed
        for b in q.in_arrows(first.source):
            if q.is_relation(b, first):
                stack.append(path + [b])
    if longest is None:
        return Theta("trivial", HomotopyString.make_trivial(q, x, -eps))
    return Theta("path", HomotopyString.word(q, tuple(Letter(a) for a in longest), validate=False))


# -- bands ------------------------------------------------------------------------


def is_band(w: HomotopyString) -> bool:
    """All band axioms: closed, degree zero, alternating ends, composable
    wrap-around, primitive."""
    if w.is_empty or w.is_trivial:
        return False
    if w.source != w.target:
        return False
    if w.degree() != 0:
        return False
    parts = w.partition()
    first_seg, last_seg = parts[-1], parts[0]
    ends_ok = ((last_seg.is_direct and first_seg.is_inverse_word)
               or (last_seg.is_inverse_word and first_seg.is_direct))
    if not ends_ok:
        return False
    if compose(first_seg, last_seg) is None:
        return False
    n = w.length
    for d in range(1, n):
        if n % d:
            continue
        if w.letters == w.letters[:d] * (n // d):
            return False
    return True


def rotations(w: HomotopyString) -> list[HomotopyString]:
    """All segment-level rotations of a band that are themselves bands."""
    if not is_band(w):
        return []
    parts = list(w.partition())
    out = []
    for j in range(len(parts)):
        rotated = parts[j:] + parts[:j]
        letters = tuple(l for part in rotated for l in part.letters)
        cand = HomotopyString(w.quiver, letters, validate=False)
        if is_band(cand):
            out.append(cand)
    return out


def canonical_band(w: HomotopyString) -> HomotopyString | None:
    """Representative of the band class of ``w`` under rotation and inversion."""
    if not is_band(w):
        return None
    candidates = rotations(w) + rotations(w.inverse())
    return min(candidates, key=lambda b: b.render())


# -- enumeration ---------------------------------------------------------------


def enumerate_strings(q: Quiver, max_len: int, include_trivial: bool = False):
    """Yield every homotopy string with 1 <= length <= max_len (each once).

    With ``include_trivial`` the 2|Q_0| trivial strings come first.
    """
    if include_trivial:
        for v in q.vertices:
            yield HomotopyString.make_trivial(q, v, 1)
            yield HomotopyString.make_trivial(q, v, -1)
    all_letters = [Letter(a, inv) for a in q.arrows for inv in (False, True)]
    by_source: dict[str, list[Letter]] = {}
    for l in all_letters:
        by_source.setdefault(l.source.name, []).append(l)
    # grow words in traversal order; display order is the reverse
    stack = [(l,) for l in all_letters]
    while stack:
        word = stack.pop()
        yield HomotopyString(q, tuple(reversed(word)), validate=False)
        if len(word) == max_len:
            continue
        last = word[-1]
        for nxt in by_source.get(last.target.name, ()):
            if nxt.arrow.name == last.arrow.name and nxt.inverse != last.inverse:
                continue
            stack.append(word + (nxt,))


def string_census(q: Quiver, max_len: int) -> int:
    count = 0
    for _ in enumerate_strings(q, max_len):
        count += 1
    return count


def sanity_check_string(w: HomotopyString) -> None:
    """Re-validate a string built through unchecked paths (test helper)."""
    if w.letters:
        probe = HomotopyString(w.quiver, w.letters, validate=True)
        if probe.letters != w.letters:
            raise InternalInvariantError("validation changed the string")
