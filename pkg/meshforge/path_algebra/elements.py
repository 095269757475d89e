"""
Elements of degree-truncated path algebras.

A :class:`TruncatedElement` is a finite linear combination of path words of
length at most ``bound``, i.e. an element of ``kQ / J^{bound+1}``.  Products
are read right to left and words longer than the bound are discarded.

Text form: terms joined by ``+`` / ``-``, an optional ``p/q*`` coefficient,
words as whitespace-separated arrow ids (or labels) in written order and
``e(v)`` for trivial paths, e.g. ``"a1 a1* + 1/2*a2* a2"``.
"""
import re
from typing import Dict, Iterable, Optional, Tuple

from gmpy2 import mpq

from meshforge.exceptions import (
    BoundMismatchError,
    PathAlgebraError,
    QuiverError,
    QuiverMismatchError,
    QuiverSyntaxError,
)
from meshforge.utils import format_rational, parse_rational

from .words import PathWord

_COEFF = re.compile(r"^(\d+(?:/\d+)?)\s*\*\s*")
_TRIVIAL = re.compile(r"^e\((.+)\)$")


class TruncatedElement:
    """
    Immutable linear combination of path words.

    Parameters
    ----------
    quiver : :class:`~meshforge.quiver.GradedQuiver`
    terms : mapping
        :class:`PathWord` -> rational; zero coefficients and words longer
        than `bound` are dropped.
    bound : int
        Word-length truncation.
    """

    __slots__ = ["quiver", "terms", "bound"]

    def __init__(self, quiver, terms, bound: int):
        self.quiver = quiver
        self.bound = bound
        clean: Dict[PathWord, mpq] = {}
        for word, c in terms.items():
            if word.length <= bound:
                c = mpq(c)
                if c != 0:
                    clean[word] = c
        self.terms = clean

    @classmethod
    def zero(cls, quiver, bound):
        return cls(quiver, {}, bound)

    @classmethod
    def from_word(cls, word: PathWord, bound, coeff=1):
        return cls(word.quiver, {word: coeff}, bound)

    @classmethod
    def idempotent(cls, quiver, vertex_id, bound):
        return cls.from_word(PathWord.trivial(quiver, vertex_id), bound)

    def __repr__(self):
        return f"<{self.__class__.__name__} '{format_element(self)}' L={self.bound}>"

    def __str__(self):
        return format_element(self)

    def __eq__(self, other):
        if not isinstance(other, TruncatedElement):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    def __hash__(self):
        return hash((self.bound, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.bound != other.bound:
            raise BoundMismatchError(
                f"Truncation bounds differ: {self.bound} != {other.bound}"
            )
        if self.quiver is not other.quiver and self.quiver != other.quiver:
            raise QuiverMismatchError("Elements live over different quivers")

    def __add__(self, other):
        if not isinstance(other, TruncatedElement):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms.get(word, 0) + c
        return TruncatedElement(self.quiver, terms, self.bound)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, TruncatedElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = parse_rational(c)
        return TruncatedElement(
            self.quiver, {w: c * v for w, v in self.terms.items()}, self.bound
        )

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, TruncatedElement):
            return multiply(self, other)
        return self.scale(other)

    def truncate(self, bound) -> "TruncatedElement":
        """Same element in ``kQ / J^{bound+1}``."""
        return TruncatedElement(self.quiver, self.terms, bound)

    def words(self):
        """Words with nonzero coefficient, in word order."""
        return sorted(self.terms, key=PathWord.sort_key)

    @property
    def min_length(self) -> int:
        return min((w.length for w in self.terms), default=0)

    @property
    def max_length(self) -> int:
        return max((w.length for w in self.terms), default=0)

    @property
    def endpoints(self):
        """Set of ``(src, tgt)`` pairs of the words."""
        return {(w.src, w.tgt) for w in self.terms}

    @property
    def src(self) -> Optional[str]:
        """Common source of all words, or None."""
        sources = {w.src for w in self.terms}
        return sources.pop() if len(sources) == 1 else None

    @property
    def tgt(self) -> Optional[str]:
        targets = {w.tgt for w in self.terms}
        return targets.pop() if len(targets) == 1 else None

    def degrees(self):
        return {w.degree for w in self.terms}

    def coefficient(self, word) -> mpq:
        return self.terms.get(word, mpq(0))


def multiply(x: TruncatedElement, y: TruncatedElement) -> TruncatedElement:
    """
    Product ``x * y``: ``y`` is traversed first.

    Raises
    ------
    BoundMismatchError
    QuiverMismatchError
    """
    x._check(y)  # pylint: disable=protected-access
    bound = x.bound
    terms: Dict[PathWord, mpq] = {}
    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            if u.length + v.length > bound:
                continue
            w = u.compose(v)
            if w is None:
                continue
            terms[w] = terms.get(w, 0) + cu * cv
    return TruncatedElement(x.quiver, terms, bound)


def linear_combination(quiver, pairs: Iterable[Tuple[object, PathWord]], bound):
    """Sum ``c * word`` over `pairs`."""
    terms: Dict[PathWord, mpq] = {}
    for c, w in pairs:
        terms[w] = terms.get(w, 0) + parse_rational(c)
    return TruncatedElement(quiver, terms, bound)


def parse_element(quiver, text: str, bound: int) -> TruncatedElement:
    """
    Read an element from its text form.

    Raises
    ------
    QuiverSyntaxError
    """
    terms: Dict[PathWord, mpq] = {}
    for sign, body in _split_terms(text):
        coeff = mpq(sign)
        match = _COEFF.match(body)
        if match:
            coeff *= parse_rational(match.group(1))
            body = body[match.end():]
        word = _parse_word(quiver, body.strip())
        terms[word] = terms.get(word, 0) + coeff
    return TruncatedElement(quiver, terms, bound)


def _parse_word(quiver, body):
    if not body:
        raise QuiverSyntaxError("Empty term")
    trivial = _TRIVIAL.match(body)
    if trivial:
        vertex_id = trivial.group(1).strip()
        if not quiver.has_vertex(vertex_id):
            raise QuiverSyntaxError(f"Unknown vertex in '{body}'")
        return PathWord.trivial(quiver, vertex_id)
    try:
        return PathWord.of(quiver, body.split())
    except (PathAlgebraError, QuiverError) as e:
        raise QuiverSyntaxError(f"Bad word '{body}': {e}") from e


def _split_terms(text):
    """Yield ``(sign, body)``; a sign only separates terms outside ``e(...)``."""
    text = text.strip()
    if not text:
        raise QuiverSyntaxError("Empty element text")
    if text == "0":
        return []

    terms = []
    sign, start, depth = 1, 0, 0
    for pos, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char in "+-" and depth == 0 and (pos == 0 or text[pos - 1].isspace()):
            body = text[start:pos].strip()
            if body:
                terms.append((sign, body))
            elif pos != 0:
                raise QuiverSyntaxError(f"Dangling sign in '{text}'")
            sign = 1 if char == "+" else -1
            start = pos + 1
    body = text[start:].strip()
    if not body:
        raise QuiverSyntaxError(f"Dangling sign in '{text}'")
    terms.append((sign, body))
    return terms


def format_element(x: TruncatedElement) -> str:
    """Text form with terms in word order; the inverse of :func:`parse_element`."""
    if not x.terms:
        return "0"
    parts = []
    for word in x.words():
        c = x.terms[word]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        prefix = "" if mag == 1 else f"{format_rational(mag)}*"
        parts.append((sign, prefix + str(word)))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
