"""Canonical text forms.

    partition    7,5,4,1        (empty: [])
    beta-set     {11,8,6,2,0}   (empty: {})
    symbol       ({9,7,4,2}|{3,1,0})
    data tuple   (3,6,7,4,5,2;3)   entries are integers or p/q
"""

from __future__ import annotations

from fractions import Fraction

from .beta_sets import BetaSet
from .hook_functions import DataTuple, LengthMultiset
from .partitions import Partition
from .symbols import DSymbol


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self, signed: bool = False) -> int:
        self.skip()
        start = self.pos
        if signed and self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if not token.lstrip("+-"):
            raise self.error("expected an integer", start)
        return int(token)

    def rational(self) -> Fraction:
        start = self.pos
        num = self.integer(signed=True)
        if self.accept("/"):
            den = self.integer()
            if den == 0:
                raise self.error("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing text")


def _int_list(r: _Reader, close: str) -> list[tuple[int, int]]:
    items = []
    if r.accept(close):
        return items
    while True:
        r.skip()
        items.append((r.pos, r.integer()))
        if r.accept(close):
            return items
        r.expect(",")


def _beta_set(r: _Reader) -> BetaSet:
    if r.accept("∅"):
        return BetaSet()
    r.expect("{")
    seen = set()
    values = []
    for pos, v in _int_list(r, "}"):
        if v in seen:
            raise r.error(f"duplicate beta-set element {v}", pos)
        seen.add(v)
        values.append(v)
    return BetaSet(values)


def parse_partition(text: str) -> Partition:
    r = _Reader(text)
    if r.accept("["):
        parts = _int_list(r, "]")
    else:
        parts = []
        if r.peek():
            while True:
                r.skip()
                parts.append((r.pos, r.integer()))
                if not r.accept(","):
                    break
    r.end()
    for (pos, v), (_, prev) in zip(parts[1:], parts):
        if v > prev:
            raise ParseError("partition parts must be weakly decreasing", text, pos)
    for pos, v in parts:
        if v < 1:
            raise ParseError("partition parts must be positive", text, pos)
    return Partition(tuple(v for _, v in parts))


def parse_beta_set(text: str) -> BetaSet:
    r = _Reader(text)
    X = _beta_set(r)
    r.end()
    return X


def parse_symbol(text: str) -> DSymbol:
    r = _Reader(text)
    r.expect("(")
    rows = [_beta_set(r)]
    while r.accept("|"):
        rows.append(_beta_set(r))
    r.expect(")")
    r.end()
    return DSymbol(rows)


def parse_data_tuple(text: str) -> DataTuple:
    r = _Reader(text)
    r.expect("(")
    c = []
    if r.peek() != ";":
        c.append(r.rational())
        while r.accept(","):
            c.append(r.rational())
    r.expect(";")
    pos = r.pos
    k = r.rational()
    r.expect(")")
    r.end()
    if k < 0:
        raise ParseError("k must be nonnegative", text, pos)
    return DataTuple(c, k)


def parse_object(text: str) -> Partition | BetaSet | DSymbol:
    """Dispatch on the leading character: '(' symbol, '{' beta-set, else partition."""
    head = text.strip()[:1]
    if head == "(":
        return parse_symbol(text)
    if head in ("{", "∅"):
        return parse_beta_set(text)
    return parse_partition(text)


def format_object(obj) -> str:
    return str(obj)


def format_value(v: Fraction | int) -> str:
    return str(v)


def multiset_json(M: LengthMultiset) -> list[str]:
    """Sorted ascending, exact values as strings."""
    return M.to_strings()


def format_grid(rows) -> str:
    """Left-justified rows of right-padded entries, one shared column width."""
    cells = [[("" if v is None else str(v)) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=0)
    return "\n".join(" ".join(c.ljust(width) for c in row).rstrip() for row in cells)
