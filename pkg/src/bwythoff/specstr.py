"""Parse and render the beta-spec mini-grammar.

    spec := "pi" | "e" | surd | dec
    surd := "surd:(" int sign uint "*sqrt(" uint "))/" uint
    dec  := "dec:" digits "." digits

Examples: ``pi``, ``surd:(2+1*sqrt(2))/1``, ``dec:2.71828182845904523536``.
"""

from __future__ import annotations

from .errors import ParseError
from .exact import E, PI, DigitConstant, IrrationalSpec, QuadraticSurd

__all__ = ["parse_beta_spec", "render_beta_spec"]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def expect(self, literal: str) -> None:
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def uint(self, what: str) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start : self.pos])

    def int_(self, what: str) -> int:
        neg = self.pos < len(self.text) and self.text[self.pos] == "-"
        if neg:
            self.pos += 1
        value = self.uint(what)
        return -value if neg else value

    def sign(self) -> int:
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            ch = self.text[self.pos]
            self.pos += 1
            return 1 if ch == "+" else -1
        raise ParseError("expected '+' or '-'", self.pos)

    def done(self) -> None:
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)


def parse_beta_spec(text: str) -> IrrationalSpec:
    """Parse a spec string; ParseError carries the offset of the first error."""
    if text == "pi":
        return PI
    if text == "e":
        return E
    sc = _Scanner(text)
    if text.startswith("surd:"):
        sc.expect("surd:(")
        a = sc.int_("integer a")
        sgn = sc.sign()
        b = sc.uint("coefficient b")
        sc.expect("*sqrt(")
        d_pos = sc.pos
        d = sc.uint("radicand d")
        sc.expect("))/")
        c_pos = sc.pos
        c = sc.uint("denominator c")
        sc.done()
        if c == 0:
            raise ParseError("denominator must be positive", c_pos)
        if d == 0:
            raise ParseError("radicand must be positive", d_pos)
        return QuadraticSurd(a, sgn * b, c, d)  # may raise NotIrrational
    if text.startswith("dec:"):
        sc.expect("dec:")
        start = sc.pos
        sc.uint("integer digits")
        sc.expect(".")
        sc.uint("fractional digits")
        sc.done()
        return DigitConstant(text[start:])
    raise ParseError("expected 'pi', 'e', 'surd:(...' or 'dec:...'", 0)


def render_beta_spec(spec: IrrationalSpec) -> str:
    """Canonical string form; parse_beta_spec(render_beta_spec(s)) == s."""
    if isinstance(spec, QuadraticSurd):
        return f"surd:{spec}"
    if spec.name in ("pi", "e"):
        return spec.name
    return f"dec:{spec.digits}"
