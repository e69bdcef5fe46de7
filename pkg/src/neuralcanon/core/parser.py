"""Text parser and formatter for monomials, ideal files and code files.

Grammar (polarized form):

    monomial := "1" | factor (("*" | WS+)? factor)*
    factor   := ("x" | "y") DIGIT+

Generic ideals additionally allow "z" DIGIT+ factors, and the depolarized
form allows "(1-xK)" in place of yK.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import MonomialParseError
from .models import MonomialIdeal, Pseudomonomial, SfMonomial, indices_of

_FACTOR = re.compile(r"([xyz])(\d+)")
_NEGATED = re.compile(r"\(\s*1\s*-\s*x(\d+)\s*\)")
_WIDTH_HEADER = re.compile(r"^n\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class Factor:
    """One parsed factor: kind is 'x', 'y', 'z' or 'neg' for (1-xK)."""
    kind: str
    index: int
    column: int


def scan_factors(
    text: str,
    line: int = 1,
    allow_z: bool = False,
    allow_negated: bool = False,
) -> list[Factor]:
    """Split monomial text into factors; the constant "1" yields no factors."""
    if text.strip() == "1":
        return []

    factors: list[Factor] = []
    seen: set[tuple[str, int]] = set()
    pos = 0
    need_factor = True

    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            if need_factor:
                raise MonomialParseError("expected a factor", line, pos + 1)
            break

        if text[pos] == "*" and not need_factor:
            pos += 1
            need_factor = True
            continue

        match = _FACTOR.match(text, pos)
        if match:
            kind, index = match.group(1), int(match.group(2))
            if kind == "z" and not allow_z:
                raise MonomialParseError("placeholder z-variables are not allowed here", line, pos + 1)
        else:
            match = _NEGATED.match(text, pos) if allow_negated else None
            if match is None:
                raise MonomialParseError(f"unexpected {text[pos]!r}", line, pos + 1)
            kind, index = "neg", int(match.group(1))

        if index < 1:
            raise MonomialParseError(f"index must be positive, got {index}", line, pos + 1)
        # (1-xK) and yK are the same variable after polarization
        key = ("y" if kind == "neg" else kind, index)
        if key in seen:
            raise MonomialParseError(f"repeated factor {match.group(0)!r}", line, pos + 1)
        seen.add(key)

        factors.append(Factor(kind, index, pos + 1))
        pos = match.end()
        need_factor = False

    return factors


def _check_range(factors: Iterable[Factor], n: int, line: int) -> None:
    for f in factors:
        if f.kind != "z" and f.index > n:
            raise MonomialParseError(f"index {f.index} out of range 1..{n}", line, f.column)


def monomial_from_factors(factors: Iterable[Factor], n: int, line: int = 1) -> SfMonomial:
    factors = list(factors)
    _check_range(factors, n, line)
    xs = ys = 0
    for f in factors:
        if f.kind == "x":
            xs |= 1 << (f.index - 1)
        elif f.kind in ("y", "neg"):
            ys |= 1 << (f.index - 1)
    return SfMonomial(n, xs, ys)


def parse_monomial(text: str, n: int, line: int = 1) -> SfMonomial:
    """Parse a polarized monomial such as "x1*y2", "x3 y1 x2" or "1"."""
    return monomial_from_factors(scan_factors(text, line), n, line)


def parse_pseudomonomial(text: str, n: int, line: int = 1) -> Pseudomonomial:
    """Parse a depolarized pseudomonomial such as "x2*(1-x1)".

    Polarized yK factors are accepted as well.
    """
    g = monomial_from_factors(scan_factors(text, line, allow_negated=True), n, line)
    if g.xs & g.ys:
        i = indices_of(g.xs & g.ys)[0]
        raise MonomialParseError(f"x{i} and (1-x{i}) in the same pseudomonomial", line, 1)
    return Pseudomonomial(n, g.xs, g.ys)


def format_monomial(g: SfMonomial) -> str:
    """Render as x-factors then y-factors joined by '*'; the constant is '1'."""
    if g.is_one():
        return "1"
    parts = [f"x{i}" for i in indices_of(g.xs)] + [f"y{i}" for i in indices_of(g.ys)]
    return "*".join(parts)


def format_pseudomonomial(f: Pseudomonomial) -> str:
    """Depolarized display, y-factors written as (1-xK)."""
    if not (f.xs or f.negs):
        return "1"
    parts = [f"x{i}" for i in indices_of(f.xs)] + [f"(1-x{i})" for i in indices_of(f.negs)]
    return "*".join(parts)


@dataclass
class IdealSource:
    """Generator lines read from an ideal file, before the width is fixed."""
    header_n: Optional[int]
    lines: list[tuple[int, list[Factor]]]

    @property
    def max_index(self) -> int:
        return max((f.index for _, fs in self.lines for f in fs if f.kind != "z"), default=0)

    @property
    def max_placeholder(self) -> int:
        return max((f.index for _, fs in self.lines for f in fs if f.kind == "z"), default=0)

    def width(self, override: Optional[int] = None) -> int:
        if override is not None:
            return override
        if self.header_n is not None:
            return self.header_n
        return max(self.max_index, 1)


def scan_ideal_text(text: str, allow_z: bool = False, allow_negated: bool = False) -> IdealSource:
    """Read one generator per line; blank lines and '#' comments are skipped.

    The first non-comment line may be a width header "n = <int>".
    """
    header_n: Optional[int] = None
    lines: list[tuple[int, list[Factor]]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue

        header = _WIDTH_HEADER.match(content.strip())
        if header:
            if lines or header_n is not None:
                raise MonomialParseError("width header must come first", line_no, 1)
            header_n = int(header.group(1))
            if header_n < 1:
                raise MonomialParseError("width must be positive", line_no, 1)
            continue

        lines.append((line_no, scan_factors(content, line_no, allow_z, allow_negated)))

    return IdealSource(header_n, lines)


def parse_ideal_text(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """Parse an ideal file; n overrides any header, otherwise the max index seen."""
    source = scan_ideal_text(text, allow_negated=True)
    width = source.width(n)
    gens = [monomial_from_factors(fs, width, line_no) for line_no, fs in source.lines]
    return MonomialIdeal(width, tuple(gens))


def format_ideal_text(ideal: MonomialIdeal) -> str:
    """Ideal file text: a width header, then one generator per line."""
    lines = [f"n = {ideal.n}"] + [format_monomial(g) for g in ideal.gens]
    return "\n".join(lines) + "\n"


def parse_code_text(text: str) -> tuple[int, list[int]]:
    """Parse a code file: one 0/1 word per line, first character is neuron 1.

    Returns:
        (n, words) with each word bit-packed (bit i-1 holds neuron i)
    """
    n: Optional[int] = None
    words: list[int] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip().replace(" ", "")
        if not content:
            continue
        for col, ch in enumerate(content, start=1):
            if ch not in "01":
                raise MonomialParseError(f"unexpected {ch!r} in codeword", line_no, col)
        if n is None:
            n = len(content)
        elif len(content) != n:
            raise MonomialParseError(f"codeword has {len(content)} bits, expected {n}", line_no, 1)
        word = 0
        for i, ch in enumerate(content):
            if ch == "1":
                word |= 1 << i
        words.append(word)

    if n is None:
        raise MonomialParseError("code file contains no codewords", 1, 1)
    return n, words


def format_word(word: int, n: int) -> str:
    return "".join("1" if word >> i & 1 else "0" for i in range(n))
