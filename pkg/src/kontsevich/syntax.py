"""Text forms of spaces, boundary symbols, monomials and class expressions.

Grammar (whitespace separates factors, ``^1`` may be omitted)::

    space      r=2,d=3,n=0
    boundary   K{A=1,3;dA=2}   K{dA=1}          (A empty when omitted)
    monomial   H^3 L1^2 K{dA=1}^5               (``1`` is the empty product)
    expression [coefficient] factor ...         factor may also be T, Z, C, W, S<i>

The printers emit the canonical boundary presentation and sorted factors, so
everything they print parses back to the same key.
"""

import re
from typing import Dict, List, Tuple

from .divalg import (
    DivSymbol,
    Factors,
    H_SYMBOL,
    Monomial,
    Polynomial,
    SymbolKind,
    b_symbol,
    conic_tangency_class,
    cuspidal_class,
    l_symbol,
    omega_squared_class,
    section_self_class,
    tangency_class,
)
from .exactnum import ONE, parse_rational
from .exceptions import MonomialSyntaxError
from .moduli import BoundarySym, SpaceId, boundary_from_side

_SPACE_RE = re.compile(r"^\s*r\s*=\s*(\d+)\s*,\s*d\s*=\s*(\d+)\s*,\s*n\s*=\s*(\d+)\s*$")
_TOKEN_RE = re.compile(r"K\{[^{}]*\}(?:\^\S*)?|\S+")
_FACTOR_RE = re.compile(r"^(H|T|Z|C|W|L(\d+)|S(\d+)|K\{([^{}]*)\})(?:\^(\d+))?$")
_COEFFICIENT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")

NAMED_CLASSES = ("T", "Z", "C", "W")


def parse_space(text: str) -> SpaceId:
    match = _SPACE_RE.match(text)
    if not match:
        raise MonomialSyntaxError(f"expected 'r=<int>,d=<int>,n=<int>', got {text!r}")
    return SpaceId.of(*(int(g) for g in match.groups()))


def format_space(s: SpaceId) -> str:
    return str(s)


def format_boundary(b: BoundarySym) -> str:
    if not b.side:
        return f"K{{dA={b.degree}}}"
    return f"K{{A={','.join(str(i) for i in b.side)};dA={b.degree}}}"


def parse_boundary(s: SpaceId, body: str) -> BoundarySym:
    """Parse the inside of ``K{...}`` into the canonical symbol on ``s``."""
    side: Tuple[int, ...] = ()
    degree = None
    for part in filter(None, (p.strip() for p in body.split(";"))):
        key, eq, value = part.partition("=")
        key = key.strip()
        if not eq:
            raise MonomialSyntaxError(f"malformed boundary field {part!r}")
        try:
            if key == "A":
                side = tuple(int(v) for v in value.split(",") if v.strip())
            elif key == "dA":
                degree = int(value)
            else:
                raise MonomialSyntaxError(f"unknown boundary field {key!r}")
        except ValueError:
            raise MonomialSyntaxError(f"non-integer value in boundary field {part!r}")
    if degree is None:
        raise MonomialSyntaxError(f"boundary K{{{body}}} lacks dA")
    if len(set(side)) != len(side):
        raise MonomialSyntaxError(f"repeated marking in boundary K{{{body}}}")
    return boundary_from_side(s, side, degree)


def format_symbol(sym: DivSymbol) -> str:
    if sym.kind == SymbolKind.H:
        return "H"
    if sym.kind == SymbolKind.L:
        return f"L{sym.marking}"
    return format_boundary(sym.boundary)


def format_factors(factors: Factors) -> str:
    if not factors:
        return "1"
    return " ".join(
        format_symbol(sym) if e == 1 else f"{format_symbol(sym)}^{e}" for sym, e in factors
    )


def format_monomial(m: Monomial) -> str:
    return format_factors(m.factors)


def _tokens(text: str) -> List[str]:
    return _TOKEN_RE.findall(text)


def _factor(token: str):
    match = _FACTOR_RE.match(token)
    if not match:
        raise MonomialSyntaxError(f"unexpected token {token!r}")
    head, l_index, s_index, body, exponent = match.groups()
    exponent = 1 if exponent is None else int(exponent)
    if exponent < 1:
        raise MonomialSyntaxError(f"exponent must be positive in {token!r}")
    return head, l_index, s_index, body, exponent


def _symbol(s: SpaceId, head: str, l_index, body) -> DivSymbol:
    if head == "H":
        return H_SYMBOL
    if l_index is not None:
        return l_symbol(int(l_index))
    return b_symbol(parse_boundary(s, body))


def parse_monomial(s: SpaceId, text: str) -> Monomial:
    """Parse the strict grammar: only H, L<i> and K{...} factors.

    Raises:
        MonomialSyntaxError: On any other token.
        InvalidSymbolError: On a marking or partition that does not exist on ``s``.
    """
    exponents: Dict[DivSymbol, int] = {}
    tokens = _tokens(text)
    if tokens == ["1"]:
        tokens = []
    for token in tokens:
        head, l_index, s_index, body, exponent = _factor(token)
        if head in NAMED_CLASSES or s_index is not None:
            raise MonomialSyntaxError(f"named class {token!r} is not a monomial factor")
        sym = _symbol(s, head, l_index, body)
        exponents[sym] = exponents.get(sym, 0) + exponent
    return Monomial.of(s, exponents)


def _named_class(s: SpaceId, head: str, s_index):
    if s_index is not None:
        return section_self_class(s, int(s_index))
    return {
        "T": tangency_class,
        "Z": cuspidal_class,
        "C": conic_tangency_class,
        "W": omega_squared_class,
    }[head](s)


def parse_expression(s: SpaceId, text: str) -> Polynomial:
    """Parse ``[coefficient] factor ...`` with named classes expanded.

    Example: ``1/2 H^3 T^2 L1`` on M̄_{0,1}(2,2).
    """
    tokens = _tokens(text)
    coefficient = ONE
    if tokens and _COEFFICIENT_RE.match(tokens[0]):
        coefficient = parse_rational(tokens.pop(0))
    if tokens == ["1"]:
        tokens = []

    plain: Dict[DivSymbol, int] = {}
    named = []
    for token in tokens:
        head, l_index, s_index, body, exponent = _factor(token)
        if head in NAMED_CLASSES or s_index is not None:
            named.append((_named_class(s, head, s_index), exponent))
        else:
            sym = _symbol(s, head, l_index, body)
            plain[sym] = plain.get(sym, 0) + exponent

    result = Polynomial.from_monomial(Monomial.of(s, plain), coefficient)
    for cls, exponent in named:
        result = result.multiply(cls.as_polynomial().power(exponent))
    return result
