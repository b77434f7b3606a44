"""
Small descriptors naming the knots that occur as quotients.

Text syntax, as used in the registry and on the command line::

    unknot            the unknot
    T(2,7)            a torus knot
    427/62            a 2-bridge knot given by its fraction
    jm(3)             the 2-bridge quotient of J_m^+ with m = 3
    A # B             connected sum
    supplied          an invariant that must be given by hand
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Union

from .two_bridge import TwoBridgeFraction, jm_fraction, parse_fraction


@dataclass(frozen=True)
class Unknot:
    def __str__(self) -> str:
        return "unknot"


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(f"T({self.p},{self.q}): parameters must be at least 2")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"T({self.p},{self.q}) is a link, not a knot (gcd {gcd(self.p, self.q)})")

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class Rational:
    fraction: TwoBridgeFraction

    def __str__(self) -> str:
        return str(self.fraction)


@dataclass(frozen=True)
class JmQuotient:
    """The quotient of J_m^+ whose fraction is :func:`jm_fraction`."""

    m: int

    @property
    def fraction(self) -> TwoBridgeFraction:
        return jm_fraction(self.m)

    def __str__(self) -> str:
        return f"jm({self.m})"


@dataclass(frozen=True)
class ConnectedSum:
    parts: tuple["Descriptor", ...]

    def __str__(self) -> str:
        return " # ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Supplied:
    note: str = ""

    def __str__(self) -> str:
        return f"supplied:{self.note}" if self.note else "supplied"


Descriptor = Union[Unknot, TorusKnot, Rational, JmQuotient, ConnectedSum, Supplied]

_TORUS = re.compile(r"^T\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_JM = re.compile(r"^jm\(\s*(-?\d+)\s*\)$")


def parse_descriptor(text: str) -> Descriptor:
    text = text.strip()
    if "#" in text:
        return ConnectedSum(tuple(parse_descriptor(part) for part in text.split("#")))
    if text.lower() in ("unknot", "u", "0_1"):
        return Unknot()
    if text == "supplied" or text.startswith("supplied:"):
        return Supplied(text.partition(":")[2])
    if m := _TORUS.match(text):
        return TorusKnot(int(m.group(1)), int(m.group(2)))
    if m := _JM.match(text):
        return JmQuotient(int(m.group(1)))
    try:
        return Rational(parse_fraction(text))
    except ValueError:
        raise ValueError(f"cannot parse knot descriptor {text!r}") from None


def two_bridge_fraction(d: Descriptor):
    """The fraction of a 2-bridge descriptor (T(2,k) included), else None."""
    if isinstance(d, Rational):
        return d.fraction
    if isinstance(d, JmQuotient):
        return d.fraction
    if isinstance(d, TorusKnot) and 2 in (d.p, d.q):
        return TwoBridgeFraction(d.p * d.q // 2, 1)
    if isinstance(d, Unknot):
        return TwoBridgeFraction(1, 0)
    return None


def is_trivial(d: Descriptor) -> bool:
    if isinstance(d, Unknot):
        return True
    if isinstance(d, ConnectedSum):
        return all(is_trivial(p) for p in d.parts)
    f = two_bridge_fraction(d)
    return f is not None and f.is_unknot
