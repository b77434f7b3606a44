"""
Lower bounds for equivariant unknotting numbers from the two quotient knots,
and the report establishing that the equivariant unknotting number is not
subadditive under equivariant connected sum.

Type A moves change each quotient by a crossing change, so the larger quotient
unknotting number bounds them. Type B moves act as a 4-move on one quotient,
and type C moves as a non-orientable band move on one quotient, so those
bounds are sums.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .knots import ConnectedSum, Descriptor, Supplied, is_trivial, parse_descriptor, two_bridge_fraction
from .registry import QuotientData, Registry, load_registry
from .signature import UnsupportedDescriptor, signature_magnitude, signature_q2_jm
from .two_bridge import format_fraction, is_torus_fraction, jm_fraction, u4_equals_one


def _check_nonnegative(*values: int) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"unknotting numbers are nonnegative, got {v}")


def unknotting_lower_bound(sig_magnitude: int) -> int:
    """u(K) >= |sigma(K)| / 2, rounded up."""
    _check_nonnegative(sig_magnitude)
    return -(-sig_magnitude // 2)


def type_A_lower(u_q1: int, u_q2: int) -> int:
    _check_nonnegative(u_q1, u_q2)
    return max(u_q1, u_q2)


def type_B_lower(u4_q1: int, u4_q2: int) -> int:
    _check_nonnegative(u4_q1, u4_q2)
    return u4_q1 + u4_q2


def type_C_lower(unb_q1: int, unb_q2: int) -> int:
    _check_nonnegative(unb_q1, unb_q2)
    return unb_q1 + unb_q2


def u_lower(d: Descriptor) -> Optional[int]:
    """Signature bound on the unknotting number, or None when no signature is available."""
    if isinstance(d, Supplied):
        return None
    try:
        return unknotting_lower_bound(signature_magnitude(d))
    except UnsupportedDescriptor:
        return None


def u4_lower(d: Descriptor) -> Optional[int]:
    """
    Lower bound for the 4-move unknotting number: 0 for the unknot, 2 for a
    2-bridge knot that no single 4-move unknots, otherwise 1 for a nontrivial knot.
    """
    if isinstance(d, Supplied):
        return None
    if is_trivial(d):
        return 0
    f = two_bridge_fraction(d)
    if f is not None:
        return 1 if u4_equals_one(f) else 2
    return 1


@dataclass
class KnotBounds:
    knot: QuotientData
    u_q: tuple[Optional[int], Optional[int]]
    u4_q: tuple[Optional[int], Optional[int]]
    unb_q: tuple[Optional[int], Optional[int]]
    type_A: int
    type_B: int
    type_C: int

    def to_dict(self) -> dict:
        return {
            "knot": self.knot.to_dict(),
            "u_lower": list(self.u_q),
            "u4_lower": list(self.u4_q),
            "unb_supplied": list(self.unb_q),
            "type_A_lower": self.type_A,
            "type_B_lower": self.type_B,
            "type_C_lower": self.type_C,
        }


def knot_bounds(knot: QuotientData, unb: tuple[Optional[int], Optional[int]] = (None, None)) -> KnotBounds:
    """All three bounds for one registry entry; unknown quotient values count as 0."""
    u_q = (u_lower(knot.q1), u_lower(knot.q2))
    u4_q = (u4_lower(knot.q1), u4_lower(knot.q2))
    zero = lambda pair: tuple(v or 0 for v in pair)  # noqa: E731
    return KnotBounds(
        knot, u_q, u4_q, unb,
        type_A_lower(*zero(u_q)), type_B_lower(*zero(u4_q)), type_C_lower(*zero(unb)),
    )


# ---------------------------------------------------------------------------
# the non-additivity report


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str
    citation: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "citation": self.citation}


@dataclass
class NonadditivityReport:
    m_range: tuple[int, int]
    checks: list[SubCheck] = field(default_factory=list)
    fractions: list[tuple[int, str]] = field(default_factory=list)
    small_signature_m: list[int] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    conclusion: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "status": "PASS" if self.passed else "FAILED",
            "m_range": list(self.m_range),
            "checks": [c.to_dict() for c in self.checks],
            "candidate_fractions": [{"m": m, "fraction": f} for m, f in self.fractions],
            "small_signature_m": self.small_signature_m,
            "assumptions": self.assumptions,
            "provenance": self.provenance,
            "conclusion": self.conclusion,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)

    def to_text(self) -> str:
        lines = [f"non-additivity report, m in [{self.m_range[0]}, {self.m_range[1]}]"]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}  ({c.citation})")
        lines.append("  candidate fractions: " + ", ".join(f"m={m}: {f}" for m, f in self.fractions))
        for a in self.assumptions:
            lines.append(f"  assumption: {a}")
        for p in self.provenance:
            lines.append(f"  data: {p}")
        lines.append(f"status: {'PASS' if self.passed else 'FAILED'}")
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)


# m values allowed by the interval -2m-6 <= sigma <= -2m when |sigma| < 6
CANDIDATE_WINDOW = range(-5, 3)


def nonadditivity_report(m_range: tuple[int, int] = (-100, 100), registry: Optional[Registry] = None) -> NonadditivityReport:
    registry = registry or load_registry()
    lo, hi = m_range
    if lo > hi:
        raise ValueError(f"empty m range {lo}..{hi}")
    report = NonadditivityReport((lo, hi))
    add = report.checks.append

    base = registry.get("K_3#K_3")
    minus = registry.get("J_m^-", m=0)
    twist = registry.get("K_3")
    report.provenance += [f"{base.name}: {base.provenance}", f"J_m^-: {minus.provenance}",
                          f"J_m^+: {registry.get('J_m^+', m=0).provenance}"]

    # (i) the quotient T(2,7) # T(2,7) of the sum
    sig = signature_magnitude(base.q2)
    u_bound = unknotting_lower_bound(sig)
    add(SubCheck("signature of q2(K1#K2)", sig == 12, f"|sigma({base.q2})| = {sig}", "signature of T(2,7)#T(2,7)"))
    add(SubCheck(
        "no type A move or two type B moves",
        u_bound > 4,
        f"u(q2) >= {u_bound} > 4 crossing changes realizable by one type A move or two type B moves",
        "type A and type B quotient bounds",
    ))

    # (ii) J_m^-: same quotient
    same = str(minus.q2) == str(base.q2)
    add(SubCheck(
        "J_m^-: no single type B move",
        same and unknotting_lower_bound(signature_magnitude(minus.q2)) > 2,
        f"q2(J_m^-) = {minus.q2} (registry), so u(q2) >= {u_bound} > 2",
        "type B quotient bound",
    ))
    composite = isinstance(minus.q2, ConnectedSum) and sum(not is_trivial(p) for p in minus.q2.parts) >= 2
    add(SubCheck(
        "J_m^-: no single type C move",
        composite,
        f"q2(J_m^-) = {minus.q2} is a sum of two nontrivial knots, not a twist knot quotient T(2,2k+1)",
        "only twist knots are unknotted by one type C move",
    ))

    # (iii) J_m^+
    ms = range(lo, hi + 1)
    torus_hits = [m for m in ms if is_torus_fraction(jm_fraction(m)) is not None]
    add(SubCheck(
        "J_m^+: q2 is never T(2,2k+1)",
        not torus_hits,
        f"jm_fraction(m) is not equivalent to (2k+1)/1 for any m in range" if not torus_hits
        else f"torus fractions at m = {torus_hits}",
        "fraction test q = +-1 (mod p)",
    ))
    sigs = {m: signature_q2_jm(m) for m in ms}
    outside = [m for m, s in sigs.items() if not -2 * m - 6 <= s <= -2 * m]
    add(SubCheck(
        "J_m^+: signature interval",
        not outside,
        "sigma(q2(J_m^+)) in [-2m-6, -2m] for every m" if not outside else f"outside at m = {outside}",
        "3x3 Goeritz matrix with correction 2m+3",
    ))
    small = [m for m, s in sigs.items() if abs(s) < 6]
    report.small_signature_m = small
    stray = [m for m in small if m not in CANDIDATE_WINDOW]
    add(SubCheck(
        "J_m^+: |sigma| >= 6 unless -6 < m < 3",
        not stray,
        f"|sigma| < 6 exactly for m in {small}, inside the window -5..2" if not stray
        else f"|sigma| < 6 outside the window at m = {stray}",
        "signature bound u > 2 when |sigma| >= 6",
    ))
    report.fractions = [(m, format_fraction(jm_fraction(m))) for m in CANDIDATE_WINDOW]
    witnesses = {m: u4_equals_one(jm_fraction(m)) for m in CANDIDATE_WINDOW}
    found = [m for m, w in witnesses.items() if w is not None]
    add(SubCheck(
        "J_m^+: no single 4-move for -5 <= m <= 2",
        not found,
        "no (r, s) satisfies the 4-move criterion for any of the eight fractions" if not found
        else f"4-move witnesses at m = {found}",
        "2-bridge 4-move criterion 4rs = +-p+-1",
    ))
    first, last = report.fractions[0][1], report.fractions[-1][1]
    add(SubCheck(
        "J_m^+: listed fractions",
        first == "-357/-50" and last == "329/48",
        f"m = -5 gives {first}, m = 2 gives {last}",
        "continued fraction [6,-1,2m+1,-1,6]",
    ))

    report.assumptions = [
        f"u~(K1) = u~(K2) = {twist.u_tilde_upper}: {twist.u_tilde_provenance} (cited, not computed)",
        "u(T(2,2k+1)) = k and the signature bound |sigma|/2 <= u are taken as known",
    ]
    upper = twist.u_tilde_upper or 0
    report.conclusion = (
        f"ũ(K₁#K₂) ≥ 3 > {2 * upper} = ũ(K₁)+ũ(K₂)" if report.passed else "FAILED: see sub-checks"
    )
    return report
