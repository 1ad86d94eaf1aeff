"""Upper and lower bounds on trisection genus from classical invariants.

Every integer bound is computed in exact integer arithmetic.  Each bound
carries a short citation tag naming the argument it comes from:

``betti-sum``            g >= b1 + b2
``euler-minus-two``      g >= chi - 2
``duality-b1``           g >= b1 >= 1 - chi/2
``euler-rank``           g >= chi - 2 + 3 rank(pi1)
``third-euler``          g >= |chi|/3 (M not S^4)
``positive-euler-b1``    g >= chi when chi > 0 and b1 > 0
``genus-two-class``      g >= 3 when 1 <= chi <= 2, b1 = 0, M not S^4
``half-euler``           g >= chi/2 when chi > 0 and M is neither S^4 nor +-CP^2
``nonpositive-euler``    g >= |chi|/2 + 1 when chi <= 0
``sixty-sigma``          g <= 60 sigma
``trisection``           g <= genus of an explicit trisection
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "InconsistentInvariants",
    "InvariantSet",
    "Bound",
    "BoundReport",
    "lower_bounds",
    "upper_bound_sigma",
    "genus_bounds",
    "euler_sigma_bounds",
    "cover_bounds",
    "hyperbolic_volume",
    "hyperbolic_bounds",
    "einstein_bound",
    "stable_records",
    "StableRecord",
    "STABLE_GENUS_REFERENCE",
    "stable_genus_surface_bundle",
    "VOLUME_TOLERANCE",
]

#: Relative tolerance for the hyperbolic volume / Euler characteristic identity.
VOLUME_TOLERANCE = 1e-6


class InconsistentInvariants(ValueError):
    pass


def _ceil_div(a, b):
    return -((-a) // b)


@dataclass(frozen=True)
class InvariantSet:
    """Invariants of a closed orientable 4-manifold.

    ``rank_lb`` is a lower bound on the rank of the fundamental group and
    defaults to ``beta1``.  ``excluded_s4`` and ``excluded_cp2`` are user
    assertions that M is not S^4, respectively not CP^2 with either orientation.
    """

    chi: int
    beta1: int = None
    beta2: int = None
    rank_lb: int = None
    sigma: int = None
    volume: float = None
    signature: int = None
    gromov_norm: float = None
    excluded_s4: bool = False
    excluded_cp2: bool = False
    trisection_genus: int = None

    def __post_init__(self):
        if self.chi is None:
            raise ValueError("chi is required")
        for name in ("beta1", "beta2", "rank_lb", "trisection_genus"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.sigma is not None and self.sigma < 1:
            raise ValueError("sigma must be a positive integer")
        if self.volume is not None and self.volume <= 0:
            raise ValueError("volume must be positive")
        if self.gromov_norm is not None and self.gromov_norm < 0:
            raise ValueError("Gromov norm must be non-negative")
        if self.beta1 is not None and self.beta2 is not None:
            expected = 2 - 2 * self.beta1 + self.beta2
            if expected != self.chi:
                raise InconsistentInvariants(
                    f"2 - 2*b1 + b2 = {expected} but chi = {self.chi}"
                )
        if self.rank_lb is not None and self.beta1 is not None and self.rank_lb < self.beta1:
            raise InconsistentInvariants("rank of pi1 is at least b1")

    @property
    def rank(self):
        return self.rank_lb if self.rank_lb is not None else self.beta1


@dataclass(frozen=True)
class Bound:
    name: str
    kind: str  # "lower" or "upper"
    value: object
    citation: str
    applicable: bool = True
    note: str = ""


@dataclass
class BoundReport:
    bounds: list
    extras: dict = field(default_factory=dict)

    def _values(self, kind):
        return [b.value for b in self.bounds if b.kind == kind and b.applicable]

    @property
    def lower(self):
        vals = self._values("lower")
        return max(vals) if vals else None

    @property
    def upper(self):
        vals = self._values("upper")
        return min(vals) if vals else None

    @property
    def consistent(self) -> bool:
        return self.lower is None or self.upper is None or self.lower <= self.upper

    @property
    def diagnostic(self) -> str:
        if self.consistent:
            return ""
        return f"INCONSISTENT: lower bound {self.lower} exceeds upper bound {self.upper}"

    def get(self, name):
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def sandwich(self, symbol="g(M)") -> str:
        lo = "?" if self.lower is None else self.lower
        hi = "?" if self.upper is None else self.upper
        return f"{hi} ≥ {symbol} ≥ {lo}"

    def to_dict(self):
        return {
            "bounds": [
                {
                    "name": b.name,
                    "kind": b.kind,
                    "value": _plain(b.value),
                    "citation": b.citation,
                    "applicable": b.applicable,
                    "note": b.note,
                }
                for b in sorted(self.bounds, key=lambda b: (b.kind, b.name))
            ],
            "lower": _plain(self.lower),
            "upper": _plain(self.upper),
            "consistent": self.consistent,
            "extras": {k: _plain(v) for k, v in self.extras.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self):
        lines = []
        for b in sorted(self.bounds, key=lambda b: (b.kind, b.name)):
            if b.applicable:
                rel = "≥" if b.kind == "lower" else "≤"
                lines.append(f"{b.kind:5s} g {rel} {_plain(b.value)}  [{b.citation}]")
        for k in sorted(self.extras):
            lines.append(f"{k} = {_plain(self.extras[k])}")
        if self.lower is not None:
            lines.append(f"lower = {self.lower}")
        if self.upper is not None:
            lines.append(f"upper = {self.upper}")
        if self.diagnostic:
            lines.append(self.diagnostic)
        return "\n".join(lines)


def _plain(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def lower_bounds(inv: InvariantSet) -> BoundReport:
    """All applicable lower bounds on g(M), with the aggregate maximum."""
    chi, b1, b2 = inv.chi, inv.beta1, inv.beta2
    out = []
    if b1 is not None and b2 is not None:
        out.append(Bound("betti-sum", "lower", b1 + b2, "betti-sum"))
    out.append(Bound("euler-minus-two", "lower", chi - 2, "euler-minus-two"))
    out.append(Bound("duality-b1", "lower", _ceil_div(2 - chi, 2), "duality-b1"))
    if inv.rank is not None:
        out.append(Bound("euler-rank", "lower", chi - 2 + 3 * inv.rank, "euler-rank"))
    if chi <= 0:
        out.append(
            Bound("nonpositive-euler", "lower", _ceil_div(-chi, 2) + 1, "nonpositive-euler")
        )
    if inv.excluded_s4:
        out.append(Bound("third-euler", "lower", _ceil_div(abs(chi), 3), "third-euler"))
        if chi > 0 and b1 is not None and b1 > 0:
            out.append(Bound("positive-euler-b1", "lower", chi, "positive-euler-b1"))
        if 1 <= chi <= 2 and b1 == 0:
            out.append(
                Bound("genus-two-class", "lower", 3, "genus-two-class",
                      note="uses the classification of trisections of genus at most 2")
            )
        if chi > 0 and inv.excluded_cp2:
            out.append(Bound("half-euler", "lower", _ceil_div(chi, 2), "half-euler"))
    return BoundReport(out)


def upper_bound_sigma(sigma: int) -> int:
    """g(M) <= 60 sigma for any triangulation with sigma pentachora."""
    if sigma is None or sigma < 1:
        raise ValueError("sigma must be a positive integer")
    return 60 * sigma


def _upper(inv):
    out = []
    if inv.sigma is not None:
        out.append(Bound("sixty-sigma", "upper", upper_bound_sigma(inv.sigma), "sixty-sigma"))
    if inv.trisection_genus is not None:
        out.append(Bound("trisection", "upper", inv.trisection_genus, "trisection"))
    return out


def genus_bounds(inv: InvariantSet) -> BoundReport:
    """Lower bounds together with every available upper bound."""
    report = lower_bounds(inv)
    report.bounds.extend(_upper(inv))
    if inv.signature is not None and inv.gromov_norm is not None:
        report.extras["einstein_lower_if_einstein"] = einstein_bound(
            inv.signature, inv.gromov_norm
        )
    return report


def euler_sigma_bounds(inv: InvariantSet) -> BoundReport:
    """60 sigma >= g >= |chi|/3 for M not diffeomorphic to S^4."""
    out = [
        Bound("third-euler", "lower", _ceil_div(abs(inv.chi), 3), "third-euler",
              applicable=inv.excluded_s4)
    ]
    if inv.sigma is not None:
        out.append(Bound("sixty-sigma", "upper", upper_bound_sigma(inv.sigma), "sixty-sigma"))
    return BoundReport(out)


def cover_bounds(inv: InvariantSet, degree: int) -> BoundReport:
    """Bounds on g(N) for a degree-``degree`` cover N of M."""
    if degree < 1:
        raise ValueError("cover degree must be at least 1")
    out = [
        Bound("third-euler", "lower", _ceil_div(abs(inv.chi) * degree, 3), "third-euler",
              applicable=inv.excluded_s4,
              note="" if inv.excluded_s4 else "requires M not diffeomorphic to S^4")
    ]
    if inv.sigma is not None:
        out.append(Bound("sixty-sigma", "upper", 60 * inv.sigma * degree, "sixty-sigma"))
    report = BoundReport(out)
    report.extras["degree"] = degree
    report.extras["linear_in_degree"] = inv.chi != 0
    return report


def hyperbolic_volume(chi) -> float:
    """Volume of a closed hyperbolic 4-manifold: 4 pi^2 chi / 3."""
    return 4.0 * math.pi**2 * chi / 3.0


def hyperbolic_bounds(inv: InvariantSet = None, *, chi=None, volume=None, sigma=None):
    """Volume bounds for a closed hyperbolic 4-manifold.

    Either ``chi`` or ``volume`` (or both, if consistent) determines the
    other.  Lower bound ceil(chi/2), i.e. 3 Vol / (8 pi^2); upper bound
    60 sigma = C Vol with C = 60 sigma / Vol.
    """
    if inv is not None:
        chi = inv.chi if chi is None else chi
        volume = inv.volume if volume is None else volume
        sigma = inv.sigma if sigma is None else sigma
    if volume is not None and volume <= 0:
        raise ValueError("volume must be positive")
    if chi is None and volume is None:
        raise ValueError("chi or volume required")
    if chi is None:
        chi = round(3.0 * volume / (4.0 * math.pi**2))
    if volume is None:
        volume = hyperbolic_volume(chi)
    if abs(volume - hyperbolic_volume(chi)) > VOLUME_TOLERANCE * volume:
        raise InconsistentInvariants(
            f"volume {volume} does not equal 4 pi^2 chi / 3 for chi = {chi}"
        )
    if chi <= 0 or chi % 2:
        raise InconsistentInvariants(
            "closed hyperbolic 4-manifolds have positive even Euler characteristic"
        )
    out = [Bound("hyperbolic-half-euler", "lower", chi // 2, "half-euler")]
    extras = {
        "chi": chi,
        "volume": volume,
        "volume_lower": 3.0 * volume / (8.0 * math.pi**2),
        "volume_tolerance": VOLUME_TOLERANCE,
    }
    if sigma is not None:
        out.append(Bound("sixty-sigma", "upper", upper_bound_sigma(sigma), "sixty-sigma"))
        extras["C"] = 60.0 * sigma / volume
    return BoundReport(out, extras)


def einstein_bound(signature, gromov_norm) -> float:
    """|sign|/2 + ||M|| / (7776 pi^2) for closed Einstein M not S^4."""
    if gromov_norm < 0:
        raise ValueError("Gromov norm must be non-negative")
    return abs(signature) / 2.0 + gromov_norm / (7776.0 * math.pi**2)


@dataclass(frozen=True)
class StableRecord:
    """Best ratio value/degree seen; an upper bound on the infimum over all covers."""

    value: Fraction
    lower: int = None

    @property
    def upper_on_infimum(self):
        return self.value


def stable_records(records, chi=None, excluded_s4=True) -> StableRecord:
    """Minimum of ``value / degree`` over ``(degree, value)`` pairs.

    With ``chi`` given (and M not S^4) the stable lower bound |chi|/3 is
    attached.
    """
    records = list(records)
    if not records:
        raise ValueError("at least one (degree, value) record is required")
    best = None
    for d, v in records:
        if d < 1 or v < 0:
            raise ValueError("degrees must be >= 1 and values >= 0")
        r = Fraction(v, d)
        best = r if best is None or r < best else best
    lower = _ceil_div(abs(chi), 3) if chi is not None and excluded_s4 else None
    return StableRecord(best, lower)


#: Known stable trisection genera, as documented reference values.
STABLE_GENUS_REFERENCE = {"S1xS3": 0, "T4": 0}


def stable_genus_surface_bundle(g: int) -> int:
    """Stable trisection genus of S_g x S^2 (and the twisted bundle), g >= 1."""
    if g < 1:
        raise ValueError("g must be at least 1")
    return 2 * g - 2
