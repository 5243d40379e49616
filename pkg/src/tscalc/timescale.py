"""Bounded time scales and their point operators.

A time scale here is a finite union of disjoint closed segments of the
real line; a segment with ``lo == hi`` is a single point.  Unbounded
carriers (the reals, a uniform lattice h*Z, ...) are represented by
bounded windows onto them.  Note that the jump operators see only the
window: at the window's own endpoints they behave as on a genuinely
bounded scale, so a window standing in for an unbounded lattice should
extend at least one lattice step beyond the range of interest.

All values are immutable after construction and every operator is a
pure function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .errors import EmptyDomain, InvalidSegment, PointNotInScale

#: Absolute snap tolerance for point membership and construction-time
#: merging.  User-entered decimals within this distance of a stored
#: bound are treated as that bound; stored bounds themselves are exact.
EPS_POINT = 1e-12


class Segment(NamedTuple):
    """One closed building block: an interval [lo, hi] or, when
    ``lo == hi``, an isolated point."""

    lo: float
    hi: float

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.is_point:
            return f"{{{self.lo:g}}}"
        return f"[{self.lo:g},{self.hi:g}]"


class PointClass(enum.Enum):
    """Classification of a point of a time scale by its jump behaviour."""

    DENSE = "dense"
    RIGHT_SCATTERED = "right-scattered-left-dense"
    LEFT_SCATTERED = "left-scattered-right-dense"
    ISOLATED = "isolated"
    LEFT_ENDPOINT_DENSE = "left-endpoint-dense"
    RIGHT_ENDPOINT_DENSE = "right-endpoint-dense"


class KappaKind(enum.Enum):
    """Which extremum to trim before taking a dynamic derivative."""

    DELTA = "delta"  # drop a left-scattered maximum
    NABLA = "nabla"  # drop a right-scattered minimum
    BOTH = "both"    # intersection of the two


@dataclass(frozen=True)
class GridInterval:
    """Maximal continuum piece of [a,b] in the scale."""

    lo: float
    hi: float


@dataclass(frozen=True)
class GridPoint:
    """Scattered point of [a,b] with its gap sizes and diamond weight."""

    t: float
    mu: float
    nu: float
    gamma: float


GridPart = Union[GridInterval, GridPoint]


def _validate_segment(lo: float, hi: float) -> Segment:
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidSegment(f"segment bounds must be finite, got [{lo}, {hi}]")
    if lo > hi:
        raise InvalidSegment(f"segment bounds out of order: [{lo}, {hi}]")
    return Segment(float(lo), float(hi))


class TimeScale:
    """A bounded time scale in canonical form.

    Construction accepts segments in any order, merges overlapping or
    touching ones (within ``eps_point``), and stores a strictly
    increasing tuple with strictly positive gaps.  Two scales built
    from the same point set compare equal regardless of how the input
    was arranged.
    """

    __slots__ = ("segments", "eps_point", "_los", "_his")

    def __init__(
        self,
        segments: Iterable[tuple[float, float] | Segment],
        eps_point: float = EPS_POINT,
    ):
        raw = [_validate_segment(lo, hi) for lo, hi in segments]
        if not raw:
            raise InvalidSegment("a time scale needs at least one segment")
        raw.sort()
        merged = [raw[0]]
        for seg in raw[1:]:
            last = merged[-1]
            if seg.lo <= last.hi + eps_point:
                if seg.hi > last.hi:
                    merged[-1] = Segment(last.lo, seg.hi)
            else:
                merged.append(seg)
        self.segments: tuple[Segment, ...] = tuple(merged)
        self.eps_point = eps_point
        self._los = [s.lo for s in self.segments]
        self._his = [s.hi for s in self.segments]

    # -- basic queries -------------------------------------------------

    @property
    def tmin(self) -> float:
        return self.segments[0].lo

    @property
    def tmax(self) -> float:
        return self.segments[-1].hi

    @property
    def is_single_point(self) -> bool:
        return len(self.segments) == 1 and self.segments[0].is_point

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeScale):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __repr__(self) -> str:
        return f"TimeScale({' u '.join(str(s) for s in self.segments)})"

    def _locate(self, t: float) -> tuple[int, float] | None:
        """Find the segment holding ``t``.

        Returns ``(segment_index, snapped_t)`` where ``snapped_t`` is
        ``t`` pulled onto a stored bound when within ``eps_point`` of
        it, or None when ``t`` is not in the scale.
        """
        if not math.isfinite(t):
            return None
        eps = self.eps_point
        i = bisect_right(self._los, t) - 1
        for j in (i, i + 1):
            if 0 <= j < len(self.segments):
                lo, hi = self.segments[j]
                if abs(t - lo) <= eps:
                    return j, lo
                if abs(t - hi) <= eps:
                    return j, hi
                if lo < t < hi:
                    return j, t
        return None

    def contains(self, t: float) -> bool:
        return self._locate(t) is not None

    __contains__ = contains

    def snap(self, t: float) -> float:
        """Membership check that returns the stored representative of ``t``."""
        loc = self._locate(t)
        if loc is None:
            raise PointNotInScale(f"t = {t!r} is not a point of {self!r}")
        return loc[1]

    # -- jump operators ------------------------------------------------

    def sigma(self, t: float) -> float:
        """Forward jump: the nearest point strictly to the right, or t at the maximum."""
        i, t = self._require(t)
        lo, hi = self.segments[i]
        if t < hi:
            return t
        if i + 1 < len(self.segments):
            return self.segments[i + 1].lo
        return t

    def rho(self, t: float) -> float:
        """Backward jump: the nearest point strictly to the left, or t at the minimum."""
        i, t = self._require(t)
        lo, hi = self.segments[i]
        if t > lo:
            return t
        if i > 0:
            return self.segments[i - 1].hi
        return t

    def mu(self, t: float) -> float:
        """Forward gap sigma(t) - t."""
        return self.sigma(t) - self.snap(t)

    def nu(self, t: float) -> float:
        """Backward gap t - rho(t)."""
        return self.snap(t) - self.rho(t)

    def gamma(self, t: float) -> float:
        """Jump-asymmetry weight used by the diamond integral.

        1/2 where the scale is dense on both sides of t, otherwise
        (sigma(t) - t) / (sigma(t) - rho(t)).  Always in [0, 1]: it is
        1 at a left-dense right-scattered point and 0 at a right-dense
        left-scattered one.  A single-point scale degenerates to 1/2.
        """
        i, t = self._require(t)
        s = self.sigma(t)
        r = self.rho(t)
        if s == t and r == t:
            return 0.5
        return (s - t) / (s - r)

    def classify(self, t: float) -> PointClass:
        """Tag ``t`` by its jump behaviour on both sides."""
        i, t = self._require(t)
        m = self.sigma(t) - t
        n = t - self.rho(t)
        if m > 0.0 and n > 0.0:
            return PointClass.ISOLATED
        if m > 0.0:
            return PointClass.RIGHT_SCATTERED
        if n > 0.0:
            return PointClass.LEFT_SCATTERED
        # both gaps vanish; distinguish true interior density from the
        # scale's own endpoints (where one side is dense by convention only)
        if self.is_single_point:
            return PointClass.ISOLATED
        if t == self.tmin:
            return PointClass.LEFT_ENDPOINT_DENSE
        if t == self.tmax:
            return PointClass.RIGHT_ENDPOINT_DENSE
        return PointClass.DENSE

    # -- derived scales ------------------------------------------------

    def kappa(self, kind: KappaKind) -> "TimeScale":
        """Trim the extremum points excluded from dynamic-derivative domains.

        Raises EmptyDomain when nothing would remain (single-point
        scale, or a two-point scale under ``KappaKind.BOTH``).
        """
        if self.is_single_point:
            raise EmptyDomain("derivative domain of a single-point scale is empty")
        segs = list(self.segments)
        if kind in (KappaKind.DELTA, KappaKind.BOTH) and segs[-1].is_point:
            segs = segs[:-1]  # maximum is left-scattered
        if kind in (KappaKind.NABLA, KappaKind.BOTH) and segs and segs[0].is_point:
            segs = segs[1:]  # minimum is right-scattered
        if not segs:
            raise EmptyDomain(f"{kind.value} domain of {self!r} is empty")
        return TimeScale(segs, eps_point=self.eps_point)

    def in_kappa(self, t: float, kind: KappaKind) -> bool:
        """Membership in the trimmed domain without building it."""
        loc = self._locate(t)
        if loc is None:
            return False
        t = loc[1]
        if kind in (KappaKind.DELTA, KappaKind.BOTH):
            if t == self.tmax and self.segments[-1].is_point and not self.is_single_point:
                return False
        if kind in (KappaKind.NABLA, KappaKind.BOTH):
            if t == self.tmin and self.segments[0].is_point and not self.is_single_point:
                return False
        if self.is_single_point:
            return False
        return True

    # -- decomposition -------------------------------------------------

    def grid(self, a: float, b: float) -> list[GridPart]:
        """Left-to-right decomposition of [a,b] in the scale.

        Emits maximal continuum sub-intervals (clipped to [a,b]) and
        every scattered point of [a,b] with its mu/nu/gamma payload.
        ``a`` and ``b`` must be points of the scale with a <= b; the
        degenerate range a == b yields an empty list.
        """
        a = self.snap(a)
        b = self.snap(b)
        if a > b:
            raise ValueError(f"grid needs a <= b, got {a} > {b}")
        if a == b:
            return []
        parts: list[GridPart] = []
        for i, (lo, hi) in enumerate(self.segments):
            if hi < a or lo > b:
                continue
            p, q = max(lo, a), min(hi, b)
            if a <= lo <= b and lo != hi:
                self._emit_scattered(parts, i, lo)
            if p < q:
                parts.append(GridInterval(p, q))
            if a <= hi <= b:
                self._emit_scattered(parts, i, hi)
        return parts

    def _emit_scattered(self, parts: list[GridPart], i: int, t: float) -> None:
        m = self.sigma(t) - t
        n = t - self.rho(t)
        if m > 0.0 or n > 0.0:
            parts.append(GridPoint(t, m, n, self.gamma(t)))

    # -- helpers ---------------------------------------------------------

    def _require(self, t: float) -> tuple[int, float]:
        loc = self._locate(t)
        if loc is None:
            raise PointNotInScale(f"t = {t!r} is not a point of {self!r}")
        return loc

    def scattered_points(self) -> list[float]:
        """All points with a nonzero jump on at least one side."""
        last = len(self.segments) - 1
        out: list[float] = []
        for i, (lo, hi) in enumerate(self.segments):
            if lo == hi:
                if i > 0 or i < last:
                    out.append(lo)
            else:
                if i > 0:
                    out.append(lo)  # left-scattered
                if i < last:
                    out.append(hi)  # right-scattered
        return out

    def boundary_points(self) -> list[float]:
        """Segment endpoints and isolated points, in increasing order."""
        out: list[float] = []
        for lo, hi in self.segments:
            out.append(lo)
            if hi != lo:
                out.append(hi)
        return out
