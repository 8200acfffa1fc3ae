"""Regularity verdicts for one ideal over any ring family that supplies the
ideal arithmetic below, and aggregation over batteries of ideals."""

from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Protocol

from .errors import EmptyBattery


class IdealArithmetic(Protocol):
    def product(self, I, J): ...

    def colon(self, I, J): ...

    def equals(self, I, J) -> bool: ...

    def contains(self, I, J) -> bool:
        """J is a subset of I."""

    def one(self): ...

    def scale(self, q, I): ...

    def principal_generator(self, I):
        """q with I = q (I:I), or None."""

    def describe(self, I) -> Any: ...

    def describe_element(self, q) -> Any: ...


@dataclass
class RegularityReport:
    ideal: Any
    regular: bool
    regular_certificate: dict
    stable: bool
    strongly_stable: bool
    generator: Optional[Any]
    scalar_idempotent: bool
    scalar: Optional[Any]
    l_stable: bool
    l_stable_status: str  # "stable" | "not_stable" | "inconclusive"
    l_stable_index: Optional[int]
    endo_ring: Any = None
    extra: dict = field(default_factory=dict)

    def implication_violations(self):
        """Broken links of strongly stable => stable => regular and L-stable,
        and of strongly stable <=> (stable and I^2 = cI)."""
        out = []
        if self.strongly_stable and not self.stable:
            out.append("strongly_stable without stable")
        if self.stable and not self.regular:
            out.append("stable without regular")
        if self.stable and not self.l_stable:
            out.append("stable without l_stable")
        if self.strongly_stable != (self.stable and self.scalar_idempotent):
            out.append("strongly_stable != (stable and I^2 = cI)")
        return out

    def to_json(self):
        return asdict(self)


class _Audit:
    """Counts every report built by :func:`regularity_report` and keeps the
    ones whose implication chain fails."""

    def __init__(self):
        self.reports = 0
        self.violations = []

    def record(self, report):
        self.reports += 1
        bad = report.implication_violations()
        if bad:
            self.violations.append((report.ideal, bad))

    def reset(self):
        self.reports = 0
        self.violations = []


AUDIT = _Audit()


def check_regular(A, I):
    """I = I^2 (I : I^2); returns (verdict, certificate)."""
    I2 = A.product(I, I)
    H = A.colon(I, I2)
    back = A.product(I2, H)
    return A.equals(back, I), {"colon": A.describe(H), "recomputed": A.describe(back)}


def check_stable(A, I):
    """I (T : I) = T with T = (I : I)."""
    T = A.colon(I, I)
    return A.equals(A.product(I, A.colon(T, I)), T)


def check_strongly_stable(A, I):
    return A.principal_generator(I)


def scalar_idempotent(A, I):
    """c with I^2 = cI, or None: c must generate (I^2 : I) over its own
    multiplier ring."""
    I2 = A.product(I, I)
    H = A.colon(I2, I)
    c = A.principal_generator(H)
    if c is not None and A.equals(A.scale(c, I), I2):
        return c
    return None


def check_l_stable(A, I, n_max=4):
    """Chain (I^n : I^n), n = 1..n_max. Returns (verdict, status, index):
    status "stable" when every term equals (I:I) (index 1), "not_stable"
    when the chain grows and has settled by n_max (index = first n where it
    settled), "inconclusive" when it is still growing at n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    chain = []
    P = I
    for n in range(1, n_max + 1):
        if n > 1:
            P = A.product(P, I)
        chain.append(A.colon(P, P))
    if all(A.equals(C, chain[0]) for C in chain):
        return True, "stable", 1
    if A.equals(chain[-1], chain[-2]):
        k = len(chain)
        while k > 1 and A.equals(chain[k - 2], chain[-1]):
            k -= 1
        return False, "not_stable", k
    return False, "inconclusive", None


def regularity_report(A, I, n_max=4, **extra):
    reg, cert = check_regular(A, I)
    stable = check_stable(A, I)
    gen = check_strongly_stable(A, I)
    c = scalar_idempotent(A, I)
    ls, status, idx = check_l_stable(A, I, n_max)
    T = A.colon(I, I)
    rep = RegularityReport(
        ideal=A.describe(I),
        regular=reg,
        regular_certificate=cert,
        stable=stable,
        strongly_stable=gen is not None,
        generator=None if gen is None else A.describe_element(gen),
        scalar_idempotent=c is not None,
        scalar=None if c is None else A.describe_element(c),
        l_stable=ls,
        l_stable_status=status,
        l_stable_index=idx,
        endo_ring=getattr(A, "describe_ring", A.describe)(T),
        extra=dict(extra),
    )
    AUDIT.record(rep)
    return rep


@dataclass
class RingVerdict:
    clifford_on_battery: bool
    boole_on_battery: bool
    stable_on_battery: bool
    strongly_stable_on_battery: bool
    exhaustive: bool
    equivalences_hold: Optional[bool]
    reports: list

    def to_json(self):
        d = asdict(self)
        d["reports"] = [r.to_json() for r in self.reports]
        return d


def ring_verdict(A, battery, exhaustive=False, noetherian=False, n_max=4):
    """Aggregate verdicts over a battery. For Noetherian families the
    equivalences regular <=> stable and scalar-idempotent <=> strongly stable
    (both ring-wide) are evaluated on the battery; a False there is a bug
    or a counterexample."""
    battery = list(battery)
    if not battery:
        raise EmptyBattery("empty battery")
    reports = [regularity_report(A, I, n_max) for I in battery]
    cl = all(r.regular for r in reports)
    bo = all(r.scalar_idempotent and r.regular for r in reports)
    st = all(r.stable for r in reports)
    ss = all(r.strongly_stable for r in reports)
    eq = None
    if noetherian:
        eq = cl == st and bo == ss and all(r.regular == r.stable for r in reports)
    return RingVerdict(cl, bo, st, ss, exhaustive, eq, reports)
