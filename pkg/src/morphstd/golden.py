"""Exact arithmetic in Z[phi] and the golden-mean floor sequences built on it.

No floating point is used anywhere: the single irrational primitive is
floor(q * phi), obtained from the integer square root of 5 q^2.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt


def floor_q_phi(q: int) -> int:
    """floor(q * phi) for any integer q."""
    if q > 0:
        return (q + isqrt(5 * q * q)) // 2
    if q < 0:
        return -floor_q_phi(-q) - 1
    return 0


@dataclass(frozen=True, slots=True)
class GoldenNumber:
    """The number p + q * phi, with phi^2 = phi + 1."""

    p: int = 0
    q: int = 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNumber(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.p, -self.q)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNumber(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        p1, q1, p2, q2 = self.p, self.q, other.p, other.q
        return GoldenNumber(p1 * p2 + q1 * q2, p1 * q2 + p2 * q1 + q1 * q2)

    __rmul__ = __mul__

    def sign(self) -> int:
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        # irrational, so never an integer: positive iff the floor is >= 0
        return 1 if gn_floor(self) >= 0 else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __floor__(self):
        return gn_floor(self)

    def __str__(self):
        return f"{self.p}{'+' if self.q >= 0 else '-'}{abs(self.q)}*phi"


def _coerce(x):
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, int):
        return GoldenNumber(x, 0)
    return NotImplemented


PHI = GoldenNumber(0, 1)
ONE = GoldenNumber(1, 0)


def gn_add(a: GoldenNumber, b: GoldenNumber) -> GoldenNumber:
    return a + b


def gn_sub(a: GoldenNumber, b: GoldenNumber) -> GoldenNumber:
    return a - b


def gn_mul(a: GoldenNumber, b: GoldenNumber) -> GoldenNumber:
    return a * b


def gn_floor(a: GoldenNumber) -> int:
    return a.p + floor_q_phi(a.q)


def gn_frac(a: GoldenNumber) -> GoldenNumber:
    return GoldenNumber(a.p - gn_floor(a), a.q)


def beatty_a(n: int) -> int:
    """floor(n * phi), the lower Wythoff sequence."""
    if n < 1:
        raise ValueError(f"a(n) is defined for n >= 1, got {n}")
    return floor_q_phi(n)


def g_seq(k: int) -> int:
    """floor(phi * floor(k / phi)), using 1/phi = phi - 1."""
    if k < 0:
        raise ValueError(f"g_k is defined for k >= 0, got {k}")
    return floor_q_phi(floor_q_phi(k) - k)


def increment_a(n: int) -> int:
    if n < 1:
        raise ValueError(f"a_n is defined for n >= 1, got {n}")
    return g_seq(n) - g_seq(n - 1)


def e_seq(n: int) -> int:
    """floor((n + 1) / phi)."""
    if n < 0:
        raise ValueError(f"e(n) is defined for n >= 0, got {n}")
    return gn_floor(GoldenNumber(-(n + 1), n + 1))


def griffiths(n: int) -> int:
    """floor((floor((n + 1) phi) - 1) / phi)."""
    if n < 0:
        raise ValueError(f"defined for n >= 0, got {n}")
    m = floor_q_phi(n + 1) - 1
    return gn_floor(GoldenNumber(-m, m))


# --- identity verification ------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    statement: str
    passed: bool
    first_counterexample: int | None = None
    notes: list[str] = field(default_factory=list)


@dataclass
class IdentityReport:
    n_max: int
    results: list[IdentityResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "PASS" if r.passed else f"FAIL first counterexample n={r.first_counterexample}"
            line = f"{r.name}: {r.statement} for n=1..{self.n_max}: {status}"
            if r.notes:
                line += " [" + "; ".join(r.notes) + "]"
            out.append(line)
        return out


CHECKS = {
    "floor-swap": "floor(phi*floor(n/phi)) = floor((floor(n*phi)-1)/phi)",
    "frac-threshold": "{phi*floor(n*phi)} < phi-1 <=> {phi*floor(n*phi)} < {n*phi}",
    "beatty-recursion": "a(a(n)-n) = a(a(n)-1)-a(n)+1",
    "frac-linear": "{floor(n*phi)*phi} = (1-phi)*{n*phi} + 1",
    "floor-of-floor": "floor(floor(n*phi)*phi) = floor(n*phi)+n-1",
}
# the recursion exactly as printed, and its Hofstadter-Conway rearrangement
PRINTED_RECURSION = "a(a(n)-n) = a(a(n)-1)-a(n)-1"
CONWAY_RECURSION = "a(n) = a(a(n)-1)-a(a(n)-n)-1"
CONWAY_DERIVED = "a(n) = a(a(n)-1)-a(a(n)-n)+1"

_PHI_MINUS_ONE = GoldenNumber(-1, 1)
_ONE_MINUS_PHI = GoldenNumber(1, -1)


def _check_range(bounds: tuple[int, int]) -> dict[str, int]:
    """First failing n in [lo, hi) for each check; a(0) is taken as 0."""
    lo, hi = bounds
    first: dict[str, int] = {}
    a = floor_q_phi
    for n in range(lo, hi):
        an = a(n)
        # floor(k/phi) = floor(k*phi) - k
        lhs = a(an - n)
        am1 = a(an - 1)
        rhs = am1 - (an - 1)
        if lhs != rhs and "floor-swap" not in first:
            first["floor-swap"] = n

        frac_n = GoldenNumber(-an, n)
        frac_big = gn_frac(GoldenNumber(0, an))
        if (frac_big < _PHI_MINUS_ONE) != (frac_big < frac_n) and "frac-threshold" not in first:
            first["frac-threshold"] = n

        if lhs != am1 - an + 1 and "beatty-recursion" not in first:
            first["beatty-recursion"] = n
        if lhs != am1 - an - 1 and "printed" not in first:
            first["printed"] = n
        if an != am1 - lhs - 1 and "conway" not in first:
            first["conway"] = n
        if an != am1 - lhs + 1 and "conway-derived" not in first:
            first["conway-derived"] = n

        if frac_big != _ONE_MINUS_PHI * frac_n + ONE and "frac-linear" not in first:
            first["frac-linear"] = n
        if gn_floor(GoldenNumber(0, an)) != an + n - 1 and "floor-of-floor" not in first:
            first["floor-of-floor"] = n
    return first


def verify_identities(n_max: int, jobs: int = 1) -> IdentityReport:
    """Check the five golden-mean floor identities exactly for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    jobs = max(1, jobs)
    if jobs == 1:
        parts = [_check_range((1, n_max + 1))]
    else:
        step = -(-n_max // jobs)
        chunks = [(lo, min(lo + step, n_max + 1)) for lo in range(1, n_max + 1, step)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_check_range, chunks))
    first: dict[str, int] = {}
    for part in parts:
        for k, n in part.items():
            first[k] = min(n, first.get(k, n))

    def describe(key: str, statement: str) -> str:
        n = first.get(key)
        return f"{statement} {'holds' if n is None else f'fails first at n={n}'}"

    results = []
    for name, statement in CHECKS.items():
        res = IdentityResult(name, statement, name not in first, first.get(name))
        if name == "beatty-recursion":
            res.notes = [
                "as printed: " + describe("printed", PRINTED_RECURSION),
                "Hofstadter-Conway form: " + describe("conway", CONWAY_RECURSION),
                "derived Hofstadter-Conway form: " + describe("conway-derived", CONWAY_DERIVED),
            ]
        results.append(res)
    return IdentityReport(n_max, results)
