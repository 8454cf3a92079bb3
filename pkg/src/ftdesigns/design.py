"""Parameter algebra for 2-designs and the pruning predicates built on it.

A parameter tuple (v, b, r, k, lambda) is admissible when the standard
counting identities and inequalities hold:

    r(k-1) = lambda(v-1)
    vr = bk
    v <= b          (Fisher)
    k <= r
    lambda * v < r^2

together with nontriviality 2 < k < v-1.  Everything is exact integer
arithmetic; "nearly feasible" does not exist here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import divisors


class NonIntegralParameterError(ValueError):
    """Completing (v, k, lambda) forced a non-integer r or b."""

    def __init__(self, which: str, message: str):
        super().__init__(message)
        self.which = which


@dataclass(frozen=True, order=True)
class Parameters:
    v: int
    b: int
    r: int
    k: int
    lam: int

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.b, self.r, self.k, self.lam)

    def __str__(self) -> str:
        return f"({self.v},{self.b},{self.r},{self.k},{self.lam})"


@dataclass(frozen=True)
class GroupFrame:
    """Order data for an almost simple group G with socle X and H = G_alpha.

    order_h0 is |H ∩ X| and out_order is |Out(X)|; the point count is
    order_x / order_h0.  stabilizer_is_parabolic records whether H came from
    a parabolic subgroup, which decides if the Tits divisibility filter
    applies.
    """

    order_x: int
    order_h0: int
    out_order: int
    p: int | None = None
    stabilizer_is_parabolic: bool = False

    def __post_init__(self) -> None:
        if self.order_x % self.order_h0 != 0:
            raise ValueError("order_h0 must divide order_x")

    @property
    def v(self) -> int:
        return self.order_x // self.order_h0


def complete_parameters(v: int, k: int, lam: int) -> Parameters:
    """Fill in r and b from (v, k, lambda), insisting both are integers.

    Raises NonIntegralParameterError with .which in {"r", "b"} so callers can
    distinguish which counting identity failed.
    """
    if not (v > k >= 2 and lam >= 1):
        raise ValueError(f"need v > k >= 2 and lambda >= 1, got {(v, k, lam)}")
    num_r = lam * (v - 1)
    if num_r % (k - 1) != 0:
        raise NonIntegralParameterError(
            "r", f"r = {lam}({v}-1)/({k}-1) is not an integer")
    r = num_r // (k - 1)
    if (v * r) % k != 0:
        raise NonIntegralParameterError(
            "b", f"b = {v}*{r}/{k} is not an integer")
    return Parameters(v, v * r // k, r, k, lam)


def admissibility_violations(params: Parameters) -> list[str]:
    """Names of every violated constraint; empty list means admissible."""
    v, b, r, k, lam = params.astuple()
    violations = []
    if r * (k - 1) != lam * (v - 1):
        violations.append("r(k-1) = lambda(v-1) violated")
    if v * r != b * k:
        violations.append("vr = bk violated")
    if v > b:
        violations.append("v <= b violated")
    if k > r:
        violations.append("k <= r violated")
    if lam * v >= r * r:
        violations.append("lambda*v < r^2 violated")
    if not 2 < k:
        violations.append("2 < k violated (trivial design)")
    if not k < v - 1:
        violations.append("k < v-1 violated (trivial design)")
    return violations


def is_admissible(params: Parameters) -> bool:
    return not admissibility_violations(params)


def enumerate_candidates(v: int, lam: int, r_divides: int) -> list[Parameters]:
    """All admissible parameter tuples with this v and lambda where r divides
    the given modulus.

    For each divisor r of r_divides, k is forced by r(k-1) = lambda(v-1) and
    b by vr = bk; a tuple is emitted only when both are integral and every
    admissibility constraint holds.  The empty list is a meaningful result:
    it proves no design with these constraints exists.
    """
    if v < 4:
        raise ValueError(f"need v >= 4, got {v}")
    if r_divides < 1:
        raise ValueError(f"need r_divides >= 1, got {r_divides}")
    found = []
    for r in divisors(r_divides):
        num_k = lam * (v - 1)
        if num_k % r != 0:
            continue
        k = 1 + num_k // r
        if k < 2 or k > v:
            continue
        if (v * r) % k != 0:
            continue
        params = Parameters(v, v * r // k, r, k, lam)
        if is_admissible(params):
            found.append(params)
    return sorted(set(found))


def embeds_symmetric(params: Parameters) -> tuple[int, int, int] | None:
    """Symmetric design parameters this design extends to when r = k + lambda.

    Returns (v + k + lambda, k + lambda, lambda), or None when the extension
    criterion r = k + lambda does not hold.  Only meaningful for lambda <= 2.
    """
    v, _, r, k, lam = params.astuple()
    if lam > 2:
        raise ValueError("extension criterion only applies for lambda <= 2")
    if r != k + lam:
        return None
    return (v + k + lam, k + lam, lam)


def is_large(order_g: int, order_h: int) -> bool:
    """Whether |H|^3 >= |G| for a subgroup H of G."""
    if order_g % order_h != 0:
        raise ValueError(f"{order_h} does not divide {order_g}")
    return order_h**3 >= order_g


def tits_check(p: int, v: int) -> bool:
    """Consistency filter for non-parabolic stabilizers in characteristic p:
    the point count v must be divisible by p, i.e. gcd(p, v-1) = 1."""
    if v < 2:
        raise ValueError(f"need v >= 2, got {v}")
    return gcd(p, v - 1) == 1


def r_modulus(frame: GroupFrame, v: int, lam: int,
              subdegree_gcd: int | None = None) -> int:
    """Tightest proven modulus that the replication number must divide.

    Combines r | lambda(v-1), r | |H| with |H| dividing |Out(X)|*|H ∩ X|,
    and (when a subdegree gcd is known) r | lambda*d for nontrivial
    subdegrees d.
    """
    if lam < 1:
        raise ValueError("lambda must be positive")
    if frame.v != v:
        raise ValueError(
            f"v = {v} inconsistent with |X|/|H ∩ X| = {frame.v}")
    modulus = gcd(lam * (v - 1), frame.out_order * frame.order_h0)
    if subdegree_gcd is not None:
        modulus = gcd(modulus, lam * subdegree_gcd)
    return modulus
