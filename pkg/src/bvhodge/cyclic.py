"""Elements of C_n, linearized local actions, ages, and intersection classes.

Conventions, fixed once for the whole package:

* One generator of C_n is chosen globally; residues, character indices and
  local exponents all refer to it.
* Local actions are recorded on the cotangent space: the exponent tuple
  (e_1, ..., e_k) means eigenvalues exp(2*pi*i*e_j/n), and the product of
  the eigenvalues is the action on the top holomorphic form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class GroupElement:
    """A residue j mod n, i.e. the j-th power of the fixed generator."""

    n: int
    j: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be at least 1, got {self.n}")
        object.__setattr__(self, "j", self.j % self.n)

    @property
    def is_identity(self) -> bool:
        return self.j == 0


@dataclass(frozen=True)
class LocalAction:
    """Cotangent exponents of a linearized finite-order action at a point."""

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be at least 1, got {self.n}")
        object.__setattr__(
            self, "exponents", tuple(int(e) % self.n for e in self.exponents)
        )


def age(action: LocalAction) -> Fraction:
    """Sum of the eigenvalue exponents divided by n, as an exact rational.

    Writing the eigenvalues as exp(2*pi*i*a_k) with a_k in [0, 1), the age
    is sum_k a_k.  It is an integer exactly when the determinant is 1.
    """
    return Fraction(sum(action.exponents), action.n)


def age_is_integral_iff_unimodular(action: LocalAction) -> tuple[bool, bool]:
    """Return (age is an integer, determinant equals 1).

    The two predicates agree for every action; returning both makes the
    equivalence directly testable.
    """
    a = age(action)
    det_is_one = sum(action.exponents) % action.n == 0
    return (a.denominator == 1, det_is_one)


def power_transport(action: LocalAction, u: int) -> LocalAction:
    """Local action of the u-th power: every exponent is multiplied by u."""
    if u < 1:
        raise ValueError(f"power must be at least 1, got {u}")
    return LocalAction(action.n, tuple((u * e) % action.n for e in action.exponents))


def intersection_class(a: GroupElement, b: GroupElement) -> GroupElement:
    """Class of the subgroup generated by two elements.

    For g = alpha^j and h = alpha^k the fixed sets satisfy
    Fix(g) intersect Fix(h) = Fix(alpha^gcd(j, k, n)), so the pair reduces
    to the single residue gcd(j, k, n) mod n (0 for the identity pair).
    """
    if a.n != b.n:
        raise ValueError(f"modulus mismatch: {a.n} != {b.n}")
    return GroupElement(a.n, gcd(a.j, b.j, a.n) % a.n)
