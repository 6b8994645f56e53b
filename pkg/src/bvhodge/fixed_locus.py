"""Fixed-locus data model for K3 surfaces with a purely non-symplectic C_n action.

A configuration consists of the eigenspace dimensions of the action on
H^2(S) together with, for every subgroup of C_n of order d > 1, the fixed
locus of that subgroup described as orbits of curves and of isolated points
under the full cyclic group.  The elliptic-curve side of the quotient is
rigid per order and is shipped as a hardcoded fixture.

Curve orbits carry the residual action of their stabilizer (the stabilizer
modulo the subgroup fixing the curve pointwise), which is what acts on the
members' cohomology; point orbits carry the cotangent exponents of the
generator of their pointwise stabilizer, scaled to modulus n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Union

from .cyclic import GroupElement
from .hodge import CharacterVector

SUPPORTED_ORDERS = (2, 3, 4, 6)

K3_EULER = 24
K3_H2_DIM = 22


@dataclass(frozen=True)
class Violation:
    """One validation finding.  Level is 'error' or 'warning'."""

    level: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.level}: {self.where}: {self.message}"


class InvariantError(ValueError):
    """A configuration violates the structural rules of its order."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class EigenspaceDims:
    """Dimensions d[j] of the eigenvalue exp(2*pi*i*j/n) on H^2(S)."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(v) for v in self.dims))
        if len(self.dims) != self.n:
            raise ValueError(f"expected {self.n} eigenspace dimensions, got {len(self.dims)}")

    @property
    def invariant_dim(self) -> int:
        return self.dims[0]


@dataclass(frozen=True)
class CurveOrbit:
    """An orbit of pairwise disjoint fixed curves of one subgroup.

    ``orbit_size`` members, each of genus ``genus``, cyclically permuted by
    the group; ``count`` collapses repeated identical orbits.  The residual
    cyclic group of order ``residual_order`` is the stabilizer of a member
    modulo its pointwise-fixing subgroup; ``quotient_genus`` is the genus of
    a member divided by that residual group.  ``char_dims``, when given,
    overrides the default character split of the (1,0)-cohomology of a
    member under the residual action (length-n vector of multiplicities).
    """

    genus: int
    orbit_size: int = 1
    residual_order: int = 1
    quotient_genus: Optional[int] = None
    char_dims: Optional[tuple[int, ...]] = None
    count: int = 1

    def __post_init__(self):
        if self.residual_order == 1 and self.quotient_genus is None:
            object.__setattr__(self, "quotient_genus", self.genus)
        if self.char_dims is not None:
            object.__setattr__(self, "char_dims", tuple(int(v) for v in self.char_dims))

    def euler_members(self) -> int:
        """Euler characteristic of the full orbit times ``count``."""
        return self.count * self.orbit_size * (2 - 2 * self.genus)


@dataclass(frozen=True)
class PointOrbit:
    """An orbit of isolated fixed points of one subgroup.

    ``type_exponents`` are the cotangent exponents of the generator of the
    pointwise-fixing subgroup at each member, scaled to modulus n.
    """

    type_exponents: tuple[int, int]
    orbit_size: int = 1
    count: int = 1

    def __post_init__(self):
        object.__setattr__(self, "type_exponents", tuple(int(t) for t in self.type_exponents))


@dataclass(frozen=True)
class SubgroupFixedRecord:
    """Fixed locus of the subgroup of order ``subgroup_order``."""

    subgroup_order: int
    curves: tuple[CurveOrbit, ...] = ()
    points: tuple[PointOrbit, ...] = ()

    def curve_count(self) -> int:
        return sum(c.count * c.orbit_size for c in self.curves)

    def point_count(self) -> int:
        return sum(p.count * p.orbit_size for p in self.points)

    def euler(self) -> int:
        return sum(c.euler_members() for c in self.curves) + self.point_count()

    def max_genus(self) -> int:
        return max((c.genus for c in self.curves), default=0)


@dataclass(frozen=True)
class K3Config:
    """Order, eigenspace dimensions, and one fixed-locus record per subgroup.

    ``invariants`` optionally remembers the named counts the configuration
    was built from; it is what allows the closed forms to be evaluated next
    to the general engine.
    """

    n: int
    eigenspace: EigenspaceDims
    records: tuple[SubgroupFixedRecord, ...]
    invariants: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n not in SUPPORTED_ORDERS:
            raise ValueError(f"unsupported order {self.n}; supported: {SUPPORTED_ORDERS}")
        if self.eigenspace.n != self.n:
            raise ValueError("eigenspace modulus differs from the order")

    def record(self, subgroup_order: int) -> SubgroupFixedRecord:
        for rec in self.records:
            if rec.subgroup_order == subgroup_order:
                return rec
        return SubgroupFixedRecord(subgroup_order)


@dataclass(frozen=True)
class EllipticFixture:
    """Fixed points of each subgroup on the elliptic side, as orbit sizes.

    The automorphism of E of order n is rigid, so the orbit data is fully
    determined by n; the local cotangent exponent in the sector of the j-th
    power is j*(n-1) = -j mod n at every fixed point.
    """

    n: int
    orbits: tuple[tuple[int, tuple[int, ...]], ...]

    def orbit_sizes(self, subgroup_order: int) -> tuple[int, ...]:
        for d, sizes in self.orbits:
            if d == subgroup_order:
                return sizes
        raise ValueError(f"no fixture data for subgroup order {subgroup_order}")

    def point_count(self, subgroup_order: int) -> int:
        return sum(self.orbit_sizes(subgroup_order))

    def char_vector(self, subgroup_order: int) -> CharacterVector:
        """Permutation character of C_n on the fixed points of the subgroup."""
        vec = CharacterVector.zero(self.n)
        for size in self.orbit_sizes(subgroup_order):
            vec = vec + CharacterVector.orbit(self.n, size)
        return vec


def elliptic_sector_exponent(n: int, j: int) -> int:
    """Cotangent exponent of the elliptic factor in the sector of power j."""
    return (j * (n - 1)) % n


_ELLIPTIC_ORBITS = {
    2: ((2, (1, 1, 1, 1)),),
    3: ((3, (1, 1, 1)),),
    4: ((4, (1, 1)), (2, (1, 1, 2))),
    6: ((6, (1,)), (3, (1, 2)), (2, (1, 3))),
}


def elliptic_fixture(n: int) -> EllipticFixture:
    """Hardcoded fixed-point data of the order-n elliptic automorphism."""
    if n not in SUPPORTED_ORDERS:
        raise ValueError(f"unsupported order {n}; supported: {SUPPORTED_ORDERS}")
    return EllipticFixture(n, _ELLIPTIC_ORBITS[n])


def curve_character_dims(curve: CurveOrbit, n: int) -> CharacterVector:
    """Character split of H^{1,0} of one orbit member under its residual action.

    The residual group of order rho embeds into C_n as the subgroup generated
    by the character index n/rho, so the split is reported directly in C_n
    characters.  Without an explicit override the non-invariant part is
    distributed in the unique symmetric way; for rho = 3 an odd non-invariant
    dimension has no symmetric split and requires ``char_dims``.
    """
    rho = curve.residual_order
    g, gq = curve.genus, curve.quotient_genus
    if gq is None:
        raise ValueError("quotient_genus is required when residual_order > 1")
    if curve.char_dims is not None:
        vec = CharacterVector(n, curve.char_dims)
        if vec.total() != g:
            raise ValueError(f"explicit char_dims must sum to the genus {g}")
        if vec.c[0] != gq:
            raise ValueError(f"explicit char_dims must have quotient genus {gq} at character 0")
        if rho < 1 or n % rho:
            raise ValueError(f"residual order {rho} does not divide {n}")
        step = n // rho
        if any(m and j % step for j, m in enumerate(vec.c)):
            raise ValueError(f"explicit char_dims supported only on multiples of {step}")
        return vec
    if rho == 1:
        return CharacterVector.delta(n, 0, g) if g else CharacterVector.zero(n)
    if rho == 2:
        if n % 2:
            raise ValueError(f"residual order 2 does not divide {n}")
        c = [0] * n
        c[0], c[n // 2] = gq, g - gq
        return CharacterVector(n, tuple(c))
    if rho == 3:
        if n % 3:
            raise ValueError(f"residual order 3 does not divide {n}")
        rest = g - gq
        if rest % 2:
            raise ValueError(
                "odd non-invariant dimension under a residual order-3 action "
                "has no balanced split; supply char_dims explicitly"
            )
        c = [0] * n
        c[0], c[n // 3], c[2 * n // 3] = gq, rest // 2, rest // 2
        return CharacterVector(n, tuple(c))
    raise ValueError(f"unsupported residual order {rho}")


def _residue(j: Union[int, GroupElement], n: int) -> int:
    if isinstance(j, GroupElement):
        if j.n != n:
            raise ValueError(f"modulus mismatch: {j.n} != {n}")
        return j.j
    return j % n


def euler_fixed_set(cfg: K3Config, j: Union[int, GroupElement]) -> int:
    """Euler characteristic of the fixed set of the j-th power on S.

    The identity gives the full K3 value 24; otherwise the fixed set is the
    one of the subgroup generated by the power, read off its record.
    """
    r = _residue(j, cfg.n)
    if r == 0:
        return K3_EULER
    return cfg.record(cfg.n // gcd(r, cfg.n)).euler()


# ---------------------------------------------------------------------------
# validation


def _err(where, message):
    return Violation("error", where, message)


def _warn(where, message):
    return Violation("warning", where, message)


def _validate_eigenspace(cfg: K3Config, out: list):
    n, dims = cfg.n, cfg.eigenspace.dims
    where = "eigenspace_dims"
    if any(v < 0 for v in dims):
        out.append(_err(where, "dimensions must be nonnegative"))
        return
    if sum(dims) != K3_H2_DIM:
        out.append(_err(where, f"eigenspace dims must sum to {K3_H2_DIM}, got {sum(dims)}"))
    for jj in range(1, n):
        if dims[jj] != dims[n - jj]:
            out.append(_err(where, f"conjugate symmetry fails: d[{jj}] != d[{n - jj}]"))
            break
    if dims[0] < 1:
        out.append(_err(where, "invariant part d[0] must be at least 1"))
    need = 2 if n == 2 else 1
    if dims[1] < need:
        out.append(_err(where, f"d[1] must be at least {need} (it contains the period classes)"))


def _validate_records(cfg: K3Config, out: list):
    n = cfg.n
    seen = set()
    for rec in cfg.records:
        d = rec.subgroup_order
        where = f"subgroup[{d}]"
        if d <= 1 or n % d:
            out.append(_err(where, f"subgroup order must be a divisor of {n} greater than 1"))
            continue
        if d in seen:
            out.append(_err(where, "duplicate record for this subgroup"))
            continue
        seen.add(d)
        for i, c in enumerate(rec.curves):
            w = f"{where}.curves[{i}]"
            if c.count < 1 or c.orbit_size < 1:
                out.append(_err(w, "count and orbit_size must be at least 1"))
                continue
            if c.genus < 0:
                out.append(_err(w, "genus must be nonnegative"))
                continue
            rho = c.residual_order
            if rho < 1 or rho not in (1, 2, 3):
                out.append(_err(w, f"residual order {rho} not supported (1, 2 or 3)"))
                continue
            if n % (c.orbit_size * rho * d):
                out.append(_err(
                    w,
                    f"orbit size {c.orbit_size}, residual order {rho} and subgroup order "
                    f"{d} must multiply into a divisor of {n}",
                ))
                continue
            gq = c.quotient_genus
            if gq is None:
                out.append(_err(w, "quotient_genus is required when residual_order > 1"))
                continue
            if rho == 1 and gq != c.genus:
                out.append(_err(w, "a pointwise-fixed curve has quotient genus equal to its genus"))
            if gq < 0 or gq > c.genus:
                out.append(_err(w, f"quotient genus must lie in 0..{c.genus}"))
            if c.char_dims is not None:
                try:
                    curve_character_dims(c, n)
                except ValueError as exc:
                    out.append(_err(w, str(exc)))
        for i, p in enumerate(rec.points):
            w = f"{where}.points[{i}]"
            if p.count < 1 or p.orbit_size < 1:
                out.append(_err(w, "count and orbit_size must be at least 1"))
                continue
            if (n // d) % p.orbit_size:
                out.append(_err(w, f"point orbit size must divide {n // d}"))
            t1, t2 = p.type_exponents
            step = n // d
            if t1 % n == 0 or t2 % n == 0:
                out.append(_err(w, "type exponents must be nonzero (zero means a fixed curve)"))
            elif t1 % step or t2 % step:
                out.append(_err(w, f"type exponents must be multiples of {step}"))
            elif (t1 + t2) % n != step % n:
                out.append(_err(
                    w,
                    f"type exponents must sum to {step} mod {n} "
                    "(the subgroup generator scales the period by that character)",
                ))


def _order4_shape(cfg: K3Config):
    """Collect the order-4 bookkeeping counts from the records."""
    rec4, rec2 = cfg.record(4), cfg.record(2)
    k = rec4.curve_count()
    n_points = rec4.point_count()
    b = sum(c.count for c in rec2.curves if c.orbit_size == 1 and c.residual_order == 2)
    a = sum(c.count for c in rec2.curves if c.orbit_size == 2)
    big_n = rec2.curve_count()
    h = sum(c.count * (1 - c.genus) for c in rec4.curves)
    g_fixed = rec4.max_genus()
    ro2 = [c for c in rec2.curves if c.orbit_size == 1 and c.residual_order == 2]
    g_inv = max((c.genus for c in ro2), default=0)
    return k, n_points, b, a, big_n, h, g_fixed, g_inv, ro2


def _validate_order3_shape(cfg: K3Config, out: list):
    rec = cfg.record(3)
    if rec.curve_count() + rec.point_count() == 0:
        out.append(_err("subgroup[3]", "an order-3 action always has a nonempty fixed locus"))
    genus_curves = sum(c.count for c in rec.curves if c.genus > 0)
    if genus_curves > 1:
        out.append(_warn("subgroup[3]", "more than one positive-genus fixed curve"))


def _order4_type_violations(d_type, k, n_points, b, h, g_d, n2_implied):
    where = "order4"
    v = []
    if d_type == "first":
        if h != k - g_d:
            v.append(_err(where, f"first type needs h = k - g(D) ({h} != {k}-{g_d})"))
        if n_points != 2 * h + 4:
            v.append(_err(where, f"first type needs n1 = 2h+4 ({n_points} != 2*{h}+4)"))
        if 2 * b != n_points:
            v.append(_err(where, f"first type needs b = n1/2 ({b} != {n_points}/2)"))
    else:
        if h != k:
            v.append(_err(where, f"second type needs h = k ({h} != {k})"))
        if n_points != 2 * h + 4:
            v.append(_err(where, f"second type needs n1+n2 = 2h+4 ({n_points} != 2*{h}+4)"))
        if 2 * (b - 1) != n_points - n2_implied:
            v.append(_err(where, f"second type needs b = n1/2 + 1 "
                                 f"({b} != ({n_points} - {n2_implied})/2 + 1)"))
    return v


def _validate_order4_shape(cfg: K3Config, out: list):
    k, n_points, b, a, big_n, h, g_fixed, g_inv, ro2 = _order4_shape(cfg)
    where = "order4"
    if big_n != k + b + 2 * a:
        out.append(_err(where, f"curve count fixed by the square must be N = k+b+2a "
                               f"({big_n} != {k}+{b}+2*{a})"))
    if g_fixed > 0 and g_inv > 0:
        out.append(_warn(where, "two positive-genus curves fixed by the square"))
    n2_second = (
        sum(c.count * (2 + 2 * c.genus - 4 * c.quotient_genus) for c in ro2 if c.genus > 0)
        if g_inv > 0 else (2 if ro2 else 0)
    )
    declared = (cfg.invariants or {}).get("D_type")
    if declared == "first" or (declared is None and g_fixed > 0):
        out.extend(_order4_type_violations("first", k, n_points, b, h, g_fixed, 0))
    elif declared == "second" or (declared is None and g_inv > 0):
        out.extend(_order4_type_violations("second", k, n_points, b, h, g_inv, n2_second))
    else:
        # all curves rational: the type is ambiguous, accept either shape
        v_first = _order4_type_violations("first", k, n_points, b, h, 0, 0)
        v_second = _order4_type_violations("second", k, n_points, b, h, 0, n2_second)
        if v_first and v_second:
            out.extend(v_first)


def _validate_order6_shape(cfg: K3Config, out: list):
    rec6, rec3 = cfg.record(6), cfg.record(3)
    where = "order6"
    g_d = rec6.max_genus()
    if g_d > 1:
        out.append(_err(where, f"the top fixed-curve genus is at most 1, got {g_d}"))
    p25 = sum(p.count for p in rec6.points
              if sorted(t % 6 for t in p.type_exponents) == [2, 5])
    singles = sum(p.count * p.orbit_size for p in rec3.points if p.orbit_size == 1)
    pairs = sum(p.count * p.orbit_size for p in rec3.points if p.orbit_size == 2)
    if singles != p25:
        out.append(_err(
            where,
            "isolated square-fixed points must be the (2,5) points: "
            f"n = p25 + 2n' fails ({singles + pairs} != {p25} + {pairs})",
        ))


def validate(cfg: K3Config, strictness: str = "engine") -> list[Violation]:
    """Check a configuration; returns findings instead of raising.

    ``engine`` strictness checks the type invariants only.  ``closed_form``
    additionally checks the order-specific shape relations assumed by the
    closed formulas.
    """
    if strictness not in ("engine", "closed_form"):
        raise ValueError(f"unknown strictness {strictness!r}")
    out: list[Violation] = []
    _validate_eigenspace(cfg, out)
    _validate_records(cfg, out)
    if strictness == "closed_form" and not out:
        if cfg.n == 3:
            _validate_order3_shape(cfg, out)
        elif cfg.n == 4:
            _validate_order4_shape(cfg, out)
        elif cfg.n == 6:
            _validate_order6_shape(cfg, out)
    return out


def _raise_on_errors(violations):
    errors = [v for v in violations if v.level == "error"]
    if errors:
        raise InvariantError(errors)


# ---------------------------------------------------------------------------
# constructors from the named invariants of each order

_POINT_TYPE = {3: (2, 2), 4: (2, 3)}
_POINT_TYPE_6 = {"p25": (2, 5), "p34": (3, 4), "square": (4, 4)}


def _int_args(where, **kwargs):
    bad = [f"{k}={v}" for k, v in kwargs.items() if not isinstance(v, int) or v < 0]
    if bad:
        raise InvariantError([_err(where, f"counts and genera must be nonnegative integers: "
                                          f"{', '.join(bad)}")])


def _curves(*specs) -> tuple[CurveOrbit, ...]:
    """Drop zero-count entries; specs are CurveOrbit kwargs dicts."""
    return tuple(CurveOrbit(**s) for s in specs if s.get("count", 1) > 0)


def _points(*specs) -> tuple[PointOrbit, ...]:
    return tuple(PointOrbit(**s) for s in specs if s.get("count", 1) > 0)


def from_invariants_order2(r: int, curve_genera) -> K3Config:
    """Order 2: invariant rank r and the genera of the fixed curves."""
    genera = tuple(int(g) for g in curve_genera)
    _int_args("order2", r=r, **{f"genus[{i}]": g for i, g in enumerate(genera)})
    dims = EigenspaceDims(2, (r, K3_H2_DIM - r))
    counts: dict[int, int] = {}
    for g in genera:
        counts[g] = counts.get(g, 0) + 1
    curves = _curves(*({"genus": g, "count": c} for g, c in sorted(counts.items(), reverse=True)))
    cfg = K3Config(
        2, dims, (SubgroupFixedRecord(2, curves),),
        invariants={"r": r, "curve_genera": list(genera)},
    )
    _raise_on_errors(validate(cfg, "closed_form"))
    return cfg


def from_invariants_order3(r: int, m: int, k: int, n_points: int, g_C: int) -> K3Config:
    """Order 3: k fixed curves (top genus g_C) and n isolated fixed points."""
    _int_args("order3", r=r, m=m, k=k, n_points=n_points, g_C=g_C)
    if r + 2 * m != K3_H2_DIM:
        raise InvariantError([_err("order3", f"need r + 2m = {K3_H2_DIM}, got {r} + 2*{m}")])
    if k == 0 and g_C > 0:
        raise InvariantError([_err("order3", "a positive top genus needs at least one curve")])
    curves = _curves(
        {"genus": g_C, "count": 1 if k else 0},
        {"genus": 0, "count": max(k - 1, 0)},
    )
    points = _points({"type_exponents": _POINT_TYPE[3], "count": n_points})
    cfg = K3Config(
        3, EigenspaceDims(3, (r, m, m)), (SubgroupFixedRecord(3, curves, points),),
        invariants={"r": r, "m": m, "k": k, "n_points": n_points, "g_C": g_C},
    )
    _raise_on_errors(validate(cfg, "closed_form"))
    return cfg


def from_invariants_order4(r: int, m: int, k: int, a: int, b: int, n1: int, n2: int,
                           g_D: int, D_type: str) -> K3Config:
    """Order 4 from the standard invariants; D_type is 'first' or 'second'.

    First type: the top curve D of the square's fixed locus is pointwise
    fixed by the full action (so no isolated fixed points lie on it and
    n2 = 0).  Second type: D is invariant but not pointwise fixed; the
    isolated points on D are the fixed points of its residual involution,
    which pins the quotient genus of D to (2 + 2g(D) - n2)/4.
    """
    _int_args("order4", r=r, m=m, k=k, a=a, b=b, n1=n1, n2=n2, g_D=g_D)
    v: list[Violation] = []
    if D_type not in ("first", "second"):
        raise InvariantError([_err("order4", f"D_type must be 'first' or 'second', got {D_type!r}")])
    d2 = K3_H2_DIM - r - 2 * m
    if d2 < 0:
        v.append(_err("order4", f"need r + 2m <= {K3_H2_DIM}"))
    if D_type == "first":
        if k < 1:
            v.append(_err("order4", "first type needs at least one pointwise-fixed curve"))
        if n2 != 0:
            v.append(_err("order4", "first type forces n2 = 0"))
        d_quot = g_D
    else:
        if b < 1:
            v.append(_err("order4", "second type needs at least one invariant curve"))
        if n2 % 2:
            v.append(_err("order4", "n2 must be even"))
        if n2 > 2 + 2 * g_D or (2 + 2 * g_D - n2) % 4:
            v.append(_err("order4", "the residual involution on D needs "
                                    "n2 <= 2 + 2g(D) and n2 = 2 + 2g(D) mod 4"))
        d_quot = (2 + 2 * g_D - n2) // 4 if not v else 0
    if v:
        raise InvariantError(v)

    fixed_curves = (
        _curves({"genus": g_D, "count": 1}, {"genus": 0, "count": k - 1})
        if D_type == "first"
        else _curves({"genus": 0, "count": k})
    )
    inv_curves = (
        _curves({"genus": 0, "residual_order": 2, "quotient_genus": 0, "count": b})
        if D_type == "first"
        else _curves(
            {"genus": g_D, "residual_order": 2, "quotient_genus": d_quot, "count": 1},
            {"genus": 0, "residual_order": 2, "quotient_genus": 0, "count": b - 1},
        )
    )
    rec4 = SubgroupFixedRecord(
        4, fixed_curves,
        _points({"type_exponents": _POINT_TYPE[4], "count": n1 + n2}),
    )
    rec2 = SubgroupFixedRecord(
        2, fixed_curves + inv_curves + _curves({"genus": 0, "orbit_size": 2, "count": a}),
    )
    cfg = K3Config(
        4, EigenspaceDims(4, (r, m, d2, m)), (rec4, rec2),
        invariants={"r": r, "m": m, "k": k, "a": a, "b": b, "n1": n1, "n2": n2,
                    "g_D": g_D, "D_type": D_type},
    )
    _raise_on_errors(validate(cfg, "closed_form"))
    return cfg


def from_invariants_order6(r: int, m: int, l: int, k: int, N: int, a: int, b: int,
                           n_prime: int, p25: int, p34: int, g_D: int,
                           g_G: int, g_G_quot: int, g_F1: int, g_F1_quot: int,
                           g_F2: int, g_F2_quot: int) -> K3Config:
    """Order 6 from the standard invariants.

    l, k and N count the curves fixed by the action, by its square and by
    its cube; a and b count the permuted triples and pairs among them; D, G
    and F1, F2 are the top-genus curves of the three fixed loci, with their
    quotient genera under the residual actions.  g(D) = 1 forces D = G = F1
    pointwise fixed.
    """
    _int_args("order6", r=r, m=m, l=l, k=k, N=N, a=a, b=b, n_prime=n_prime,
              p25=p25, p34=p34, g_D=g_D, g_G=g_G, g_G_quot=g_G_quot,
              g_F1=g_F1, g_F1_quot=g_F1_quot, g_F2=g_F2, g_F2_quot=g_F2_quot)
    v: list[Violation] = []
    where = "order6"
    if r + 5 * m != K3_H2_DIM:
        v.append(_err(where, f"need r + 5m = {K3_H2_DIM}, got {r} + 5*{m}"))
    if g_D not in (0, 1):
        v.append(_err(where, f"g(D) must be 0 or 1, got {g_D}"))
    c2 = k - l - 2 * b
    c3 = N - l - 3 * a
    if c2 < 0:
        v.append(_err(where, f"need k >= l + 2b ({k} < {l} + 2*{b})"))
    if c3 < 0:
        v.append(_err(where, f"need N >= l + 3a ({N} < {l} + 3*{a})"))
    if g_D == 1:
        if l < 1:
            v.append(_err(where, "g(D) = 1 needs a curve fixed by the full action"))
        if (g_G, g_G_quot, g_F1, g_F1_quot) != (1, 1, 1, 1):
            v.append(_err(where, "g(D) = 1 forces D = G = F1, all of genus 1 with "
                                 "trivial residual action"))
    else:
        if g_F1 < g_F2:
            v.append(_err(where, "F1 carries the higher genus"))
    if g_F2 > 0 and (g_F1 != 1 or g_F2 != 1):
        v.append(_err(where, "two positive-genus curves fixed by an involution "
                             "are both elliptic"))
    if g_G_quot > g_G or g_F1_quot > g_F1 or g_F2_quot > g_F2:
        v.append(_err(where, "quotient genera cannot exceed the genera"))
    if g_D == 0 and g_G > 0:
        if c2 < 1:
            v.append(_err(where, "a positive g(G) needs an invariant curve fixed by the square"))
        if 2 + 2 * g_G - 4 * g_G_quot < 0:
            v.append(_err(where, "no involution realizes this (g(G), g(G/.)) pair"))
    placed_f = []
    if g_D == 0 and g_F1 > 0:
        placed_f.append((g_F1, g_F1_quot))
    if g_F2 > 0:
        placed_f.append((g_F2, g_F2_quot))
    for g, gq in placed_f:
        if 2 + g - 3 * gq < 0:
            v.append(_err(where, "no residual order-3 action realizes this genus pair"))
    if len(placed_f) > c3:
        v.append(_err(where, "not enough invariant cube-fixed curves to carry the genera"))
    if v:
        raise InvariantError(v)

    fixed = _curves({"genus": g_D, "count": 1 if l else 0}, {"genus": 0, "count": l - 1 if l else 0})
    ro2 = (
        _curves({"genus": g_G, "residual_order": 2, "quotient_genus": g_G_quot, "count": 1},
                {"genus": 0, "residual_order": 2, "quotient_genus": 0, "count": c2 - 1})
        if g_D == 0 and g_G > 0
        else _curves({"genus": 0, "residual_order": 2, "quotient_genus": 0, "count": c2})
    )

    def _ro3_entry(g, gq):
        # an odd non-invariant dimension has no balanced split; pick the
        # near-balanced one, which the invariant pairing cannot distinguish
        entry = {"genus": g, "residual_order": 3, "quotient_genus": gq, "count": 1}
        if (g - gq) % 2:
            dims = [0] * 6
            dims[0], dims[2], dims[4] = gq, (g - gq + 1) // 2, (g - gq) // 2
            entry["char_dims"] = tuple(dims)
        return entry

    ro3 = _curves(
        *(_ro3_entry(g, gq) for g, gq in placed_f),
        {"genus": 0, "residual_order": 3, "quotient_genus": 0, "count": c3 - len(placed_f)},
    )
    rec6 = SubgroupFixedRecord(
        6, fixed,
        _points({"type_exponents": _POINT_TYPE_6["p25"], "count": p25},
                {"type_exponents": _POINT_TYPE_6["p34"], "count": p34}),
    )
    rec3 = SubgroupFixedRecord(
        3, fixed + ro2 + _curves({"genus": 0, "orbit_size": 2, "count": b}),
        _points({"type_exponents": _POINT_TYPE_6["square"], "count": p25},
                {"type_exponents": _POINT_TYPE_6["square"], "orbit_size": 2, "count": n_prime}),
    )
    rec2 = SubgroupFixedRecord(
        2, fixed + ro3 + _curves({"genus": 0, "orbit_size": 3, "count": a}),
    )
    cfg = K3Config(
        6, EigenspaceDims(6, (r, m, m, m, m, m)), (rec6, rec3, rec2),
        invariants={"r": r, "m": m, "l": l, "k": k, "N": N, "a": a, "b": b,
                    "n_prime": n_prime, "p25": p25, "p34": p34, "g_D": g_D,
                    "g_G": g_G, "g_G_quot": g_G_quot, "g_F1": g_F1,
                    "g_F1_quot": g_F1_quot, "g_F2": g_F2, "g_F2_quot": g_F2_quot},
    )
    _raise_on_errors(validate(cfg, "closed_form"))
    return cfg
