"""Level-bounded dominant weights, center quotients and their orbits.

``enumerate_level_weights`` lists the dominant weights lambda with
(lambda | theta) <= l, ordered by their fundamental-weight coefficient
tuples.  For a quotient by an order-2 center subgroup, ``restrict_to_quotient``
keeps the weights whose character is trivial on the subgroup and
``orbit_decompose`` groups them into orbits under the induced involution.

Types B and D also carry the coordinate view used throughout: writing
lambda + rho = sum u_i e_i, the u_i form a strictly decreasing sequence of
half-integers, and membership in the quotient sublattice becomes an
integrality condition on the u_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Sequence, Tuple

from .rootsys import (
    RootSystem,
    Vector,
    level_of,
    marks,
    vec_add,
    vec_sub,
    weight_from_marks,
)


class CenterSpec(Enum):
    """Supported order-<=2 center subgroups, named by the quotient group."""

    TRIVIAL = "trivial"
    SO_EVEN = "so-even"  # kernel of Spin(2s) -> SO(2s), type D
    SO_ODD = "so-odd"  # kernel of Spin(2s+1) -> SO(2s+1), type B
    SO3 = "so3"  # kernel of SL(2) -> SO(3), type A1 at even level
    SO4_DIAGONAL = "so4-diagonal"  # (-I, -I) in SL(2) x SL(2)


@dataclass(frozen=True)
class LevelWeightSet:
    """All dominant weights of ``rs`` at level <= ``level``, in canonical order."""

    rs: RootSystem
    level: int
    weights: Tuple[Vector, ...]

    @property
    def k(self) -> int:
        """The shifted level l + h appearing in all denominators."""
        return self.level + self.rs.dual_coxeter

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class ProductLevelWeightSet:
    """Weight tuples for a product of simply connected factors."""

    factors: Tuple[Tuple[RootSystem, int], ...]
    weights: Tuple[Tuple[Vector, ...], ...]

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class UCoordinates:
    """Coordinates of lambda + rho: u in the orthogonal basis, t in the
    fundamental-weight basis (every t_i >= 1 for dominant lambda)."""

    u: Tuple[Fraction, ...]
    t: Tuple[int, ...]


@dataclass(frozen=True)
class Orbit:
    representative: object  # Vector, or tuple of Vector for products
    size: int


@dataclass(frozen=True)
class OrbitSet:
    orbits: Tuple[Orbit, ...]

    def total_size(self) -> int:
        return sum(o.size for o in self.orbits)

    def __len__(self) -> int:
        return len(self.orbits)


def comarks(rs: RootSystem) -> Tuple[int, ...]:
    """(fundamental weight | theta) for each node; all strictly positive."""
    out = []
    for w in rs.fundamental_weights:
        c = level_of(rs, w)
        if c.denominator != 1 or c <= 0:
            raise AssertionError(f"bad comark {c} for {rs.group_type}")
        out.append(int(c))
    return tuple(out)


def enumerate_level_weights(rs: RootSystem, level: int) -> LevelWeightSet:
    """All dominant weights with (lambda | theta) <= level.

    Enumerates fundamental-weight coefficient tuples n with
    sum n_i (w_i | theta) <= level; the output is ordered by the coefficient
    tuple, so it is deterministic and duplicate-free by construction.
    """
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    m = comarks(rs)
    tuples = []

    def extend(i, remaining, cur):
        if i == rs.rank:
            tuples.append(tuple(cur))
            return
        for n in range(remaining // m[i] + 1):
            cur.append(n)
            extend(i + 1, remaining - n * m[i], cur)
            cur.pop()

    extend(0, level, [])
    weights = tuple(weight_from_marks(rs, n) for n in tuples)
    return LevelWeightSet(rs=rs, level=level, weights=weights)


def enumerate_product_weights(
    factors: Sequence[Tuple[RootSystem, int]]
) -> ProductLevelWeightSet:
    """Cartesian product of the per-factor level weight sets."""
    if not factors:
        raise ValueError("need at least one factor")
    per_factor = [enumerate_level_weights(rs, lvl).weights for rs, lvl in factors]
    return ProductLevelWeightSet(
        factors=tuple(factors), weights=tuple(product(*per_factor))
    )


def u_coords(rs: RootSystem, lam: Vector) -> UCoordinates:
    """Orthogonal coordinates of lambda + rho (types B and D only)."""
    if rs.family not in ("B", "D"):
        raise ValueError(f"u-coordinates are defined for types B and D, not {rs.family}")
    t = tuple(n + 1 for n in marks(rs, lam))
    if any(x < 1 for x in t):
        raise ValueError(f"{lam} is not dominant")
    return UCoordinates(u=vec_add(lam, rs.rho), t=t)


def weight_from_u(rs: RootSystem, u: Sequence[Fraction]) -> Vector:
    """Inverse of :func:`u_coords`; validates the result is dominant integral."""
    if rs.family not in ("B", "D"):
        raise ValueError(f"u-coordinates are defined for types B and D, not {rs.family}")
    lam = vec_sub(tuple(Fraction(x) for x in u), rs.rho)
    if any(n < 0 for n in marks(rs, lam)):
        raise ValueError(f"u-coordinates {u} do not give a dominant weight")
    return lam


def _check_single_spec(spec: CenterSpec, rs: RootSystem) -> None:
    wanted = {
        CenterSpec.SO_EVEN: ("D", None),
        CenterSpec.SO_ODD: ("B", None),
        CenterSpec.SO3: ("A", 1),
    }
    if spec is CenterSpec.TRIVIAL:
        return
    if spec is CenterSpec.SO4_DIAGONAL:
        raise ValueError("so4-diagonal acts on weight pairs, not single weights")
    family, rank = wanted[spec]
    if rs.family != family or (rank is not None and rs.rank != rank):
        raise ValueError(f"center spec {spec.value} does not apply to {rs.group_type}")


def is_quotient_weight(spec: CenterSpec, rs: RootSystem, lam: Vector) -> bool:
    """Whether the character lambda is trivial on the center subgroup."""
    _check_single_spec(spec, rs)
    if spec is CenterSpec.TRIVIAL:
        return True
    n = marks(rs, lam)
    s = rs.rank
    if spec is CenterSpec.SO_EVEN:
        # equivalently: all u-coordinates of lambda + rho are integers
        return (n[s - 2] - n[s - 1]) % 2 == 0
    if spec is CenterSpec.SO_ODD:
        # equivalently: all u-coordinates lie in Z + 1/2
        return n[s - 1] % 2 == 0
    return n[0] % 2 == 0  # SO3


def restrict_to_quotient(P: LevelWeightSet, spec: CenterSpec) -> LevelWeightSet:
    """The sub-level-set of weights trivial on the center subgroup."""
    kept = tuple(w for w in P.weights if is_quotient_weight(spec, P.rs, w))
    return LevelWeightSet(rs=P.rs, level=P.level, weights=kept)


def restrict_product_to_quotient(
    P: ProductLevelWeightSet, spec: CenterSpec
) -> ProductLevelWeightSet:
    """Product-version of the restriction (diagonal center of SL2 x SL2)."""
    if spec is CenterSpec.TRIVIAL:
        return P
    if spec is not CenterSpec.SO4_DIAGONAL:
        raise ValueError(f"center spec {spec.value} does not apply to products")
    _check_so4_factors(P.factors)
    kept = tuple(
        pair
        for pair in P.weights
        if sum(marks(rs, w)[0] for (rs, _), w in zip(P.factors, pair)) % 2 == 0
    )
    return ProductLevelWeightSet(factors=P.factors, weights=kept)


def _check_so4_factors(factors) -> None:
    if len(factors) != 2:
        raise ValueError("so4-diagonal requires exactly two factors")
    for rs, lvl in factors:
        if rs.family != "A" or rs.rank != 1:
            raise ValueError("so4-diagonal requires two A1 factors")
    if (factors[0][1] + factors[1][1]) % 2 != 0:
        raise ValueError(
            "so4-diagonal requires levels of equal parity "
            f"(got {factors[0][1]}, {factors[1][1]})"
        )


def _a1_flip(rs: RootSystem, level: int, lam: Vector) -> Vector:
    n = marks(rs, lam)[0]
    if not 0 <= n <= level:
        raise ValueError(f"{lam} is not a level-{level} weight of A1")
    return weight_from_marks(rs, (level - n,))


def center_act(spec: CenterSpec, w, factors):
    """Apply the order-2 generator of the center subgroup to a weight.

    ``factors`` is ``(rs, level)`` for a single weight, or a sequence of
    ``(rs, level)`` pairs when ``w`` is a tuple of weights (the diagonal
    product case).  The action is an involution on the quotient sublattice.
    """
    if spec is CenterSpec.TRIVIAL:
        return w
    if spec is CenterSpec.SO4_DIAGONAL:
        factors = tuple(factors)
        _check_so4_factors(factors)
        return tuple(
            _a1_flip(rs, lvl, part) for (rs, lvl), part in zip(factors, w)
        )
    rs, level = factors
    _check_single_spec(spec, rs)
    if not is_quotient_weight(spec, rs, w):
        raise ValueError(f"{w} is not trivial on the center subgroup {spec.value}")
    if spec is CenterSpec.SO3:
        if level % 2 != 0:
            raise ValueError("the SO3 quotient needs an even level")
        return _a1_flip(rs, level, w)
    u = u_coords(rs, w).u
    k = level + rs.dual_coxeter
    if u[0] + u[1] >= k:
        raise ValueError(f"{w} is not a level-{level} weight")
    if spec is CenterSpec.SO_EVEN:
        image = (k - u[0],) + u[1:-1] + (-u[-1],)
    else:  # SO_ODD
        image = (k - u[0],) + u[1:]
    return weight_from_u(rs, tuple(sorted(image, reverse=True)))


def orbit_decompose(Pprime, spec: CenterSpec) -> OrbitSet:
    """Group a restricted level set into center orbits.

    Representatives are the members with lexicographically minimal
    coefficient tuples; orbits are listed in representative order.  Orbit
    sizes are 1 (fixed point) or 2.
    """
    if isinstance(Pprime, ProductLevelWeightSet):
        elements = Pprime.weights
        key = lambda pair: tuple(
            marks(rs, w) for (rs, _), w in zip(Pprime.factors, pair)
        )
        act = lambda pair: center_act(spec, pair, Pprime.factors)
    else:
        elements = Pprime.weights
        key = lambda w: marks(Pprime.rs, w)
        act = lambda w: center_act(spec, w, (Pprime.rs, Pprime.level))
    index = {key(w): w for w in elements}
    seen = set()
    orbits = []
    for w in sorted(elements, key=key):
        kw = key(w)
        if kw in seen:
            continue
        image = act(w)
        ki = key(image)
        if ki not in index:
            raise AssertionError(f"center action left the level set: {w} -> {image}")
        seen.add(kw)
        if ki == kw:
            orbits.append(Orbit(representative=w, size=1))
        else:
            seen.add(ki)
            orbits.append(Orbit(representative=w, size=2))
    return OrbitSet(orbits=tuple(orbits))
