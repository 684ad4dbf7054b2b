"""Structure maps of equivariant toric varieties.

Everything here is built from a validated GFan: the pure divisorial
truncation (drop all cones of dimension >= 2), the affine structure of
a stable cone, the standard toric variety attached to a list of ray
stabilizers, the comparison morphism rho from the standard variety, the
divisor character map, and a lattice-point consistency check relating a
fan's support to the support of its standard cover.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohomology import GLattice, GLatticeMap, permutation_module, trivial_lattice
from .errors import (IncompatibleModulesError, MalformedSubgroupError,
                     NotDescendableError)
from .fans import (Cone, GFan, _checked_cone, cone_contains_point,
                   is_smooth_cone, ray_orbits)
from .groups import FiniteGroup, Subgroup
from .linalg import IntMatrix, _kernel_array, _coords_in_basis


@dataclass(frozen=True)
class FanMorphism:
    """An equivariant lattice map carrying one fan into another.

    The matrix maps the cocharacter lattice of the source fan to that of
    the target; construction verifies equivariance and that every source
    cone lands inside some target cone.
    """

    source: GFan
    target: GFan
    matrix: IntMatrix

    def __post_init__(self):
        if self.source.group != self.target.group:
            raise IncompatibleModulesError(
                "source and target fans carry different groups")
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise IncompatibleModulesError(
                f"matrix shape {self.matrix.shape} does not map "
                f"rank {self.source.rank} into rank {self.target.rank}")
        for g in self.source.group.elements():
            left = self.target.action.act(g) @ self.matrix
            right = self.matrix @ self.source.action.act(g)
            if left != right:
                raise IncompatibleModulesError(
                    f"matrix is not equivariant for element {g}")
        targets = self.target.maximal_cones()
        for cone in self.source.cones:
            images = [self.matrix.apply(self.source.rays[i].generator)
                      for i in cone.rays]
            if not any(all(cone_contains_point(self.target, c, p) for p in images)
                       for c in targets):
                raise IncompatibleModulesError(
                    f"source cone {cone.rays} does not map into any target cone")

    def apply(self, point):
        return self.matrix.apply(point)


@dataclass(frozen=True)
class AffineStructure:
    """Descent data of the affine patch of a stable cone.

    res_factors lists the stabilizer of one ray per orbit of the cone's
    rays (the factors of the etale algebra the patch restricts along);
    units is the character lattice of the patch's unit torus; and
    divisor_module is the permutation lattice on the cone's rays.
    """

    res_factors: tuple
    units: GLattice
    divisor_module: GLattice


def is_pure_divisorial(fan: GFan) -> bool:
    """Whether every cone has dimension at most one."""
    return all(len(c) <= 1 for c in fan.cones)


def pure_divisorial_truncation(fan: GFan) -> GFan:
    """The subfan of cones of dimension <= 1, with the same rays and action.

    Geometrically this removes the closed strata of codimension >= 2,
    leaving the maximal open subvariety whose orbits all have dimension
    >= rank - 1.  Idempotent by construction.
    """
    fan.require_valid()
    kept = tuple(c for c in fan.cones if len(c) <= 1)
    return GFan(rank=fan.rank, rays=fan.rays, cones=kept, action=fan.action)


def _cone_ray_orbits(fan: GFan, cone: Cone):
    """Orbits of the group on the cone's own rays, ordered by least index."""
    perms = fan._cache.get("ray_perms")
    rays = set(cone.rays)
    unseen = set(rays)
    orbits = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for perm in perms:
                j = perm[i]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        if not orbit <= rays:
            raise NotDescendableError(
                f"cone {cone.rays} is not stable: orbit of ray {start} "
                f"leaves the cone")
        unseen -= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def affine_structure(fan: GFan, cone) -> AffineStructure:
    """Descent data of the affine patch attached to a stable smooth cone."""
    fan.require_valid()
    cone = _checked_cone(fan, cone)
    perms = fan._cache["ray_perms"]
    for g in fan.group.elements():
        image = {perms[g][i] for i in cone.rays}
        if image != set(cone.rays):
            raise NotDescendableError(
                f"cone {cone.rays} is not stable under element {g}")
    if not is_smooth_cone(fan, cone):
        raise ValueError(f"cone {cone.rays} is not smooth")
    orbits = _cone_ray_orbits(fan, cone)
    factors = []
    for orbit in orbits:
        start = orbit[0]
        stab = tuple(g for g in fan.group.elements() if perms[g][start] == start)
        factors.append(Subgroup(fan.group, stab))
    # units: characters vanishing on the cone, with the dual action
    pairing = np.array([fan.rays[i].generator for i in cone.rays], dtype=object)
    if len(cone) == 0:
        basis = np.array([[1 if i == j else 0 for j in range(fan.rank)]
                          for i in range(fan.rank)], dtype=object)
    else:
        basis = _kernel_array(pairing)
    dual = fan.action.dual()
    unit_rank = basis.shape[1]
    unit_action = []
    for g in fan.group.elements():
        moved = dual.act(g).to_array() @ basis if unit_rank else basis
        coords = _coords_in_basis(basis, moved)
        unit_action.append(IntMatrix.from_array(coords))
    units = GLattice(fan.group, unit_rank, tuple(unit_action))
    # divisor module: permutation lattice on the cone's rays
    index_of = {ray: pos for pos, ray in enumerate(cone.rays)}
    div_action = []
    for g in fan.group.elements():
        mat = [[0] * len(cone) for _ in range(len(cone))]
        for pos, ray in enumerate(cone.rays):
            mat[index_of[perms[g][ray]]][pos] = 1
        div_action.append(IntMatrix(mat) if len(cone) else IntMatrix.zeros(0, 0))
    divisor_module = GLattice(fan.group, len(cone), tuple(div_action))
    if units.rank + divisor_module.rank != fan.rank:
        raise AssertionError("unit rank plus divisor rank must equal the fan rank")
    return AffineStructure(res_factors=tuple(factors), units=units,
                           divisor_module=divisor_module)


def standard_fan(group: FiniteGroup, stabilizers) -> GFan:
    """The standard toric variety of a list of ray stabilizers.

    The cocharacter lattice is the direct sum of the coset permutation
    modules Z[G/H_i]; the rays are the coset basis vectors and the only
    cones are the zero cone and one ray cone each, so the result is pure
    divisorial by construction.
    """
    stabilizers = tuple(stabilizers)
    for h in stabilizers:
        if not isinstance(h, Subgroup) or h.parent != group:
            raise MalformedSubgroupError(
                "stabilizers must be subgroups of the given group")
    lattice = trivial_lattice(group, 0)
    for h in stabilizers:
        lattice = lattice.direct_sum(permutation_module(group, h))
    rank = lattice.rank
    rays = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    cones = [()] + [(i,) for i in range(rank)]
    fan = GFan(rank=rank, rays=tuple(rays), cones=tuple(cones), action=lattice)
    return fan.require_valid()


def rho_map(fan: GFan) -> FanMorphism:
    """The comparison morphism from the standard variety onto a fan.

    Builds the standard fan on the stabilizers of the fan's ray orbits
    and sends the basis vector of each coset sigma*H_i to the generator
    of the ray sigma(D_i), D_i being the least-index ray of orbit i.
    """
    fan.require_valid()
    if not is_pure_divisorial(fan):
        raise ValueError("rho is defined for pure divisorial fans only")
    orbits = ray_orbits(fan)
    source = standard_fan(fan.group, [stab for _, stab in orbits])
    columns = []
    for orbit, stab in orbits:
        base_ray = fan.rays[orbit[0]].generator
        for coset in stab.left_cosets():
            rep = coset[0]
            columns.append(fan.action.act(rep).apply(base_ray))
    matrix = IntMatrix.from_columns(columns, rows=fan.rank)
    return FanMorphism(source=source, target=fan, matrix=matrix)


def character_lattice(fan: GFan) -> GLattice:
    """The character lattice M, dual to the fan's cocharacter action."""
    return fan.action.dual()


def ray_permutation_lattice(fan: GFan) -> GLattice:
    """The permutation G-lattice on the fan's rays."""
    fan.require_valid()
    perms = fan._cache["ray_perms"]
    n = len(fan.rays)
    action = []
    for g in fan.group.elements():
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            mat[perms[g][i]][i] = 1
        action.append(IntMatrix(mat) if n else IntMatrix.zeros(0, 0))
    return GLattice(fan.group, n, tuple(action))


def divisor_map(fan: GFan) -> GLatticeMap:
    """The map M -> Z^rays sending a character to its boundary divisor.

    Row r of the matrix is the generator of ray r, so the image of m is
    the vector of pairings <m, v_r>.  The map is equivariant for the
    dual action on M and the permutation action on rays.
    """
    fan.require_valid()
    rows = [list(r.generator) for r in fan.rays]
    matrix = (IntMatrix(rows) if rows
              else IntMatrix.zeros(0, fan.rank))
    return GLatticeMap(source=character_lattice(fan),
                       target=ray_permutation_lattice(fan),
                       matrix=matrix)


@dataclass(frozen=True)
class TropicalCheckResult:
    """Outcome of the support lattice-point comparison."""

    passed: bool
    uncovered: tuple
    unexpected: tuple

    def __bool__(self):
        return self.passed


def pure_divisorial_support(fan: GFan, bound: int):
    """Support lattice points of a pure divisorial fan, enumerated ray-wise.

    The support is the union of the rays, so its integer points are the
    origin plus the multiples c*v, 1 <= c <= bound/||v||.  Agrees with
    the box scan of support_lattice_points but stays linear in bound.
    """
    fan.require_valid()
    if not is_pure_divisorial(fan):
        raise ValueError("ray-wise enumeration needs a pure divisorial fan")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    points = {tuple([0] * fan.rank)}
    for ray in fan.rays:
        top = bound // ray.max_norm
        for c in range(1, top + 1):
            points.add(tuple(c * x for x in ray.generator))
    return tuple(sorted(points))


def tropical_int_check(fan: GFan, bound: int) -> TropicalCheckResult:
    """Compare a fan's support points with the image of its standard cover.

    With (V, rho) the standard fan and comparison map of the fan, checks
    that every lattice point of the fan's support with max-norm <= bound
    is rho of a support point of V, and nothing more is hit.  The search
    bound upstairs is scaled by the largest ray coefficient so that
    every candidate preimage is inside it.
    """
    fan.require_valid()
    if not is_pure_divisorial(fan):
        raise ValueError("the support comparison needs a pure divisorial fan")
    rho = rho_map(fan)
    scale = max(fan.max_ray_norm(), 1)
    downstairs = set(pure_divisorial_support(fan, bound))
    image = set()
    for point in pure_divisorial_support(rho.source, bound * scale):
        hit = rho.apply(point)
        if all(abs(x) <= bound for x in hit):
            image.add(hit)
    uncovered = tuple(sorted(downstairs - image))
    unexpected = tuple(sorted(image - downstairs))
    return TropicalCheckResult(passed=not uncovered and not unexpected,
                               uncovered=uncovered, unexpected=unexpected)
