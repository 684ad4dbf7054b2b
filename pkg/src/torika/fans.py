"""Rational fans with a finite group action on the ambient lattice.

A fan is stored combinatorially: primitive ray generators plus the list
of cones as sets of ray indices.  All geometry (memberships, cone
intersections) is decided exactly over the rationals, never with
floating point.  Validation returns a report listing every violated
condition instead of stopping at the first one, so malformed input can
be diagnosed in full.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .cohomology import GLattice, trivial_lattice
from .errors import FanValidationError, NotInFanError
from .groups import FiniteGroup, Subgroup
from .linalg import IntMatrix, _content, _kernel_array, _rank
from .groups import trivial_group

import numpy as np


@dataclass(frozen=True)
class Ray(object):
    """A one-dimensional cone, named by its primitive integer generator."""

    generator: tuple

    def __post_init__(self):
        object.__setattr__(self, "generator", tuple(int(x) for x in self.generator))

    @property
    def max_norm(self):
        return max((abs(x) for x in self.generator), default=0)

    def __repr__(self):
        return f"Ray{self.generator}"


@dataclass(frozen=True)
class Cone:
    """A cone of the fan, as the sorted tuple of its ray indices.

    The empty tuple is the zero cone."""

    rays: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(sorted(set(int(i) for i in self.rays))))

    def __len__(self):
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def __contains__(self, i):
        return i in self.rays

    @property
    def is_zero(self):
        return not self.rays

    def __repr__(self):
        return f"Cone{self.rays}"


def _as_cone(c):
    return c if isinstance(c, Cone) else Cone(tuple(c))


def _as_ray(r):
    return r if isinstance(r, Ray) else Ray(tuple(r))


@dataclass(frozen=True)
class GFan:
    """A fan together with a group acting on the ambient lattice.

    Construction only normalizes the data; every semantic requirement
    (primitivity, face closure, cone intersections, equivariance) is
    checked by validate_fan, which reports all problems at once.
    """

    rank: int
    rays: tuple
    cones: tuple
    action: GLattice
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(_as_ray(r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(_as_cone(c) for c in self.cones))

    @classmethod
    def from_max_cones(cls, rank, rays, max_cones, action=None):
        """Build a fan from maximal cones, materializing all faces."""
        if action is None:
            action = trivial_lattice(trivial_group(), rank)
        closed = {()}
        for cone in max_cones:
            idx = tuple(sorted(set(cone)))
            for size in range(1, len(idx) + 1):
                for sub in combinations(idx, size):
                    closed.add(sub)
        cones = tuple(Cone(c) for c in sorted(closed, key=lambda c: (len(c), c)))
        return cls(rank=rank, rays=tuple(_as_ray(r) for r in rays),
                   cones=cones, action=action)

    @property
    def group(self) -> FiniteGroup:
        return self.action.group

    def ray_vectors(self):
        return [r.generator for r in self.rays]

    def cone_set(self):
        return {c.rays for c in self.cones}

    def has_cone(self, cone) -> bool:
        return _as_cone(cone).rays in self.cone_set()

    def maximal_cones(self):
        sets = [set(c.rays) for c in self.cones]
        out = []
        for i, c in enumerate(self.cones):
            if not any(i != j and set(c.rays) < s for j, s in enumerate(sets)):
                out.append(c)
        return tuple(out)

    def max_ray_norm(self):
        return max((r.max_norm for r in self.rays), default=0)

    def require_valid(self):
        report = validate_fan(self)
        if not report.ok:
            raise FanValidationError(report.problems)
        return self

    def __hash__(self):
        return hash((self.rank, self.rays, self.cones, self.action.group.table))


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(self.problems)


def _solve_nonneg_rational(generators, point):
    """Coefficients c >= 0 with sum c_i * generators[i] == point, or None.

    The generators must be linearly independent, so the coefficients are
    unique; everything is solved exactly over the rationals.
    """
    k = len(generators)
    if k == 0:
        return () if not any(point) else None
    n = len(point)
    rows = [[Fraction(generators[j][i]) for j in range(k)] + [Fraction(point[i])]
            for i in range(n)]
    pivot_row = {}
    top = 0
    for col in range(k):
        src = next((r for r in range(top, n) if rows[r][col]), None)
        if src is None:
            return None  # dependent generators; callers prevalidate
        rows[top], rows[src] = rows[src], rows[top]
        inv = 1 / rows[top][col]
        rows[top] = [x * inv for x in rows[top]]
        for r in range(n):
            if r != top and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[top])]
        pivot_row[col] = top
        top += 1
    for r in range(top, n):
        if rows[r][k]:
            return None  # point outside the span
    coeffs = tuple(rows[pivot_row[c]][k] for c in range(k))
    if any(c < 0 for c in coeffs):
        return None
    return coeffs


def cone_contains_point(fan: GFan, cone, point) -> bool:
    """Exact membership of an integer point in a cone of the fan."""
    cone = _as_cone(cone)
    gens = [fan.rays[i].generator for i in cone.rays]
    return _solve_nonneg_rational(gens, tuple(point)) is not None


def _extreme_directions(b):
    """Extreme rays of {t : b @ t >= 0} for a full-column-rank integer b.

    Brute force over (q-1)-subsets of the constraints; fine for the tiny
    systems produced by pairwise cone checks.
    """
    m, q = b.shape
    if q == 0:
        return []
    seen = set()
    out = []
    for subset in combinations(range(m), q - 1):
        sub = b[list(subset), :] if subset else np.empty((0, q), dtype=object)
        null = _kernel_array(sub)
        if null.shape[1] != 1:
            continue
        d = [int(x) for x in null[:, 0]]
        g = _content(d)
        if g:
            d = [x // g for x in d]
        for cand in (d, [-x for x in d]):
            img = [sum(b[i, j] * cand[j] for j in range(q)) for i in range(m)]
            if all(x >= 0 for x in img) and any(img):
                key = tuple(cand)
                if key not in seen:
                    seen.add(key)
                    out.append((cand, img))
    return out


def _meet_in_common_face(fan: GFan, c1: Cone, c2: Cone) -> bool:
    """Whether two simplicial cones intersect exactly in their common face."""
    s1, s2 = set(c1.rays), set(c2.rays)
    if s1 <= s2 or s2 <= s1:
        return True
    common = sorted(s1 & s2)
    v1 = [fan.rays[i].generator for i in c1.rays]
    v2 = [fan.rays[i].generator for i in c2.rays]
    k1, k2 = len(v1), len(v2)
    system = np.empty((fan.rank, k1 + k2), dtype=object)
    for j, vec in enumerate(v1):
        for i in range(fan.rank):
            system[i, j] = vec[i]
    for j, vec in enumerate(v2):
        for i in range(fan.rank):
            system[i, k1 + j] = -vec[i]
    basis = _kernel_array(system)
    common_gens = [fan.rays[i].generator for i in common]
    for _, img in _extreme_directions(basis):
        coeffs = img[:k1]
        point = tuple(
            sum(coeffs[j] * v1[j][i] for j in range(k1)) for i in range(fan.rank)
        )
        if _solve_nonneg_rational(common_gens, point) is None:
            return False
    return True


def _ray_permutations(fan: GFan):
    """For each group element, the permutation it induces on ray indices.

    Returns (perms, problems); perms is None when some ray leaves the
    ray set.
    """
    lookup = {r.generator: i for i, r in enumerate(fan.rays)}
    perms = []
    problems = []
    for g in fan.group.elements():
        mat = fan.action.act(g)
        perm = []
        for i, ray in enumerate(fan.rays):
            image = mat.apply(ray.generator)
            target = lookup.get(image)
            if target is None:
                problems.append(
                    f"element {g} sends ray {i} to {image}, which is not a ray"
                )
            perm.append(target)
        perms.append(tuple(perm))
    if problems:
        return None, problems
    return perms, []


def validate_fan(fan: GFan) -> ValidationReport:
    """Check every fan requirement and report all violations at once."""
    cached = fan._cache.get("report")
    if cached is not None:
        return cached
    problems = []
    if fan.rank < 0:
        problems.append("negative lattice rank")
    if fan.action.rank != fan.rank:
        problems.append(
            f"action has rank {fan.action.rank} but the fan has rank {fan.rank}"
        )
    seen_rays = {}
    for i, ray in enumerate(fan.rays):
        vec = ray.generator
        if len(vec) != fan.rank:
            problems.append(f"ray {i} has length {len(vec)}, expected {fan.rank}")
            continue
        if not any(vec):
            problems.append(f"ray {i} is zero")
            continue
        if _content(vec) != 1:
            problems.append(f"ray {i} is not primitive: {vec}")
        if vec in seen_rays:
            problems.append(f"rays {seen_rays[vec]} and {i} coincide")
        else:
            seen_rays[vec] = i
    cone_sets = set()
    for c in fan.cones:
        if c.rays in cone_sets:
            problems.append(f"cone {c.rays} is listed twice")
        cone_sets.add(c.rays)
        for i in c.rays:
            if not 0 <= i < len(fan.rays):
                problems.append(f"cone {c.rays} uses ray index {i}, which does not exist")
    if () not in cone_sets:
        problems.append("the zero cone is missing")
    for c in fan.cones:
        if len(c) >= 1 and all(0 <= i < len(fan.rays) for i in c.rays):
            for facet in combinations(c.rays, len(c) - 1):
                if facet not in cone_sets:
                    problems.append(f"cone {c.rays} is missing its face {facet}")
    for i in range(len(fan.rays)):
        if (i,) not in cone_sets:
            problems.append(f"ray {i} does not appear in any cone")
    if problems:
        report = ValidationReport(tuple(problems))
        fan._cache["report"] = report
        return report
    # geometry: only meaningful once the combinatorial layer is clean
    independent = {}
    for c in fan.cones:
        if len(c) == 0:
            independent[c.rays] = True
            continue
        gens = np.array([fan.rays[i].generator for i in c.rays], dtype=object)
        independent[c.rays] = _rank(gens) == len(c)
        if not independent[c.rays]:
            problems.append(f"cone {c.rays} has linearly dependent generators")
    good = [c for c in fan.cones if independent[c.rays] and len(c) >= 1]
    for a in range(len(good)):
        for b in range(a + 1, len(good)):
            if not _meet_in_common_face(fan, good[a], good[b]):
                problems.append(
                    f"cones {good[a].rays} and {good[b].rays} do not intersect "
                    f"in their common face"
                )
    perms, perm_problems = _ray_permutations(fan)
    problems.extend(perm_problems)
    if perms is not None:
        for g in fan.group.elements():
            perm = perms[g]
            for c in fan.cones:
                image = tuple(sorted(perm[i] for i in c.rays))
                if image not in cone_sets:
                    problems.append(
                        f"element {g} sends cone {c.rays} to {image}, which is not a cone"
                    )
        fan._cache["ray_perms"] = perms
    report = ValidationReport(tuple(problems))
    fan._cache["report"] = report
    return report


def _checked_cone(fan: GFan, cone) -> Cone:
    cone = _as_cone(cone)
    if not fan.has_cone(cone):
        raise NotInFanError(f"cone {cone.rays} is not in the fan")
    return cone


def is_smooth_cone(fan: GFan, cone) -> bool:
    """Whether the cone's generators extend to a basis of the lattice."""
    fan.require_valid()
    cone = _checked_cone(fan, cone)
    if cone.is_zero:
        return True
    from .linalg import _smith

    gens = np.array([fan.rays[i].generator for i in cone.rays], dtype=object)
    s, _, _ = _smith(gens)
    diag = [s[i, i] for i in range(min(gens.shape))]
    return len([d for d in diag if d]) == len(cone) and all(
        d in (0, 1) for d in diag
    )


def is_smooth(fan: GFan) -> bool:
    fan.require_valid()
    return all(is_smooth_cone(fan, c) for c in fan.maximal_cones())


def orbit_count(fan: GFan) -> int:
    """Number of torus orbits after base change: one per cone."""
    fan.require_valid()
    return len(fan.cones)


def orbit_dimension(fan: GFan, cone) -> int:
    """Dimension of the torus orbit attached to a cone."""
    fan.require_valid()
    cone = _checked_cone(fan, cone)
    return fan.rank - len(cone)


def ray_orbits(fan: GFan):
    """Orbits of the group on rays, each with the stabilizer of its first ray.

    Returns a tuple of (orbit, stabilizer) pairs; orbits are sorted
    tuples of ray indices, ordered by their smallest member.
    """
    fan.require_valid()
    perms = fan._cache.get("ray_perms")
    if perms is None:
        perms, _ = _ray_permutations(fan)
        fan._cache["ray_perms"] = perms
    unseen = set(range(len(fan.rays)))
    out = []
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
        unseen -= orbit
        stab = [g for g in fan.group.elements() if perms[g][start] == start]
        out.append((tuple(sorted(orbit)), Subgroup(fan.group, tuple(stab))))
    return tuple(out)


def support_lattice_points(fan: GFan, bound: int):
    """All integer points of the fan's support with max-norm at most bound.

    Membership is decided cone by cone with exact rational arithmetic.
    """
    fan.require_valid()
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    solvers = []
    for cone in fan.maximal_cones():
        gens = [fan.rays[i].generator for i in cone.rays]
        solvers.append(gens)
    points = []
    for point in product(range(-bound, bound + 1), repeat=fan.rank):
        for gens in solvers:
            if _solve_nonneg_rational(gens, point) is not None:
                points.append(point)
                break
    return tuple(sorted(points))


def primitive_vector(vec):
    """Divide an integer vector by the gcd of its entries."""
    vec = tuple(int(x) for x in vec)
    g = _content(vec)
    if g <= 1:
        return vec
    return tuple(x // g for x in vec)
