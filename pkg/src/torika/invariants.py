"""Top-level invariants of an equivariant toric variety.

The divisor class group is the cokernel of the divisor character map;
the Brauer kernel is the kernel of the map this induces on second group
cohomology, computed relative to the splitting group carried by the
fan.  Reports aggregate both together with the combinatorial facts of
the fan, computing the truncation-dependent fields on the pure
divisorial truncation when needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import kernel_of_h2_map
from .errors import StageError, TorikaError
from .fans import GFan, is_smooth, orbit_count, ray_orbits
from .linalg import FinAbGroup, cokernel
from .structure import (divisor_map, is_pure_divisorial,
                        pure_divisorial_truncation, tropical_int_check)


def class_group(fan: GFan) -> FinAbGroup:
    """The divisor class group of the variety after base change.

    For a smooth fan this is the Picard group: the cokernel of the map
    sending a character to its divisor, presented by the matrix whose
    rows are the ray generators.
    """
    fan.require_valid()
    if not is_smooth(fan):
        raise ValueError("the class group computation expects a smooth fan")
    return cokernel(divisor_map(fan).matrix)


def brauer_kernel(fan: GFan) -> FinAbGroup:
    """The algebraic Brauer classes of the variety, at the fan's group level.

    Computed as the kernel of the map induced on H^2 by the divisor
    character map M -> Z^rays.  With no rays at all this is the whole of
    H^2(G, M), the Brauer group of the bare torus at this level.
    """
    fan.require_valid()
    if not is_pure_divisorial(fan):
        raise ValueError("the Brauer kernel expects a pure divisorial fan")
    if not is_smooth(fan):
        raise ValueError("the Brauer kernel expects a smooth fan")
    return kernel_of_h2_map(divisor_map(fan))


@dataclass(frozen=True)
class InvariantReport:
    """All computed invariants of one fan, bundled.

    The class group, Brauer kernel and tropical check are computed on
    the pure divisorial truncation whenever the fan has larger cones;
    orbit data always refers to the fan as given.  splitting_group
    records the group the cohomology was taken over: the Brauer kernel
    is relative to that level.
    """

    smooth: bool
    pure_divisorial: bool
    orbit_count: int
    ray_orbit_summary: tuple
    class_group: FinAbGroup
    brauer_kernel: FinAbGroup
    tropical_check: bool
    splitting_group: str


def _stage(name, thunk):
    try:
        return thunk()
    except TorikaError as exc:
        raise StageError(name, exc) from exc


def full_report(fan: GFan, bound: int = 5) -> InvariantReport:
    """Assemble every invariant of the fan into one report."""
    fan.require_valid()
    smooth = _stage("smoothness", lambda: is_smooth(fan))
    pure = is_pure_divisorial(fan)
    orbits = _stage("orbit count", lambda: orbit_count(fan))
    summary = tuple(
        (len(orbit), stab.order)
        for orbit, stab in _stage("ray orbits", lambda: ray_orbits(fan))
    )
    working = fan if pure else _stage(
        "truncation", lambda: pure_divisorial_truncation(fan))
    cls = _stage("class group", lambda: class_group(working))
    brauer = _stage("Brauer kernel", lambda: brauer_kernel(working))
    tropical = _stage("tropical check",
                      lambda: tropical_int_check(working, bound).passed)
    return InvariantReport(
        smooth=smooth,
        pure_divisorial=pure,
        orbit_count=orbits,
        ray_orbit_summary=summary,
        class_group=cls,
        brauer_kernel=brauer,
        tropical_check=tropical,
        splitting_group=fan.group.name or f"order-{fan.group.order}",
    )
