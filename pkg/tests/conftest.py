"""Shared test helpers: fixture loading and random generators.

The random constructions here are the independent source of test
inputs: unimodular matrices as products of shears, cyclic-group
lattices assembled from blocks of the right multiplicative order, and
equivariant maps obtained by averaging an arbitrary matrix over the
group.
"""

import random
from pathlib import Path

from torika.cohomology import GLattice, GLatticeMap
from torika.datum import load_datum
from torika.fans import GFan
from torika.groups import FiniteGroup
from torika.linalg import IntMatrix

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_NAMES = [
    "nfamily_n0", "nfamily_n1", "nfamily_n2", "nfamily_n3",
    "nfamily_n4", "nfamily_n5", "p1", "p2", "a2", "a2_minus_origin",
    "sign_rank1", "brauer_rank3", "standard_c2", "standard_s3",
]

PURE_DIVISORIAL_FIXTURES = [
    "nfamily_n0", "nfamily_n1", "nfamily_n2", "nfamily_n3",
    "nfamily_n4", "nfamily_n5", "p1", "a2_minus_origin",
    "sign_rank1", "brauer_rank3", "standard_c2", "standard_s3",
]

TRIVIAL_GROUP_FIXTURES = [
    "nfamily_n0", "nfamily_n1", "nfamily_n2", "nfamily_n3",
    "nfamily_n4", "nfamily_n5", "p1", "p2", "a2", "a2_minus_origin",
]


def fixture_path(name: str) -> str:
    return str(FIXTURE_DIR / f"{name}.json")


def load_fixture(name: str):
    return load_datum(fixture_path(name))


def rand_unimodular(rng: random.Random, n: int, steps: int = 6) -> IntMatrix:
    """A random determinant +-1 matrix, as a product of shears and swaps."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    if rng.random() < 0.5 and n:
        for k in range(n):
            m[0][k] = -m[0][k]
    return IntMatrix(m)


def _conjugate(matrix: IntMatrix, u: IntMatrix, u_inv: IntMatrix) -> IntMatrix:
    return u @ matrix @ u_inv


_ORDER_BLOCKS = {
    1: [[[1]]],
    2: [[[-1]]],
    3: [[[0, -1], [1, -1]]],
    4: [[[0, -1], [1, 0]]],
    5: [[[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]],
    6: [[[0, -1], [1, 1]]],
}


def cyclic_lattice(rng: random.Random, group: FiniteGroup, rank: int) -> GLattice:
    """A random rank-`rank` lattice for a cyclic group.

    The generator acts by a block-diagonal matrix whose blocks have
    multiplicative order dividing the group order, conjugated by a
    random unimodular matrix so entries are not artificially sparse.
    """
    n = group.order
    allowed = [k for k in _ORDER_BLOCKS if n % k == 0]
    blocks = []
    size = 0
    while size < rank:
        choices = [k for k in allowed
                   if len(_ORDER_BLOCKS[k][0]) <= rank - size]
        k = rng.choice(choices)
        blocks.append(rng.choice(_ORDER_BLOCKS[k]))
        size += len(blocks[-1])
    gen = [[0] * rank for _ in range(rank)]
    at = 0
    for block in blocks:
        b = len(block)
        for i in range(b):
            for j in range(b):
                gen[at + i][at + j] = block[i][j]
        at += b
    u = rand_unimodular(rng, rank)
    from torika.linalg import _unimodular_inverse
    u_inv = IntMatrix.from_array(_unimodular_inverse(u.to_array()))
    gen_m = _conjugate(IntMatrix(gen), u, u_inv)
    action = [IntMatrix.identity(rank)]
    for _ in range(1, n):
        action.append(gen_m @ action[-1])
    return GLattice(group, rank, tuple(action))


def random_equivariant_map(rng: random.Random, source: GLattice,
                           target: GLattice) -> GLatticeMap:
    """An equivariant map obtained by averaging a random matrix."""
    group = source.group
    raw = [[rng.randint(-2, 2) for _ in range(source.rank)]
           for _ in range(target.rank)]
    total = IntMatrix.zeros(target.rank, source.rank)
    for g in group.elements():
        total = total + (target.act(g) @ IntMatrix(raw)
                         @ source.act(group.inv(g)))
    return GLatticeMap(source=source, target=target, matrix=total)


_P2_RAYS = [(1, 0), (0, 1), (-1, -1)]
_P2_CONES = [(0, 1), (1, 2), (0, 2)]
_HEX_RAYS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
_HEX_CONES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
_P1A1_RAYS = [(1, 0), (-1, 0), (0, 1)]
_P1A1_CONES = [(0, 2), (1, 2)]


def random_smooth_fan(rng: random.Random) -> GFan:
    """A random smooth fan: a known smooth model in a random basis."""
    from torika.fans import primitive_vector

    kind = rng.randrange(4)
    if kind == 0:
        rank = rng.randint(1, 3)
        k = rng.randint(1, rank)
        rays = [tuple(1 if i == j else 0 for i in range(rank))
                for j in range(rank)][:k]
        cones = [tuple(range(k))]
    elif kind == 1:
        rank, rays, cones = 2, _P2_RAYS, _P2_CONES
    elif kind == 2:
        rank, rays, cones = 2, _HEX_RAYS, _HEX_CONES
    else:
        rank, rays, cones = 2, _P1A1_RAYS, _P1A1_CONES
    u = rand_unimodular(rng, rank)
    moved = [primitive_vector(u.apply(r)) for r in rays]
    return GFan.from_max_cones(rank, moved, cones).require_valid()


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
