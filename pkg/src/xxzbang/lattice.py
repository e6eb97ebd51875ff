"""Square lattice geometry and fixed-magnetization sector bases.

Sites of an L x L lattice are indexed row-major: site = row * L + col.
Spin configurations are bit masks (bit i set = site i up), and a sector
collects all configurations with a fixed number of up spins.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

OPEN = "open"
PERIODIC = "periodic"

DEFAULT_MAX_DIM = 6000


@dataclass(frozen=True)
class LatticeSpec:
    """L x L square lattice with open or periodic boundaries."""

    side_length: int
    boundary: str = OPEN
    dedup_periodic_bonds: bool = False

    def __post_init__(self):
        if self.side_length < 1:
            raise ValueError(f"side_length must be >= 1, got {self.side_length}")
        if self.boundary not in (OPEN, PERIODIC):
            raise ValueError(f"boundary must be {OPEN!r} or {PERIODIC!r}, got {self.boundary!r}")

    @property
    def n_sites(self) -> int:
        return self.side_length * self.side_length


def build_lattice(spec: LatticeSpec) -> list[tuple[int, int]]:
    """Nearest-neighbor bond list, deterministically ordered.

    Open boundaries give 2*L*(L-1) bonds; periodic gives 2*L^2 for L >= 3.
    Periodic L <= 2 produces duplicate bonds between the same site pair and
    is rejected unless the spec enables deduplication.
    """
    L = spec.side_length
    bonds = []
    seen = set()
    for row in range(L):
        for col in range(L):
            site = row * L + col
            neighbors = []
            if spec.boundary == OPEN:
                if col + 1 < L:
                    neighbors.append(site + 1)
                if row + 1 < L:
                    neighbors.append(site + L)
            else:
                neighbors.append(row * L + (col + 1) % L)
                neighbors.append(((row + 1) % L) * L + col)
            for other in neighbors:
                if other == site:
                    # L = 1 periodic: a site "wraps" onto itself; no bond.
                    continue
                key = (min(site, other), max(site, other))
                if key in seen:
                    if not spec.dedup_periodic_bonds:
                        raise ValueError(
                            f"periodic L={L} duplicates bond {key}; enable "
                            "dedup_periodic_bonds to merge duplicates"
                        )
                    continue
                seen.add(key)
                bonds.append((site, other))
    return bonds


@dataclass(frozen=True)
class SectorBasis:
    """All M-site configurations with exactly C up spins.

    States are sorted ascending by integer value of the bit pattern, so
    ranking is a binary search and unranking an array lookup.
    """

    sites: int
    occupants: int
    states: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.states.setflags(write=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def rank(self, config: int) -> int:
        idx = int(np.searchsorted(self.states, config))
        if idx >= self.dim or self.states[idx] != config:
            raise KeyError(f"configuration {config:#x} not in sector ({self.sites} sites, "
                           f"{self.occupants} occupants)")
        return idx

    def unrank(self, index: int) -> int:
        return int(self.states[index])


def enumerate_sector(sites: int, occupants: int, max_dim: int = DEFAULT_MAX_DIM) -> SectorBasis:
    """Enumerate the fixed-magnetization sector basis.

    Raises if occupants is out of range or the sector dimension exceeds
    `max_dim` (memory guard for dense downstream matrices).
    """
    if not 0 <= occupants <= sites:
        raise ValueError(f"occupants must be in [0, {sites}], got {occupants}")
    d = comb(sites, occupants)
    if d > max_dim:
        raise ValueError(f"sector dimension {d} exceeds cap {max_dim}")
    masks = np.fromiter(
        (sum(1 << i for i in positions) for positions in combinations(range(sites), occupants)),
        dtype=np.uint64,
        count=d,
    ) if d else np.empty(0, dtype=np.uint64)
    masks.sort()
    return SectorBasis(sites=sites, occupants=occupants, states=masks)


def hop(config: int, i: int, j: int):
    """Swap bits i and j if they differ; None if equal (hop blocked)."""
    bi = (config >> i) & 1
    bj = (config >> j) & 1
    if bi == bj:
        return None
    return config ^ ((1 << i) | (1 << j))
