"""Structural checks and transforms on MMP diagrams.

Covers the three MMP hypergraph conditions, loop/girth analysis,
connectivity, incidence duality, block dropping, and the element count
of the pasted lattice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import MmpDiagram
from .errors import IndexOutOfRange, NotAdmissible, PreconditionViolated

#: Loops shorter than this cannot occur in a Greechie diagram of a lattice.
MIN_GREECHIE_GIRTH = 5


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    offenders: tuple = ()

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class LoopProfile:
    """A cyclic chain of blocks, consecutive ones sharing one junction atom.

    ``junction_atoms[i]`` is shared by ``blocks[i]`` and ``blocks[(i+1) % order]``.
    All blocks are distinct, all junctions are distinct, and non-consecutive
    blocks are disjoint.
    """

    order: int
    blocks: tuple[int, ...]
    junction_atoms: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    """Findings of :func:`validate`; nothing raises, everything is reported.

    Connectivity is informational only: it never gates admissibility (census
    conventions live in the generator instead).  ``girth`` is ``None`` for an
    acyclic diagram and 2 when some pair of blocks overlaps in two atoms.
    """

    mmp_i: CheckResult
    mmp_ii: CheckResult
    mmp_iii: CheckResult
    alphabet_contiguous: CheckResult
    pairwise_intersections: CheckResult
    girth: int | None
    connected: bool
    greechie_admissible: bool


def _pairwise_ok(d: MmpDiagram) -> CheckResult:
    bad = []
    sets = [set(b) for b in d.blocks]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) >= 2:
                bad.append((i, j))
    return CheckResult(not bad, tuple(bad))


def validate(d: MmpDiagram) -> ValidationReport:
    """Check the MMP conditions plus the Greechie loop-order requirement.

    (i) every atom lies in some block, (ii) every block has at least three
    atoms, (iii) blocks meeting in n-2 atoms have at least n atoms.  A
    diagram is Greechie-admissible when all three hold, any two blocks
    share at most one atom, and every loop has order at least five.
    """
    used = d.used_atoms()
    missing = tuple(sorted(set(range(d.atom_count)) - used))
    mmp_i = CheckResult(not missing, missing)

    small = tuple(i for i, b in enumerate(d.blocks) if len(b) < 3)
    mmp_ii = CheckResult(not small, small)

    bad_iii = []
    for i in range(d.block_count):
        for j in range(i + 1, d.block_count):
            t = len(set(d.blocks[i]) & set(d.blocks[j]))
            if t and min(len(d.blocks[i]), len(d.blocks[j])) < t + 2:
                bad_iii.append((i, j))
    mmp_iii = CheckResult(not bad_iii, tuple(bad_iii))

    if used:
        gaps = tuple(sorted(set(range(max(used) + 1)) - used))
    else:
        gaps = ()
    contiguous = CheckResult(not gaps, gaps)

    pairwise = _pairwise_ok(d)
    g = girth(d) if pairwise.passed else 2
    connected = is_connected(d)
    admissible = bool(
        mmp_i and mmp_ii and mmp_iii and pairwise and (g is None or g >= MIN_GREECHIE_GIRTH)
    )
    return ValidationReport(
        mmp_i=mmp_i,
        mmp_ii=mmp_ii,
        mmp_iii=mmp_iii,
        alphabet_contiguous=contiguous,
        pairwise_intersections=pairwise,
        girth=g,
        connected=connected,
        greechie_admissible=admissible,
    )


def _require_linear(d: MmpDiagram) -> None:
    check = _pairwise_ok(d)
    if not check.passed:
        raise PreconditionViolated(f"blocks share two or more atoms: {check.offenders[:3]}")


def _incidence_adjacency(d: MmpDiagram) -> list[list[int]]:
    """Adjacency of the bipartite incidence graph: atoms 0..n-1, blocks n..n+m-1."""
    n = d.atom_count
    adj: list[list[int]] = [[] for _ in range(n + d.block_count)]
    for i, b in enumerate(d.blocks):
        for a in b:
            adj[a].append(n + i)
            adj[n + i].append(a)
    return adj


def girth(d: MmpDiagram) -> int | None:
    """Minimal loop order, or ``None`` if the diagram is acyclic.

    For a linear hypergraph a loop of order k is exactly a 2k-cycle of the
    atom-block incidence graph, so the girth is half the incidence girth.
    Requires pairwise block intersections of at most one atom.
    """
    _require_linear(d)
    cycle = _shortest_incidence_cycle(d)
    if cycle is None:
        return None
    return len(cycle) // 2


def min_loop(d: MmpDiagram) -> LoopProfile | None:
    """A witness loop of minimal order, or ``None`` if acyclic."""
    _require_linear(d)
    cycle = _shortest_incidence_cycle(d)
    if cycle is None:
        return None
    return _cycle_to_profile(d, cycle)


def _cycle_to_profile(d: MmpDiagram, cycle: list[int]) -> LoopProfile:
    n = d.atom_count
    # Rotate so the cycle starts at a block vertex, then read off
    # alternating block, junction, block, junction, ...
    start = next(i for i, v in enumerate(cycle) if v >= n)
    cyc = cycle[start:] + cycle[:start]
    blocks = tuple(v - n for v in cyc[0::2])
    junctions = tuple(cyc[1::2])
    return LoopProfile(order=len(blocks), blocks=blocks, junction_atoms=junctions)


def _shortest_incidence_cycle(d: MmpDiagram) -> list[int] | None:
    """Shortest cycle of the incidence graph as a vertex list, or None."""
    adj = _incidence_adjacency(d)
    size = len(adj)
    best: list[int] | None = None
    for root in range(size):
        if best is not None and len(best) <= 6:
            break  # 6 is the minimum possible (loops of order >= 3)
        dist = [-1] * size
        parent = [-1] * size
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= len(best):
                break
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    # Found a cycle through root of length dist[u]+dist[w]+1;
                    # only even lengths arise (bipartite), and only cycles
                    # actually passing through the root are recovered cleanly.
                    path_u = _path_to_root(parent, u)
                    path_w = _path_to_root(parent, w)
                    set_u = set(path_u)
                    common = next(x for x in path_w if x in set_u)
                    iu = path_u.index(common)
                    iw = path_w.index(common)
                    cycle = path_u[:iu] + [common] + path_w[:iw][::-1]
                    if len(cycle) >= 6 and (best is None or len(cycle) < len(best)):
                        best = cycle
        # dist/parent discarded per root
    return best


def _path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def max_loop(d: MmpDiagram) -> LoopProfile | None:
    """A witness loop of maximal order, or ``None`` if acyclic.

    Branch-and-bound over simple block chains.  A loop of order k uses 2k
    distinct atoms, which caps the search at atom_count // 2 and lets the
    first full-length loop terminate it on structured inputs.
    """
    _require_linear(d)
    if girth(d) is None:
        return None
    n, m = d.atom_count, d.block_count
    block_masks = [0] * m
    for i, b in enumerate(d.blocks):
        for a in b:
            block_masks[i] |= 1 << a
    neighbors: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j:
                inter = block_masks[i] & block_masks[j]
                if inter:
                    neighbors[i].append((j, inter.bit_length() - 1))
    hard_cap = min(m, n // 2)

    best: list[LoopProfile | None] = [None]

    def consider(blocks: list[int], junctions: list[int]):
        prof = LoopProfile(order=len(blocks), blocks=tuple(blocks), junction_atoms=tuple(junctions))
        if best[0] is None or prof.order > best[0].order:
            best[0] = prof

    def extend(path: list[int], junctions: list[int], used_mask: int, start: int):
        if best[0] is not None and best[0].order >= hard_cap:
            return
        k = len(path)
        atoms_left = n - bin(used_mask).count("1")
        if best[0] is not None and k + (atoms_left + 1) // 2 <= best[0].order:
            return
        last = path[-1]
        first_mask = block_masks[path[0]]
        first_junction = junctions[0] if junctions else -1
        last_junction = junctions[-1] if junctions else -1
        for j, x in neighbors[last]:
            if j <= start or x == last_junction:
                continue
            bm = block_masks[j]
            extra = (bm & used_mask) & ~(1 << x)
            if extra == 0:
                extend(path + [j], junctions + [x], used_mask | bm, start)
            elif k + 1 >= 3 and extra & (extra - 1) == 0 and extra & first_mask == extra:
                # j touches exactly the last block (at x) and the first block
                # (at one further atom y): it closes a loop of order k+1.
                y = extra.bit_length() - 1
                if y != first_junction:
                    consider(path + [j], junctions + [x, y])

    for s in range(m):
        if best[0] is not None and best[0].order >= hard_cap:
            break
        for j, x in neighbors[s]:
            if j > s:
                extend([s, j], [x], block_masks[s] | block_masks[j], s)
    return best[0]


def is_connected(d: MmpDiagram) -> bool:
    """True iff the atom-block incidence graph has one component."""
    total = d.atom_count + d.block_count
    if total == 0:
        return True
    adj = _incidence_adjacency(d)
    seen = [False] * total
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == total


def dual(d: MmpDiagram) -> MmpDiagram:
    """Incidence dual: atoms and blocks exchange roles.

    The result has one atom per original block and, for each original atom,
    a block listing the original blocks containing it.  It may well fail
    validation (that is legal); taking the dual twice returns an isomorph of
    the input when blocks and atom neighborhoods are duplicate-free.
    """
    blocks = tuple(tuple(inc) for inc in d.incident_blocks())
    return MmpDiagram(d.block_count, blocks)


def drop_blocks(d: MmpDiagram, indices: set[int]) -> tuple[MmpDiagram, tuple[int | None, ...]]:
    """Remove the given blocks and re-compact atoms to a dense range.

    Returns the reduced diagram and the atom renumbering map: position a
    holds the new index of old atom a, or ``None`` if the atom vanished.
    """
    for i in indices:
        if not 0 <= i < d.block_count:
            raise IndexOutOfRange(f"block index {i} out of range")
    kept = [b for i, b in enumerate(d.blocks) if i not in indices]
    return _recompact(d.atom_count, kept)


def drop_atom_from_block(
    d: MmpDiagram, block_index: int, atom: int
) -> tuple[MmpDiagram, tuple[int | None, ...]]:
    """Remove one atom from one block; same recompaction contract as drop_blocks."""
    if not 0 <= block_index < d.block_count:
        raise IndexOutOfRange(f"block index {block_index} out of range")
    if atom not in d.blocks[block_index]:
        raise IndexOutOfRange(f"atom {atom} not in block {block_index}")
    blocks = list(d.blocks)
    blocks[block_index] = tuple(a for a in blocks[block_index] if a != atom)
    return _recompact(d.atom_count, blocks)


def _recompact(
    atom_count: int, blocks: list[tuple[int, ...]]
) -> tuple[MmpDiagram, tuple[int | None, ...]]:
    used = sorted({a for b in blocks for a in b})
    remap = {a: i for i, a in enumerate(used)}
    mapping = tuple(remap.get(a) for a in range(atom_count))
    new_blocks = tuple(tuple(remap[a] for a in b) for b in blocks)
    return MmpDiagram(len(used), new_blocks), mapping


def element_count(d: MmpDiagram) -> int:
    """Number of elements of the pasted orthomodular lattice.

    0 and 1, an atom and a coatom per vertex, plus for every block of size
    k >= 4 its 2^k - 2 - 2k interior subsets (proper subsets of size 2 to
    k-2; the (k-1)-subsets coincide with coatoms).
    """
    if not validate(d).greechie_admissible:
        raise NotAdmissible("element_count requires a Greechie-admissible diagram")
    total = 2 + 2 * d.atom_count
    for b in d.blocks:
        k = len(b)
        if k >= 4:
            total += (1 << k) - 2 - 2 * k
    return total
