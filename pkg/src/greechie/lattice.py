"""The pasted orthomodular lattice of an admissible diagram.

Elements are 0, 1, one atom and one coatom per vertex, and for every
block of size >= 4 its interior subsets (size 2 to size-2).  Subsets of
size |block|-1 are identified with the coatom of the excluded atom.
Order is common-block subset containment together with the comparisons
forced by orthocomplementation; only order, ortho, and block-local
Boolean structure are materialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .diagram import ALPHABET, MmpDiagram
from .errors import ForeignElement, NotAdmissible, NotAState
from .structure import validate

ZERO = "zero"
ONE = "one"
ATOM = "atom"
COATOM = "coatom"
MID = "mid"


@dataclass(frozen=True)
class OmlElement:
    kind: str
    atom: int | None = None
    block: int | None = None
    subset: tuple[int, ...] | None = None

    def label(self) -> str:
        """Readable name: 0, 1, atom char, primed char, or subset string."""
        if self.kind == ZERO:
            return "0"
        if self.kind == ONE:
            return "1"
        if self.kind == ATOM:
            return _atom_name(self.atom)
        if self.kind == COATOM:
            return _atom_name(self.atom) + "'"
        return "".join(_atom_name(a) for a in self.subset)

    def __repr__(self) -> str:
        return f"<{self.label()}>"


def _atom_name(a: int) -> str:
    return ALPHABET[a] if a < len(ALPHABET) else f"[{a}]"


class OmlPoset:
    """Order + orthocomplement of the pasted lattice of ``source``.

    Elements are held in a fixed order (zero, one, atoms, coatoms, block
    interiors); ``leq`` and ``ortho`` answer from precomputed tables.
    """

    def __init__(self, source: MmpDiagram):
        report = validate(source)
        if not report.greechie_admissible:
            raise NotAdmissible("build_oml requires a Greechie-admissible diagram")
        self.source = source
        self.elements: list[OmlElement] = [OmlElement(ZERO), OmlElement(ONE)]
        self.elements += [OmlElement(ATOM, atom=a) for a in range(source.atom_count)]
        self.elements += [OmlElement(COATOM, atom=a) for a in range(source.atom_count)]
        for bi, block in enumerate(source.blocks):
            k = len(block)
            if k >= 4:
                for size in range(2, k - 1):
                    for sub in combinations(block, size):
                        self.elements.append(OmlElement(MID, block=bi, subset=sub))
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._ortho = [self._orthocomplement(e) for e in self.elements]
        n = len(self.elements)
        self._up = [0] * n  # bitmask of {j : elements[i] <= elements[j]}
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                if self._leq_rule(x, y):
                    self._up[i] |= 1 << j
        # Atoms of one block are orthogonal exactly when they share a block.
        self._share_block = [0] * source.atom_count
        for block in source.blocks:
            for a in block:
                for b in block:
                    if a != b:
                        self._share_block[a] |= 1 << b

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: OmlElement) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ForeignElement(f"{x!r} is not an element of this poset") from None

    def leq(self, x: OmlElement, y: OmlElement) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def ortho(self, x: OmlElement) -> OmlElement:
        return self._ortho[self.index(x)]

    def up_mask(self, x: OmlElement) -> int:
        return self._up[self.index(x)]

    def _orthocomplement(self, x: OmlElement) -> OmlElement:
        if x.kind == ZERO:
            return OmlElement(ONE)
        if x.kind == ONE:
            return OmlElement(ZERO)
        if x.kind == ATOM:
            return OmlElement(COATOM, atom=x.atom)
        if x.kind == COATOM:
            return OmlElement(ATOM, atom=x.atom)
        block = self.source.blocks[x.block]
        rest = tuple(a for a in block if a not in x.subset)
        return OmlElement(MID, block=x.block, subset=rest)

    def _leq_rule(self, x: OmlElement, y: OmlElement) -> bool:
        if x.kind == ZERO or y.kind == ONE or x == y:
            return True
        if y.kind == ZERO or x.kind == ONE:
            return False
        if x.kind == ATOM:
            if y.kind == ATOM:
                return False
            if y.kind == COATOM:
                if x.atom == y.atom:
                    return False
                return any(
                    x.atom in block and y.atom in block for block in self.source.blocks
                )
            return x.atom in y.subset  # y is MID
        if x.kind == COATOM:
            return False  # coatoms lie below 1 only
        # x is MID
        if y.kind == ATOM:
            return False
        if y.kind == COATOM:
            block = self.source.blocks[x.block]
            return y.atom in block and y.atom not in x.subset
        return x.block == y.block and set(x.subset) <= set(y.subset)

    # -- state extension ----------------------------------------------------

    def extend_state(self, values: Iterable[Fraction]) -> dict[OmlElement, Fraction]:
        """Extend atom values to every lattice element.

        Requires a genuine state: entries in [0,1] and unit block sums.
        The extension satisfies m(0)=0, m(1)=1, m(a')=1-m(a), and block
        interiors sum their members.
        """
        vals = [Fraction(v) for v in values]
        self._check_state(vals)
        out: dict[OmlElement, Fraction] = {}
        for e in self.elements:
            if e.kind == ZERO:
                out[e] = Fraction(0)
            elif e.kind == ONE:
                out[e] = Fraction(1)
            elif e.kind == ATOM:
                out[e] = vals[e.atom]
            elif e.kind == COATOM:
                out[e] = 1 - vals[e.atom]
            else:
                out[e] = sum((vals[a] for a in e.subset), Fraction(0))
        return out

    def _check_state(self, vals: list[Fraction]) -> None:
        if len(vals) != self.source.atom_count:
            raise NotAState(f"expected {self.source.atom_count} atom values, got {len(vals)}")
        if any(v < 0 or v > 1 for v in vals):
            raise NotAState("atom values must lie in [0, 1]")
        for bi, block in enumerate(self.source.blocks):
            if sum(vals[a] for a in block) != 1:
                raise NotAState(f"block {bi} does not sum to 1")

    # -- export --------------------------------------------------------------

    def covers(self) -> list[tuple[str, str]]:
        """Cover relation (x, y) pairs with y covering x, by label."""
        n = len(self.elements)
        out = []
        for i in range(n):
            strict_up = self._up[i] & ~(1 << i)
            for j in range(n):
                if strict_up >> j & 1:
                    others = strict_up & ~(1 << j)
                    if all(not (self._up[k] >> j & 1) for k in _bits(others)):
                        out.append((self.elements[i].label(), self.elements[j].label()))
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "elements": [e.label() for e in self.elements],
                "covers": self.covers(),
            }
        )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_oml(d: MmpDiagram) -> OmlPoset:
    """Paste the Boolean blocks of an admissible diagram into one lattice."""
    return OmlPoset(d)


def leq(poset: OmlPoset, x: OmlElement, y: OmlElement) -> bool:
    return poset.leq(x, y)


def ortho(poset: OmlPoset, x: OmlElement) -> OmlElement:
    return poset.ortho(x)


def extend_state(poset: OmlPoset, values: Iterable[Fraction]) -> dict[OmlElement, Fraction]:
    return poset.extend_state(values)
