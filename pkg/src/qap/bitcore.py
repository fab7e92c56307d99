"""Exact GF(2) arithmetic on p-bit words and subgroup machinery of Z_2^p.

Words are fixed-width bit strings; the leftmost printed character is bit 1
and is stored as the most significant bit, so lexicographic order on the
printed strings coincides with numeric order on the stored integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MAX_WIDTH = 16


def _check_width(p: int) -> None:
    if not 1 <= p <= MAX_WIDTH:
        raise ValueError(f"word width must be in 1..{MAX_WIDTH}, got {p}")


# ---------------------------------------------------------------------------
# int-level GF(2) helpers (rows are ints, bit j = variable j, LSB = var 0)


def gf2_rank(rows: Iterable[int]) -> int:
    work: list[int] = []
    for row in rows:
        for piv in work:
            row = min(row, row ^ piv)
        if row:
            work.append(row)
            work.sort(reverse=True)
    return len(work)


def gf2_reduce(vec: int, basis: Sequence[int]) -> int:
    """Reduce vec against rows sorted descending by leading bit."""
    for row in basis:
        vec = min(vec, vec ^ row)
    return vec


def gf2_echelon(rows: Iterable[int]) -> list[int]:
    """Fully reduced echelon basis, sorted descending by leading bit."""
    basis: list[int] = []
    for row in rows:
        row = gf2_reduce(row, basis)
        if row:
            basis = [min(b, b ^ row) for b in basis]
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def gf2_nullspace(rows: Sequence[int], width: int) -> list[int]:
    """Basis of {x : parity(x & row) = 0 for all rows}, width-bit vectors."""
    basis = gf2_echelon(rows)
    pivots = [b.bit_length() - 1 for b in basis]
    free = [j for j in range(width) if j not in pivots]
    out = []
    for j in free:
        vec = 1 << j
        # back-substitute: pivot bit set iff the row hits an odd number of
        # already-set bits
        for b, piv in zip(basis, pivots):
            if ((b & vec).bit_count()) & 1:
                vec |= 1 << piv
        out.append(vec)
    return out


def gf2_solve(rows: Sequence[int], rhs: Sequence[int], width: int) -> Optional[int]:
    """One solution of the affine system parity(x & row_i) = rhs_i, or None."""
    work: list[tuple[int, int]] = []  # (row, rhs) with distinct leading bits
    for row, b in zip(rows, rhs):
        b &= 1
        for wr, wb in work:
            if row ^ wr < row:
                row ^= wr
                b ^= wb
        if row:
            work.append((row, b))
            work.sort(reverse=True)
        elif b:
            return None
    x = 0
    for row, b in sorted(work):  # smallest pivot upward
        piv = row.bit_length() - 1
        if ((x & row).bit_count() + b) & 1:
            x ^= 1 << piv
    return x


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True, order=True)
class BitWord:
    """A p-digit binary string over GF(2); addition is bitwise XOR."""

    bits: int
    p: int

    def __post_init__(self) -> None:
        _check_width(self.p)
        if not 0 <= self.bits < (1 << self.p):
            raise ValueError(f"bits {self.bits:#x} out of range for width {self.p}")

    @classmethod
    def parse(cls, text: str) -> BitWord:
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def zero(cls, p: int) -> BitWord:
        return cls(0, p)

    @classmethod
    def unit(cls, p: int, position: int) -> BitWord:
        """Unit word with a single 1 at printed position 1..p (1 = leftmost)."""
        if not 1 <= position <= p:
            raise ValueError(f"position {position} out of 1..{p}")
        return cls(1 << (p - position), p)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.p}b")

    def __xor__(self, other: BitWord) -> BitWord:
        self._match(other)
        return BitWord(self.bits ^ other.bits, self.p)

    def _match(self, other: BitWord) -> None:
        if self.p != other.p:
            raise ValueError(f"width mismatch: {self.p} vs {other.p}")

    @property
    def is_zero(self) -> bool:
        return self.bits == 0


def dot(a: BitWord, b: BitWord) -> int:
    """Parity of the bitwise AND: the Z_2 inner product of two words."""
    a._match(b)
    return (a.bits & b.bits).bit_count() & 1


@dataclass(frozen=True)
class BitSubgroup:
    """Subgroup of Z_2^p held as a fully reduced echelon basis.

    The basis is canonical, so equal subgroups compare equal structurally.
    """

    p: int
    basis: tuple[BitWord, ...]  # ascending numeric order, echelon-reduced

    @classmethod
    def span(cls, generators: Iterable[BitWord], p: Optional[int] = None) -> BitSubgroup:
        gens = list(generators)
        if p is None:
            if not gens:
                raise ValueError("empty span needs an explicit width p")
            p = gens[0].p
        for g in gens:
            if g.p != p:
                raise ValueError(f"width mismatch: {g.p} vs {p}")
        rows = gf2_echelon(w.bits for w in gens)
        return cls(p, tuple(BitWord(r, p) for r in sorted(rows)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.rank

    def __contains__(self, w: BitWord) -> bool:
        if w.p != self.p:
            return False
        return gf2_reduce(w.bits, [b.bits for b in reversed(self.basis)]) == 0

    def members(self) -> list[BitWord]:
        """All 2^rank members in ascending order."""
        vals = [0]
        for b in self.basis:
            vals += [v ^ b.bits for v in vals]
        return [BitWord(v, self.p) for v in sorted(vals)]

    def member_bits(self) -> list[int]:
        vals = [0]
        for b in self.basis:
            vals += [v ^ b.bits for v in vals]
        vals.sort()
        return vals

    def is_subgroup_of(self, other: BitSubgroup) -> bool:
        return self.p == other.p and all(b in other for b in self.basis)


def span(generators: Iterable[BitWord], p: Optional[int] = None) -> BitSubgroup:
    return BitSubgroup.span(generators, p)


def maximal_subgroups(g: BitSubgroup) -> list[BitSubgroup]:
    """All index-2 subgroups of g (2^rank - 1 of them), sorted by basis."""
    k = g.rank
    if k == 0:
        return []
    out = []
    for f in range(1, 1 << k):
        # kernel of the coordinate functional f over the basis of g
        piv = (f & -f).bit_length() - 1
        kernel_words = []
        for j in range(k):
            if j == piv:
                continue
            w = g.basis[j].bits
            if (f >> j) & 1:
                w ^= g.basis[piv].bits
            kernel_words.append(BitWord(w, g.p))
        out.append(BitSubgroup.span(kernel_words, g.p))
    out.sort(key=lambda s: tuple(b.bits for b in s.basis))
    return out


@dataclass(frozen=True)
class Coset:
    leader: BitWord
    elements: tuple[BitWord, ...]


def cosets(h: BitSubgroup, g: BitSubgroup) -> list[Coset]:
    """Partition of g into cosets of h, ordered by lex-smallest leader."""
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")
    hrows = [b.bits for b in reversed(h.basis)]
    buckets: dict[int, list[int]] = {}
    for v in g.member_bits():
        buckets.setdefault(gf2_reduce(v, hrows), []).append(v)
    out = []
    for vals in buckets.values():
        vals.sort()
        out.append(Coset(BitWord(vals[0], g.p), tuple(BitWord(v, g.p) for v in vals)))
    out.sort(key=lambda c: c.leader.bits)
    return out


def solve_affine(constraints: Sequence[tuple[BitWord, int]], p: int) -> Optional[BitWord]:
    """Lexicographically smallest x with dot(x, w_i) = b_i, or None.

    Greedy from the most significant bit: each bit is pinned to 0 unless
    that makes the system inconsistent.
    """
    _check_width(p)
    rows = []
    rhs = []
    for w, b in constraints:
        if w.p != p:
            raise ValueError(f"width mismatch: {w.p} vs {p}")
        rows.append(w.bits)
        rhs.append(b & 1)
    if gf2_solve(rows, rhs, p) is None:
        return None
    bits = 0
    for j in range(p - 1, -1, -1):  # j = bit position, MSB first
        rows.append(1 << j)
        rhs.append(0)
        if gf2_solve(rows, rhs, p) is None:
            rows[-1] = 1 << j
            rhs[-1] = 1
            bits |= 1 << j
    return BitWord(bits, p)
