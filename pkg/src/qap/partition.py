"""Rank-zero quotient-algebra partitions and their verifiers.

A partition holds 2^(p+1) conditioned subspaces keyed by (maximal
bi-subalgebra index, epsilon).  Cell labels follow one global convention:
the half of each conjugate pair containing the pair's smallest spinor is
W^1.  The closure law [W^e(B), W^s(B')] in W^(e+s)(B sqcap B') is checked
exhaustively at build time; index arithmetic is XOR throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .spinor import Spinor
from .subalgebra import (
    BiSubalgebra,
    CartanSubalgebra,
    MaxBiGroup,
    SpinorSet,
    all_maximal,
    is_cartan,
    keys_commute,
    spinor_of_key,
)

CellKey = tuple[int, int]  # (bi-subalgebra index in MaxBiGroup, epsilon)


class ClosureError(AssertionError):
    """Internal invariant fault: the cell labeling violates the closure law."""


@dataclass(frozen=True)
class ConjugatePair:
    """The subspace commuting with one maximal bi-subalgebra, bisected."""

    determinant: BiSubalgebra
    w: SpinorSet
    w_hat: SpinorSet

    @property
    def is_degrade(self) -> bool:
        return len(self.w_hat) == 0


def conjugate_pair_of(c: CartanSubalgebra, b: BiSubalgebra) -> ConjugatePair:
    """Bisect the commutant coset of b; the half holding the smallest
    spinor satisfies the coset rule into b and is returned as w."""
    if b.parent != c:
        raise ValueError("bi-subalgebra does not belong to this Cartan subalgebra")
    if not b.is_maximal():
        raise ValueError("not a maximal bi-subalgebra")
    if b.is_whole:
        return ConjugatePair(b, c.elements, SpinorSet(c.p))
    from .subalgebra import _pair_keys

    leader = min(_pair_keys(c, b))
    w = b.elements.translate(leader)
    w_hat = (c.elements - b.elements).translate(leader)
    return ConjugatePair(b, w, w_hat)


class QAPartition:
    """The 2^(p+1) conditioned subspaces generated by a Cartan subalgebra."""

    __slots__ = ("cartan", "maxbi", "cells", "_cell_of_key")

    def __init__(self, cartan: CartanSubalgebra, maxbi: MaxBiGroup,
                 cells: dict[CellKey, SpinorSet]):
        self.cartan = cartan
        self.maxbi = maxbi
        self.cells = cells
        self._cell_of_key: dict[int, CellKey] = {}
        for ck, cell in cells.items():
            for k in cell.keys:
                self._cell_of_key[k] = ck

    @property
    def p(self) -> int:
        return self.cartan.p

    def cell_of(self, s: Spinor | int) -> CellKey:
        from .subalgebra import key_of

        return self._cell_of_key[s if isinstance(s, int) else key_of(s)]

    def pair(self, index: int) -> ConjugatePair:
        return ConjugatePair(
            self.maxbi.members[index], self.cells[(index, 1)], self.cells[(index, 0)]
        )

    def is_partition(self) -> bool:
        total = sum(len(cell) for cell in self.cells.values())
        return total == 1 << (2 * self.p) and len(self._cell_of_key) == total


def build_qap(c: CartanSubalgebra, verify: bool = True) -> QAPartition:
    """Assemble all conjugate pairs and label their halves.

    The p index-basis pairs anchor the labeling (the half holding the
    pair's smallest spinor is W^1); every composite pair inherits its
    label from an actual commutator product out of already-labeled cells,
    so the closure law holds by construction triple-by-triple.  Global
    consistency is then asserted by a full verification sweep.
    """
    maxbi = all_maximal(c)
    p = c.p
    cells: dict[CellKey, SpinorSet] = {
        (0, 1): c.elements,
        (0, 0): SpinorSet(c.p),
    }
    for i in range(1, 1 << p):
        b = maxbi.members[i]
        leader = maxbi.leaders[i]
        w = b.elements.translate(leader)
        w_hat = (c.elements - b.elements).translate(leader)
        if i & (i - 1) == 0:  # index-basis pair: lex-smallest spinor goes to W^1
            cells[(i, 1)], cells[(i, 0)] = w, w_hat
            continue
        i1 = i & -i
        i2 = i ^ i1
        placed = False
        for e1 in (1, 0):
            for e2 in (1, 0):
                for x in cells[(i1, e1)].keys:
                    for y in cells[(i2, e2)].keys:
                        if keys_commute(x, y, p):
                            continue
                        eps = e1 ^ e2
                        if (x ^ y) in w.keys:
                            cells[(i, eps)], cells[(i, 1 - eps)] = w, w_hat
                        else:
                            cells[(i, eps)], cells[(i, 1 - eps)] = w_hat, w
                        placed = True
                        break
                    if placed:
                        break
                if placed:
                    break
            if placed:
                break
        if not placed:
            raise ClosureError(f"no anti-commuting product reaches pair {i}")
    q = QAPartition(c, maxbi, cells)
    if verify:
        report = verify_closure(q)
        if not report.ok:
            raise ClosureError(f"cell labeling inconsistent: {report.failures[0]}")
    return q


@dataclass
class ClosureReport:
    ok: bool
    checked_pairs: int
    failures: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"closure {status}: {self.checked_pairs} anti-commuting pairs checked"]
        lines += self.failures[:5]
        return "\n".join(lines)


def verify_closure(q: QAPartition, max_failures: int = 1) -> ClosureReport:
    """Exhaustively check the quaternion closure law on every cell pair,
    plus the conjugate-partition inclusions against the center."""
    p = q.p
    checked = 0
    failures: list[str] = []

    def fail(msg: str) -> bool:
        failures.append(msg)
        return len(failures) >= max_failures

    keys = sorted(q.cells)
    for a_pos, ka in enumerate(keys):
        ia, ea = ka
        cell_a = q.cells[ka]
        for kb in keys[a_pos:]:
            ib, eb = kb
            cell_b = q.cells[kb]
            target = q.cells[(ia ^ ib, ea ^ eb)]
            for x in cell_a.keys:
                for y in cell_b.keys:
                    if keys_commute(x, y, p):
                        continue
                    checked += 1
                    if (x ^ y) not in target.keys:
                        if fail(
                            f"[{cell_label(ka)}, {cell_label(kb)}]: "
                            f"{spinor_of_key(x, p)} x {spinor_of_key(y, p)} -> "
                            f"{spinor_of_key(x ^ y, p)} not in {cell_label((ia ^ ib, ea ^ eb))}"
                        ):
                            return ClosureReport(False, checked, failures)

    # conjugate-partition inclusions [W,C] in W-hat, [W-hat,C] in W, [W,W-hat] in C
    center = q.cells[(0, 1)]
    for i in range(1, 1 << p):
        w, w_hat = q.cells[(i, 1)], q.cells[(i, 0)]
        for src, other, tgt in ((w, center, w_hat), (w_hat, center, w), (w, w_hat, center)):
            for x in src.keys:
                for y in other.keys:
                    if not keys_commute(x, y, p) and (x ^ y) not in tgt.keys:
                        if fail(f"conjugate-partition violation at B_{i}"):
                            return ClosureReport(False, checked, failures)
    return ClosureReport(not failures, checked, failures)


def cell_label(key: CellKey) -> str:
    return f"B:{key[0]}/eps:{key[1]}"


@dataclass(frozen=True)
class CoQuotientView:
    """The same partition re-paired around a conditioned subspace."""

    center: CellKey
    degrade: tuple[CellKey, CellKey]  # the new center pairs with the empty cell
    irregular: tuple[CellKey, CellKey]
    regular: tuple[tuple[CellKey, CellKey], ...]


def coquotient_view(q: QAPartition, cell: CellKey) -> CoQuotientView:
    """Re-pair all cells around a non-degrade conditioned subspace: the
    partner of (m, s) under center (l, e) is (m^l, s^e)."""
    l, e = cell
    if l == 0:
        raise ValueError("the center of a co-quotient view must be non-degrade")
    if cell not in q.cells:
        raise KeyError(f"no such cell {cell}")
    regular = []
    seen = set()
    for m in range(1, 1 << q.p):
        if m == l:
            continue
        for s in (0, 1):
            a = (m, s)
            b = (m ^ l, s ^ e)
            if a in seen or b in seen:
                continue
            seen.update((a, b))
            regular.append((a, b))
    return CoQuotientView(
        center=cell,
        degrade=(cell, (0, 0)),
        irregular=((0, 1), (l, 1 - e)),
        regular=tuple(sorted(regular)),
    )


def split_by_commutation(w1: SpinorSet, w2: SpinorSet) -> tuple[SpinorSet, SpinorSet]:
    """Split w1 into the two sub-cosets singled out by w2.

    The pairwise bi-additives of w2 form the determining bi-subalgebra
    B_2; w1 splits by the coset rule into {s : s0+s in B_2} (s0 the
    smallest member, returned first) and the rest.  Every spinor of w2
    then commutes with one sub-coset entirely and anti-commutes with the
    other; that uniformity is validated before returning.
    """
    p = w1.p
    if not w1.keys or not w2.keys:
        raise ValueError("both inputs must be non-empty")
    b2 = {x ^ y for x in w2.keys for y in w2.keys}
    s0 = min(w1.keys)
    aligned = frozenset(k for k in w1.keys if (s0 ^ k) in b2)
    rest = w1.keys - aligned
    for y in w2.keys:
        for half in (aligned, rest):
            flags = {keys_commute(y, x, p) for x in half}
            if len(flags) > 1:
                raise ValueError(
                    f"{spinor_of_key(y, p)} relates non-uniformly to a sub-coset; "
                    "inputs are not conditioned subspaces of one partition"
                )
    return SpinorSet(p, aligned), SpinorSet(p, rest)


def union_is_cartan(b: BiSubalgebra, w: SpinorSet) -> CartanSubalgebra:
    """Validate that b u w is a Cartan subalgebra and return it."""
    merged = b.elements | w
    if not is_cartan(merged):
        raise ValueError("the union is not a Cartan subalgebra")
    return CartanSubalgebra(merged, _trusted=True)


@dataclass(frozen=True)
class DecompositionSequence:
    """A center subalgebra plus p conditioned subspaces of its partition,
    one per member of an index basis of the maximal-bi-subalgebra group."""

    qap: QAPartition
    step_keys: tuple[CellKey, ...]

    def __post_init__(self) -> None:
        p = self.qap.p
        if len(self.step_keys) != p:
            raise ValueError(f"need exactly {p} steps")
        idx = [i for i, _ in self.step_keys]
        if 0 in idx:
            raise ValueError("steps must be non-degrade conditioned subspaces")
        if len(set(idx)) != p:
            raise ValueError("step determinants must be distinct")
        from .bitcore import gf2_rank

        if gf2_rank(idx) != p:
            raise ValueError("step determinants must generate the whole group")

    @property
    def center(self) -> CartanSubalgebra:
        return self.qap.cartan

    @property
    def steps(self) -> list[SpinorSet]:
        return [self.qap.cells[k] for k in self.step_keys]


# ---------------------------------------------------------------------------
# table emission


def _render_cell(cell: Iterable[Spinor]) -> str:
    return ", ".join(s.display(hermitian_norm=True) for s in cell)


def render_table(q: QAPartition) -> str:
    """Text table: center header, one row per conjugate pair, then the
    complete maximal-bi-subalgebra list."""
    lines = [q.cartan.label, "  " + _render_cell(q.cartan.elements.spinors()), ""]
    n = 1 << q.p
    for i in range(1, n):
        w = _render_cell(q.cells[(i, 1)].spinors())
        w_hat = _render_cell(q.cells[(i, 0)].spinors())
        lines.append(f"B_{i} | W: {w} | Ŵ: {w_hat}")
    lines.append("")
    for i in range(1, n):
        b = _render_cell(q.maxbi.members[i].elements.spinors())
        lines.append(f"B_{i} = {{ {b} }}")
    return "\n".join(lines) + "\n"


def qap_to_json(q: QAPartition) -> str:
    payload = {
        "label": q.cartan.label,
        "p": q.p,
        "kind": q.cartan.kind,
        "cells": {
            cell_label(key): [str(s) for s in cell.spinors()]
            for key, cell in sorted(q.cells.items())
        },
        "maximal": {
            f"B:{i}": [str(s) for s in q.maxbi.members[i].elements.spinors()]
            for i in range(1 << q.p)
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True)
