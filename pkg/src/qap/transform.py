"""Basic spinor-to-spinor rotations and the three-stage connector.

A basic transformation h[zeta|alpha] fixes every spinor commuting with
S[zeta|alpha] and sends an anti-commuting S[eta|beta] to
i (-i)^(zeta.alpha) (-1)^(eta.alpha) S[zeta+eta|alpha+beta], the phase
pinned by the exact matrix realization.  Circuits compose these; the
connector Q = E P R maps any valid decomposition sequence onto the
referential one anchored at the diagonal subalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitcore import BitWord, dot, solve_affine
from .partition import DecompositionSequence, QAPartition
from .spinor import (
    GaussianMatrix,
    PhasedSpinor,
    Spinor,
    commutes,
    self_parity,
    to_matrix,
)
from .subalgebra import CartanSubalgebra, SpinorSet


@dataclass(frozen=True)
class BasicTransform:
    """h[zeta|alpha] = (S[0|0] + i (-i)^(zeta.alpha) S[zeta|alpha]) / sqrt(2)."""

    zeta: BitWord
    alpha: BitWord
    inverse: bool = False

    def __post_init__(self) -> None:
        self.zeta._match(self.alpha)

    @property
    def p(self) -> int:
        return self.alpha.p

    @property
    def spinor(self) -> Spinor:
        return Spinor(self.zeta, self.alpha)

    @property
    def is_local(self) -> bool:
        """Acts on a single tensor factor: one-bit alpha, or a diagonal
        rotation with one-bit zeta."""
        if self.alpha.bits != 0:
            return self.alpha.bits.bit_count() == 1
        return self.zeta.bits.bit_count() == 1

    def inverted(self) -> "BasicTransform":
        return BasicTransform(self.zeta, self.alpha, not self.inverse)

    def __str__(self) -> str:
        mark = "'" if self.inverse else ""
        return f"h{mark}[{self.zeta}|{self.alpha}]"


def conjugate(h: BasicTransform, s: PhasedSpinor | Spinor) -> PhasedSpinor:
    """h s h-dagger (or h-dagger s h for an inverted factor), exactly."""
    if isinstance(s, Spinor):
        s = PhasedSpinor(0, s)
    body = s.body
    if commutes(h.spinor, body):
        return s
    # exact coefficient i (-i)^(zeta.alpha) (-1)^(eta.alpha); the inverse
    # direction differs by a sign (h' s h = -(h s h'))
    extra = (3 if h.inverse else 1) + 3 * dot(h.zeta, h.alpha) + 2 * dot(body.zeta, h.alpha)
    return PhasedSpinor(
        s.i_exp + extra,
        Spinor(body.zeta ^ h.zeta, body.alpha ^ h.alpha),
    )


@dataclass(frozen=True)
class SymbolicCircuit:
    """Ordered basic transformations; factors[0] is applied first."""

    factors: tuple[BasicTransform, ...] = ()

    @classmethod
    def of(cls, *factors: BasicTransform) -> "SymbolicCircuit":
        return cls(tuple(factors))

    def then(self, later: "SymbolicCircuit") -> "SymbolicCircuit":
        return SymbolicCircuit(self.factors + later.factors)

    def inverted(self) -> "SymbolicCircuit":
        return SymbolicCircuit(tuple(f.inverted() for f in reversed(self.factors)))

    @property
    def is_local(self) -> bool:
        return all(f.is_local for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        """Factors printed right-to-left in application order."""
        if not self.factors:
            return "(identity)"
        return " ".join(str(f) for f in reversed(self.factors))

    def factor_strings(self) -> list[str]:
        """JSON-friendly mirror of the text form (same right-to-left order)."""
        return [str(f) for f in reversed(self.factors)]


def conjugate_by_circuit(q: SymbolicCircuit, s: PhasedSpinor | Spinor) -> PhasedSpinor:
    if isinstance(s, Spinor):
        s = PhasedSpinor(0, s)
    for f in q.factors:
        s = conjugate(f, s)
    return s


def apply_circuit(q: SymbolicCircuit, x: SpinorSet) -> SpinorSet:
    """Elementwise conjugation with phases dropped (set identity is
    phase-free)."""
    if not len(x):
        return x
    out = x
    for f in q.factors:
        out = SpinorSet.from_spinors(conjugate(f, s).body for s in out.spinors())
    return out


def apply_to_cartan(q: SymbolicCircuit, c: CartanSubalgebra) -> CartanSubalgebra:
    return CartanSubalgebra(apply_circuit(q, c.elements), _trusted=True)


def h_matrix(h: BasicTransform) -> GaussianMatrix:
    """sqrt(2) times the unitary of h, exact over the Gaussian integers."""
    n = 1 << h.p
    coeff = (1 + 3 * dot(h.zeta, h.alpha)) % 4  # i * (-i)^(zeta.alpha)
    m = GaussianMatrix.identity(n) + to_matrix(h.spinor).times_i_pow(coeff)
    return m.dagger() if h.inverse else m


def circuit_matrix(q: SymbolicCircuit, p: int) -> tuple[GaussianMatrix, int]:
    """(U, k) with U = (sqrt 2)^k times the circuit unitary."""
    u = GaussianMatrix.identity(1 << p)
    for f in q.factors:
        if f.p != p:
            raise ValueError("factor width mismatch")
        u = h_matrix(f) @ u
    return u, len(q.factors)


# ---------------------------------------------------------------------------
# the three stages


def build_R(c: CartanSubalgebra) -> SymbolicCircuit:
    """Diagonalizer: one factor per canonical generator S[xi_i|alpha_i],
    with phases solved from xi_i.alpha_j + zeta_j.alpha_i = delta_ij."""
    gens = c.generators
    factors = []
    for j, gj in enumerate(gens):
        constraints = [
            (gi.alpha, (1 if i == j else 0) ^ dot(gi.zeta, gj.alpha))
            for i, gi in enumerate(gens)
        ]
        z = solve_affine(constraints, c.p)
        if z is None:
            raise AssertionError("diagonalizer system must be solvable")
        factors.append(BasicTransform(z, gj.alpha))
    return SymbolicCircuit(tuple(factors))


def _cell_signature(cell: SpinorSet) -> tuple[BitWord, int]:
    """(common binary partitioning, sigma) of a diagonal-partition cell
    W^sigma_alpha = {S[zeta|alpha] : zeta.alpha = 1 + sigma}."""
    spinors = cell.spinors()
    alpha = spinors[0].alpha
    parities = {self_parity(s) for s in spinors}
    if any(s.alpha != alpha for s in spinors) or len(parities) != 1:
        raise ValueError("not a conditioned subspace of the diagonal subalgebra")
    return alpha, 1 ^ parities.pop()


def build_P(images: Sequence[SpinorSet]) -> SymbolicCircuit:
    """Parity correction: a single diagonal factor h[eta|0] with
    eta.alpha_r = sigma_r, fixing every image cell to odd self parity."""
    if not images:
        raise ValueError("need at least one image cell")
    p = images[0].p
    constraints = []
    for cell in images:
        alpha, sigma = _cell_signature(cell)
        constraints.append((alpha, sigma))
    eta = solve_affine(constraints, p)
    if eta is None:
        raise AssertionError("parity system must be solvable for independent alphas")
    return SymbolicCircuit.of(BasicTransform(eta, BitWord.zero(p)))


def build_exchange_step(
    src: BitWord, dst: BitWord, frozen: Sequence[BitWord] = ()
) -> SymbolicCircuit:
    """e = h[zeta|src+dst] h[eta|src+dst] moving W^eps_src onto W^eps_dst
    while leaving W^eps_f untouched for every frozen f and fixing the
    diagonal subalgebra as a set.

    (eta, zeta) is the lexicographically smallest admissible pair, eta
    first; the parity rules are zeta.d = eta.d = (zeta+eta).src = 1 and
    (zeta+eta).f = 0, with d = src + dst.
    """
    if src == dst:
        raise ValueError("exchange endpoints must differ")
    p = src.p
    d = src ^ dst
    for eta_bits in range(1 << p):
        eta = BitWord(eta_bits, p)
        if dot(eta, d) != 1:
            continue
        constraints = [(d, 1), (src, 1 ^ dot(eta, src))]
        constraints += [(f, dot(eta, f)) for f in frozen]
        zeta = solve_affine(constraints, p)
        if zeta is not None:
            return SymbolicCircuit.of(
                BasicTransform(eta, d), BasicTransform(zeta, d)
            )
    raise ValueError("frozen constraints exhaust the solver's freedom")


def build_E(current: Sequence[BitWord]) -> SymbolicCircuit:
    """Exchange pipeline: step r moves the r-th cell partitioning onto the
    unit word with bit r, freezing the already placed units."""
    if not current:
        raise ValueError("need at least one partitioning")
    p = current[0].p
    alphas = list(current)
    placed: list[BitWord] = []
    circuit = SymbolicCircuit()
    for r in range(len(alphas)):
        target = BitWord.unit(p, r + 1)
        a = alphas[r]
        if a != target:
            step = build_exchange_step(a, target, placed)
            zeta, eta = step.factors[1].zeta, step.factors[0].zeta
            shift = zeta ^ eta
            for j in range(r, len(alphas)):
                if dot(shift, alphas[j]):
                    alphas[j] = alphas[j] ^ a ^ target
            circuit = circuit.then(step)
        assert alphas[r] == target
        placed.append(target)
    return circuit


def referential_cell(p: int, r: int) -> SpinorSet:
    """W^0 at the unit partitioning with bit r: odd-self-parity spinors."""
    beta = BitWord.unit(p, r)
    return SpinorSet(
        p,
        (
            (beta.bits << p) | z
            for z in range(1 << p)
            if (z & beta.bits).bit_count() & 1
        ),
    )


def connect(seq: DecompositionSequence) -> SymbolicCircuit:
    """Q = E P R mapping the sequence onto the referential one; the
    contract (center to the diagonal subalgebra, step r to the unit cell
    W^0_{beta_r}) is asserted before returning."""
    center = seq.center
    p = center.p
    r_circ = build_R(center)
    images = [apply_circuit(r_circ, cell) for cell in seq.steps]
    p_circ = build_P(images)
    after_p = [apply_circuit(p_circ, img) for img in images]
    alphas = []
    for cell in after_p:
        alpha, sigma = _cell_signature(cell)
        if sigma != 0:
            raise AssertionError("parity correction failed to set sigma = 0")
        alphas.append(alpha)
    e_circ = build_E(alphas)
    q = r_circ.then(p_circ).then(e_circ)

    from .subalgebra import intrinsic_cartan

    if apply_to_cartan(q, center) != intrinsic_cartan(p):
        raise AssertionError("connector does not map the center onto the diagonal")
    for r, cell in enumerate(seq.steps, start=1):
        if apply_circuit(q, cell) != referential_cell(p, r):
            raise AssertionError(f"connector misses the referential cell at step {r}")
    return q


def random_sequence(qap: QAPartition, rng) -> DecompositionSequence:
    """Seeded random valid sequence: p distinct, group-generating
    determinants with random halves."""
    from .bitcore import gf2_rank

    p = qap.p
    while True:
        idx = rng.sample(range(1, 1 << p), p)
        if gf2_rank(idx) == p:
            break
    keys = tuple((i, rng.randrange(2)) for i in idx)
    return DecompositionSequence(qap, keys)
