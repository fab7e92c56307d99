"""Spinor generators as (phase, binary-partitioning) word pairs.

Products, commutation and self parity are pure GF(2) parity computations.
A Kronecker-product matrix realization over exact Gaussian integers backs
every rule as a test oracle; all matrix entries stay integral because the
only scalars that ever appear are powers of i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitcore import BitWord, dot

ORACLE_MAX_P = 6


@dataclass(frozen=True, order=False)
class Spinor:
    """Generator with phase string zeta and binary partitioning alpha."""

    zeta: BitWord
    alpha: BitWord

    def __post_init__(self) -> None:
        self.zeta._match(self.alpha)

    @property
    def p(self) -> int:
        return self.alpha.p

    @property
    def key(self) -> tuple[int, int]:
        return (self.alpha.bits, self.zeta.bits)

    def __lt__(self, other: "Spinor") -> bool:
        return self.key < other.key

    @classmethod
    def make(cls, zeta: str | int, alpha: str | int, p: int | None = None) -> "Spinor":
        if isinstance(zeta, str):
            return cls(BitWord.parse(zeta), BitWord.parse(str(alpha)))
        assert p is not None
        return cls(BitWord(zeta, p), BitWord(int(alpha), p))

    @classmethod
    def parse(cls, text: str) -> "Spinor":
        text = text.strip()
        if text.startswith("i·"):
            text = text[2:]
        if not (text.startswith("S[") and text.endswith("]") and "|" in text):
            raise ValueError(f"not a spinor literal: {text!r}")
        z, a = text[2:-1].split("|")
        return cls(BitWord.parse(z), BitWord.parse(a))

    def __str__(self) -> str:
        return f"S[{self.zeta}|{self.alpha}]"

    def display(self, hermitian_norm: bool = False) -> str:
        if hermitian_norm and self_parity(self):
            return f"i·{self}"
        return str(self)

    @property
    def is_identity(self) -> bool:
        return self.zeta.is_zero and self.alpha.is_zero


@dataclass(frozen=True)
class PhasedSpinor:
    """Spinor with an exact power-of-i coefficient."""

    i_exp: int
    body: Spinor

    def __post_init__(self) -> None:
        object.__setattr__(self, "i_exp", self.i_exp % 4)

    def __str__(self) -> str:
        prefix = ["", "i·", "-", "-i·"][self.i_exp]
        return f"{prefix}{self.body}"


def identity_spinor(p: int) -> Spinor:
    return Spinor(BitWord.zero(p), BitWord.zero(p))


def bi_add(s: Spinor, t: Spinor) -> Spinor:
    """The phase-free group law: componentwise XOR."""
    return Spinor(s.zeta ^ t.zeta, s.alpha ^ t.alpha)


def product(s: Spinor, t: Spinor) -> PhasedSpinor:
    """Operator product; the sign is (-1)^(eta.alpha) for s=S[z|a], t=S[e|b]."""
    sign = dot(t.zeta, s.alpha)
    return PhasedSpinor(2 * sign, bi_add(s, t))


def phased_product(s: PhasedSpinor, t: PhasedSpinor) -> PhasedSpinor:
    base = product(s.body, t.body)
    return PhasedSpinor(s.i_exp + t.i_exp + base.i_exp, base.body)


def commutes(s: Spinor, t: Spinor) -> bool:
    """True iff the pair commutes; False means it anti-commutes."""
    return (dot(t.zeta, s.alpha) ^ dot(s.zeta, t.alpha)) == 0


def self_parity(s: Spinor) -> int:
    return dot(s.zeta, s.alpha)


# ---------------------------------------------------------------------------
# exact matrix oracle


class GaussianMatrix:
    """Dense matrix over the Gaussian integers, held as two int64 arrays."""

    __slots__ = ("re", "im")

    def __init__(self, re: np.ndarray, im: np.ndarray):
        self.re = np.asarray(re, dtype=np.int64)
        self.im = np.asarray(im, dtype=np.int64)

    @classmethod
    def identity(cls, n: int) -> "GaussianMatrix":
        return cls(np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    @classmethod
    def zeros(cls, n: int) -> "GaussianMatrix":
        z = np.zeros((n, n), dtype=np.int64)
        return cls(z, z.copy())

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(
            self.re @ other.re - self.im @ other.im,
            self.re @ other.im + self.im @ other.re,
        )

    def kron(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(
            np.kron(self.re, other.re) - np.kron(self.im, other.im),
            np.kron(self.re, other.im) + np.kron(self.im, other.re),
        )

    def dagger(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T.copy(), -self.im.T)

    def times_i_pow(self, k: int) -> "GaussianMatrix":
        k %= 4
        if k == 0:
            return GaussianMatrix(self.re.copy(), self.im.copy())
        if k == 1:
            return GaussianMatrix(-self.im, self.re)
        if k == 2:
            return GaussianMatrix(-self.re, -self.im)
        return GaussianMatrix(self.im, -self.re)

    def scaled(self, c: int) -> "GaussianMatrix":
        return GaussianMatrix(c * self.re, c * self.im)

    def __add__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re - other.re, self.im - other.im)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    @property
    def is_zero(self) -> bool:
        return not self.re.any() and not self.im.any()

    def __repr__(self) -> str:
        return f"GaussianMatrix(re={self.re!r}, im={self.im!r})"


_FACTORS = {
    # (epsilon, a) -> 2x2 factor |0><a| + (-1)^epsilon |1><1+a|
    (0, 0): GaussianMatrix(np.array([[1, 0], [0, 1]]), np.zeros((2, 2), int)),
    (1, 0): GaussianMatrix(np.array([[1, 0], [0, -1]]), np.zeros((2, 2), int)),
    (0, 1): GaussianMatrix(np.array([[0, 1], [1, 0]]), np.zeros((2, 2), int)),
    (1, 1): GaussianMatrix(np.array([[0, 1], [-1, 0]]), np.zeros((2, 2), int)),
}


def to_matrix(ps: PhasedSpinor | Spinor, hermitian_norm: bool = False) -> GaussianMatrix:
    """Kronecker realization of a (phased) spinor, exact over Z[i].

    With hermitian_norm the printed i-prefix for odd self parity is folded
    into the matrix, making the result hermitian.
    """
    if isinstance(ps, Spinor):
        ps = PhasedSpinor(0, ps)
    s = ps.body
    p = s.p
    if p > ORACLE_MAX_P:
        raise ValueError(f"matrix oracle capped at p <= {ORACLE_MAX_P}, got {p}")
    out: GaussianMatrix | None = None
    for pos in range(1, p + 1):
        eps = (s.zeta.bits >> (p - pos)) & 1
        a = (s.alpha.bits >> (p - pos)) & 1
        f = _FACTORS[(eps, a)]
        out = f if out is None else out.kron(f)
    assert out is not None
    k = ps.i_exp + (self_parity(s) if hermitian_norm else 0)
    return out.times_i_pow(k)
