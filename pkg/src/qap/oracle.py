"""Exhaustive cross-validation of the spinor calculus against the exact
matrix realization.  Everything here is integer arithmetic; a failure
report carries the first witness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bitcore import BitWord
from .spinor import (
    PhasedSpinor,
    Spinor,
    bi_add,
    commutes,
    product,
    to_matrix,
)
from .transform import BasicTransform, conjugate, h_matrix

ORACLE_GUARD_P = 3


@dataclass
class OracleReport:
    ok: bool
    checks: int
    failures: list[str] = field(default_factory=list)

    def merge(self, other: "OracleReport") -> "OracleReport":
        return OracleReport(
            self.ok and other.ok,
            self.checks + other.checks,
            self.failures + other.failures,
        )

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"oracle {status}: {self.checks} exact matrix checks"]
        lines += self.failures[:5]
        return "\n".join(lines)


def all_spinors(p: int) -> list[Spinor]:
    return [
        Spinor(BitWord(z, p), BitWord(a, p))
        for a in range(1 << p)
        for z in range(1 << p)
    ]


def check_products(p: int, max_failures: int = 1) -> OracleReport:
    """product/commutes/bi_add vs exact Kronecker matrices, all pairs."""
    spinors = all_spinors(p)
    mats = {s: to_matrix(s) for s in spinors}
    checks = 0
    failures: list[str] = []
    for s, t in itertools.product(spinors, repeat=2):
        checks += 1
        lhs = mats[s] @ mats[t]
        if lhs != to_matrix(product(s, t)):
            failures.append(f"product mismatch at {s} * {t}")
        st, ts = lhs, mats[t] @ mats[s]
        if commutes(s, t) != (st - ts).is_zero:
            failures.append(f"commutation mismatch at {s}, {t}")
        if not commutes(s, t) and not (st + ts).is_zero:
            failures.append(f"anti-commutator does not vanish at {s}, {t}")
        if bi_add(s, t) != product(s, t).body:
            failures.append(f"bi_add disagrees with the product body at {s}, {t}")
        if len(failures) >= max_failures:
            return OracleReport(False, checks, failures)
    return OracleReport(True, checks, failures)


def check_conjugations(p: int, max_failures: int = 1) -> OracleReport:
    """h s h-dagger vs matrices for every basic transformation and spinor;
    compared after scaling by 2 to stay within the Gaussian integers."""
    spinors = all_spinors(p)
    checks = 0
    failures: list[str] = []
    for hs in spinors:
        h = BasicTransform(hs.zeta, hs.alpha)
        hm = h_matrix(h)
        hd = hm.dagger()
        for s in spinors:
            for factor in (h, h.inverted()):
                checks += 1
                out = conjugate(factor, PhasedSpinor(0, s))
                lhs = (hm @ to_matrix(s)) @ hd if not factor.inverse else (
                    hd @ to_matrix(s)
                ) @ hm
                if lhs != to_matrix(out).scaled(2):
                    failures.append(f"conjugation mismatch: {factor} on {s}")
                    if len(failures) >= max_failures:
                        return OracleReport(False, checks, failures)
    return OracleReport(True, checks, failures)


def run_oracle(p: int) -> OracleReport:
    if p > ORACLE_GUARD_P:
        raise ValueError(f"oracle sweeps guarded to p <= {ORACLE_GUARD_P}")
    return check_products(p).merge(check_conjugations(p))
