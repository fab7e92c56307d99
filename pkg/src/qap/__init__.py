"""Quotient-algebra-partition toolkit for su(2^p): exact spinor algebra
over binary strings, Cartan subalgebra enumeration, rank-zero partitions,
and symbolic decomposition-path connectors."""

from .bitcore import BitSubgroup, BitWord, dot, solve_affine, span
from .extension import CartanAtlas, classify_local, count_kind, count_total, enumerate_all
from .partition import (
    DecompositionSequence,
    QAPartition,
    build_qap,
    render_table,
    verify_closure,
)
from .spinor import PhasedSpinor, Spinor, bi_add, commutes, product, self_parity, to_matrix
from .subalgebra import (
    BiSubalgebra,
    CartanSubalgebra,
    MaxBiGroup,
    SpinorSet,
    all_maximal,
    build_kth_kind,
    commuting_bisubalgebra,
    dual_map,
    intrinsic_cartan,
    is_cartan,
    parse_label,
    sqcap,
)
from .transform import BasicTransform, SymbolicCircuit, apply_circuit, conjugate, connect

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
