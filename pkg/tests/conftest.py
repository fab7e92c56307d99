from __future__ import annotations

import pytest

from qap.extension import CartanAtlas, enumerate_all
from qap.partition import QAPartition, build_qap
from qap.subalgebra import CartanSubalgebra

_ATLAS_CACHE: dict[int, CartanAtlas] = {}
_QAP_CACHE: dict[CartanSubalgebra, QAPartition] = {}


def atlas(p: int) -> CartanAtlas:
    if p not in _ATLAS_CACHE:
        _ATLAS_CACHE[p] = enumerate_all(p)
    return _ATLAS_CACHE[p]


def qap_of(c: CartanSubalgebra) -> QAPartition:
    if c not in _QAP_CACHE:
        _QAP_CACHE[c] = build_qap(c)
    return _QAP_CACHE[c]


@pytest.fixture(scope="session")
def atlas3() -> CartanAtlas:
    return atlas(3)


@pytest.fixture(scope="session")
def atlas2() -> CartanAtlas:
    return atlas(2)
