from __future__ import annotations

import itertools

import pytest

from conftest import qap_of
from qap.partition import (
    DecompositionSequence,
    QAPartition,
    build_qap,
    cell_label,
    conjugate_pair_of,
    coquotient_view,
    qap_to_json,
    render_table,
    split_by_commutation,
    union_is_cartan,
    verify_closure,
)
from qap.spinor import Spinor
from qap.subalgebra import (
    SpinorSet,
    all_maximal,
    intrinsic_cartan,
    keys_commute,
    parse_label,
)

S = Spinor.make


def strs(ss: SpinorSet) -> list[str]:
    return [str(s) for s in ss.spinors()]


def commutator_lands_in(q: QAPartition, a, b, t) -> bool:
    ca, cb, ct = q.cells[a], q.cells[b], q.cells[t]
    for x in ca.keys:
        for y in cb.keys:
            if not keys_commute(x, y, q.p) and (x ^ y) not in ct.keys:
                return False
    return True


# -- conjugate pairs ----------------------------------------------------------


def test_degrade_pair():
    c = intrinsic_cartan(3)
    g = all_maximal(c)
    pair = conjugate_pair_of(c, g.members[0])
    assert pair.is_degrade
    assert pair.w == c.elements and len(pair.w_hat) == 0


def test_intrinsic_pair_row():
    c = intrinsic_cartan(3)
    g = all_maximal(c)
    pair = conjugate_pair_of(c, g.members[1])
    assert strs(pair.w) == ["S[000|001]", "S[010|001]", "S[100|001]", "S[110|001]"]
    assert strs(pair.w_hat) == ["S[001|001]", "S[011|001]", "S[101|001]", "S[111|001]"]


def test_kind2_pair_row():
    c = parse_label("C^{110}_{[001,100]}")
    q = qap_of(c)
    assert strs(q.cells[(4, 1)]) == [
        "S[000|010]", "S[101|011]", "S[001|110]", "S[100|111]",
    ]
    assert strs(q.cells[(4, 0)]) == [
        "S[010|010]", "S[111|011]", "S[011|110]", "S[110|111]",
    ]


def test_pair_invariants(atlas3):
    for c in list(atlas3.members())[::17]:
        g = all_maximal(c)
        for b in g.members[1:]:
            pair = conjugate_pair_of(c, b)
            union = pair.w.keys | pair.w_hat.keys
            # commutes with the determinant, anti-commutes with the rest
            for x in union:
                assert all(keys_commute(x, k, 3) for k in b.elements.keys)
                assert not any(
                    keys_commute(x, k, 3) for k in c.elements.keys - b.elements.keys
                )
            # coset of the center under bi-addition
            leader = min(union)
            assert union == {leader ^ k for k in c.elements.keys}
            # halves obey the coset rule; cross products leave it
            for x, y in itertools.combinations(pair.w.keys, 2):
                assert (x ^ y) in b.elements.keys
            for x in pair.w.keys:
                assert all(keys_commute(x, y, 3) for y in pair.w.keys)
                assert not any(keys_commute(x, y, 3) for y in pair.w_hat.keys)
                for y in pair.w_hat.keys:
                    assert (x ^ y) not in b.elements.keys


def test_pair_matches_bruteforce_scan(atlas3):
    # oracle: collect commutant members by scanning all 4^p spinors, then
    # bisect from the smallest member by the coset rule
    for c in list(atlas3.members())[::31]:
        g = all_maximal(c)
        for b in g.members[1:4]:
            scan = [
                k
                for k in range(1 << 6)
                if k not in c.elements.keys
                and all(keys_commute(k, e, 3) for e in b.elements.keys)
            ]
            s0 = min(scan)
            w_scan = {k for k in scan if (s0 ^ k) in b.elements.keys}
            pair = conjugate_pair_of(c, b)
            assert pair.w.keys == w_scan
            assert pair.w_hat.keys == set(scan) - w_scan


def test_pairs_of_distinct_determinants_are_disjoint(atlas3):
    for c in list(atlas3.members())[::41]:
        q = qap_of(c)
        pairs = [
            q.cells[(i, 1)].keys | q.cells[(i, 0)].keys for i in range(1, 8)
        ]
        for a, b in itertools.combinations(pairs, 2):
            assert not (a & b)


def test_pair_needs_matching_parent():
    c1 = intrinsic_cartan(3)
    c2 = parse_label("C^{1}_{[100]}")
    b = all_maximal(c2).members[1]
    with pytest.raises(ValueError):
        conjugate_pair_of(c1, b)


# -- full partitions ----------------------------------------------------------


def test_build_qap_structure():
    q = qap_of(intrinsic_cartan(3))
    assert len(q.cells) == 16
    assert q.cells[(0, 1)] == intrinsic_cartan(3).elements
    assert len(q.cells[(0, 0)]) == 0
    assert q.is_partition()
    for i in range(1, 8):
        for eps in (0, 1):
            assert len(q.cells[(i, eps)]) == 4


def test_verify_closure_passes_on_sampled_atlas(atlas3):
    for c in list(atlas3.members())[::11]:
        q = qap_of(c)
        report = verify_closure(q)
        assert report.ok and report.checked_pairs > 0
        for i in range(1, 8):
            assert len(q.cells[(i, 0)]) == len(q.cells[(i, 1)]) == 4


def test_degrade_only_closure_at_p1():
    q = build_qap(intrinsic_cartan(1))
    assert verify_closure(q).ok
    assert len(q.cells) == 4


def test_fault_injection_detected():
    c = parse_label("C^{110}_{[001,100]}")
    q = qap_of(c)
    for flip in (1, 5):
        cells = dict(q.cells)
        cells[(flip, 0)], cells[(flip, 1)] = cells[(flip, 1)], cells[(flip, 0)]
        tampered = QAPartition(c, q.maxbi, cells)
        report = verify_closure(tampered)
        assert not report.ok and report.failures


def test_propagation_needed_regression():
    # these two broke under a naive per-pair labeling; they must build clean
    for label in ("C^{0}_{[11]}", "C^{1}_{[11]}"):
        q = build_qap(parse_label(label))
        assert verify_closure(q).ok


def test_cells_compose_as_xor_group(atlas2):
    for c in atlas2.members():
        q = qap_of(c)
        for (ka, kb) in itertools.combinations(sorted(q.cells), 2):
            target = (ka[0] ^ kb[0], ka[1] ^ kb[1])
            assert commutator_lands_in(q, ka, kb, target)


def test_quadruple_rule_lands_in_sqcap(atlas2):
    # for s1,s2 in one cell and t1,t2 in another, with both aligned pairs
    # anti-commuting, the quadruple bi-additive lies in B1 sqcap B2
    for c in atlas2.members():
        q = qap_of(c)
        p = q.p
        for (i1, e1), (i2, e2) in itertools.combinations(sorted(q.cells), 2):
            if i1 == 0 or i2 == 0:
                continue
            cell1, cell2 = q.cells[(i1, e1)], q.cells[(i2, e2)]
            target = q.maxbi.members[i1 ^ i2].elements.keys
            for s1, s2 in itertools.product(cell1.keys, repeat=2):
                for t1, t2 in itertools.product(cell2.keys, repeat=2):
                    if keys_commute(s1, t1, p) or keys_commute(s2, t2, p):
                        continue
                    assert (s1 ^ s2 ^ t1 ^ t2) in target


def test_abelianness_characterizes_the_coset_rule(atlas3):
    # within the commutant of a maximal bi-subalgebra, a subspace is
    # abelian exactly when its pairwise bi-additives stay inside it
    rng = __import__("random").Random(77)
    c = list(atlas3.members())[50]
    q = qap_of(c)
    for i in (1, 4, 6):
        b = q.maxbi.members[i].elements.keys
        w, w_hat = q.cells[(i, 1)], q.cells[(i, 0)]
        pair = sorted(w.keys | w_hat.keys)
        for _ in range(40):
            size = rng.choice((2, 3, 4))
            subset = rng.sample(pair, size)
            abelian = all(
                keys_commute(x, y, 3) for x, y in itertools.combinations(subset, 2)
            )
            coset_rule = all(
                (x ^ y) in b for x, y in itertools.combinations(subset, 2)
            )
            assert abelian == coset_rule


# -- co-quotient views --------------------------------------------------------


def test_coquotient_reference_pairing():
    q = qap_of(intrinsic_cartan(3))
    view = coquotient_view(q, (1, 1))
    assert view.irregular == ((0, 1), (1, 0))  # the center pairs with W-hat(B_1)
    assert len(view.regular) == 6
    assert view.degrade == ((1, 1), (0, 0))


def test_coquotient_rejects_degrade_center():
    q = qap_of(intrinsic_cartan(3))
    with pytest.raises(ValueError):
        coquotient_view(q, (0, 1))


def test_coquotient_conjugate_partition_law(atlas3):
    c = list(atlas3.members())[40]
    q = qap_of(c)
    center = (3, 1)
    view = coquotient_view(q, center)
    pairs = [view.irregular, *view.regular]
    for u, v in pairs:
        assert commutator_lands_in(q, u, center, v)
        assert commutator_lands_in(q, v, center, u)
        assert commutator_lands_in(q, u, v, center)


# -- splits and unions --------------------------------------------------------


def test_split_examples():
    q = qap_of(intrinsic_cartan(3))
    a, b = split_by_commutation(q.cells[(1, 1)], q.cells[(2, 1)])
    assert len(a) == 2 and len(b) == 2
    a, b = split_by_commutation(q.cells[(1, 1)], q.cells[(1, 1)])
    assert len(a) == 4 and len(b) == 0
    a, b = split_by_commutation(q.cells[(1, 1)], q.cells[(0, 1)])
    assert len(a) == 4 and len(b) == 0


def test_split_rejects_junk():
    q = qap_of(intrinsic_cartan(3))
    ragged = SpinorSet.parse(["S[000|001]", "S[011|001]"])  # not a sub-coset source
    with pytest.raises(ValueError):
        split_by_commutation(q.cells[(2, 1)], ragged)


def test_union_reference_cases():
    c = parse_label("C^{0}_{[100]}")
    q = qap_of(c)
    b1 = q.maxbi.members[1]
    assert union_is_cartan(b1, q.cells[(1, 1)]) == intrinsic_cartan(3)
    assert union_is_cartan(b1, q.cells[(1, 0)]) == parse_label("C^{1}_{[100]}")


def test_union_validates():
    q = qap_of(intrinsic_cartan(3))
    with pytest.raises(ValueError):
        union_is_cartan(q.maxbi.members[1], q.cells[(2, 1)])


def test_union_is_cartan_exhaustive_p3(atlas3):
    # every (maximal bi-subalgebra, conditioned subspace) union across all
    # 135 partitions forms a Cartan subalgebra (structural validation);
    # one partition gets the full maximality scan as the deep oracle
    from qap.subalgebra import is_cartan

    for n, c in enumerate(atlas3.members()):
        q = qap_of(c)
        for i in range(1, 8):
            for eps in (0, 1):
                merged = q.maxbi.members[i].elements | q.cells[(i, eps)]
                assert is_cartan(merged, scan=(n == 100))


def test_union_is_cartan_op_validates_and_returns(atlas3):
    c = list(atlas3.members())[100]
    q = qap_of(c)
    for i in range(1, 8):
        for eps in (0, 1):
            got = union_is_cartan(q.maxbi.members[i], q.cells[(i, eps)])
            assert got.p == 3


# -- sequences ----------------------------------------------------------------


def test_sequence_validation():
    q = qap_of(intrinsic_cartan(3))
    good = DecompositionSequence(q, ((1, 0), (2, 1), (4, 0)))
    assert [len(s) for s in good.steps] == [4, 4, 4]
    with pytest.raises(ValueError):
        DecompositionSequence(q, ((1, 0), (2, 1)))
    with pytest.raises(ValueError):
        DecompositionSequence(q, ((0, 1), (2, 1), (4, 0)))
    with pytest.raises(ValueError):
        DecompositionSequence(q, ((1, 0), (2, 1), (3, 0)))  # 3 = 1 xor 2
    with pytest.raises(ValueError):
        DecompositionSequence(q, ((1, 0), (1, 1), (4, 0)))


# -- emission -----------------------------------------------------------------


def test_render_table_shape():
    text = render_table(qap_of(intrinsic_cartan(2)))
    lines = text.splitlines()
    assert lines[0] == "C_[00]"
    assert sum(1 for ln in lines if ln.startswith("B_") and "| W:" in ln) == 3
    assert sum(1 for ln in lines if ln.startswith("B_") and " = {" in ln) == 3


def test_qap_json_keys():
    import json

    payload = json.loads(qap_to_json(qap_of(intrinsic_cartan(2))))
    assert payload["label"] == "C_[00]"
    assert set(payload["cells"]) == {
        f"B:{i}/eps:{e}" for i in range(4) for e in (0, 1)
    }
    assert payload["cells"]["B:0/eps:0"] == []
    assert cell_label((3, 1)) == "B:3/eps:1"
