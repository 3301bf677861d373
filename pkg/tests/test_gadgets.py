import pytest

from multint.gadgets import QParams, build_q, rep_co_q_unit2interval, rep_co_q_unit3track
from multint.graph import Label, complement
from multint.representation import Kind, is_unit, verify_representation
from bruteforce import oracle_realizes


def test_qparams_validation():
    with pytest.raises(ValueError):
        QParams(0, 1)
    with pytest.raises(ValueError):
        QParams(1, 0)
    with pytest.raises(ValueError):
        QParams(1, 1, spacing=-2)
    p = QParams(2, 3)
    assert p.spacing == 10 * 2 * 3 + 2  # default: the vertex count
    assert p.vertex_count == 62
    assert QParams(1, 1, spacing=5).spacing == 5


def test_build_q_structure():
    for w, l in ((1, 1), (1, 2), (2, 1), (2, 2), (3, 2)):
        q = build_q(QParams(w, l))
        wl = w * l
        assert q.n == 10 * wl + w
        families = {}
        for v in q.sorted_vertices:
            families.setdefault(v.family, []).append(v.index)
        assert sorted(families["xo"]) == list(range(1, w * (l + 1) + 1))
        assert sorted(families["xe"]) == list(range(1, wl + 1))
        for fam in "ABCD":
            assert sorted(families[fam]) == list(range(1, 2 * wl + 1))
        assert max(q.degree(v) for v in q.sorted_vertices) <= 4
        # chains stop at the last slot: D_{2wl} only reaches its C partner
        assert q.degree(Label("D", 2 * wl)) == 1
        assert q.has_edge(Label("C", 2 * wl), Label("D", 2 * wl))
        if wl > 1:
            assert q.has_edge(Label("D", 1), Label("B", 2))


def test_build_q_smallest_case():
    q = build_q(QParams(1, 1))
    assert q.n == 11 and q.m == 11


def test_co_q_representations_realize():
    for w in (1, 2, 3):
        for l in (1, 2, 3):
            params = QParams(w, l)
            target = complement(build_q(params))
            rep2 = rep_co_q_unit2interval(params)
            assert rep2.kind is Kind.INTERVAL and rep2.t == 2
            assert verify_representation(rep2, target).ok, (w, l)
            assert is_unit(rep2) == 6 * params.spacing
            rep3 = rep_co_q_unit3track(params)
            assert rep3.kind is Kind.TRACK and rep3.t == 3
            assert verify_representation(rep3, target).ok, (w, l)
            assert is_unit(rep3) == 4 * params.spacing


def test_co_q_oracle_crosscheck_small():
    for w, l in ((1, 1), (2, 1), (1, 2)):
        params = QParams(w, l)
        target = complement(build_q(params))
        assert oracle_realizes(rep_co_q_unit2interval(params), target)
        assert oracle_realizes(rep_co_q_unit3track(params), target)


def test_undersized_spacing_fails_honestly():
    params = QParams(2, 2, spacing=1)
    target = complement(build_q(params))
    assert not verify_representation(rep_co_q_unit2interval(params), target).ok
    assert not verify_representation(rep_co_q_unit3track(params), target).ok
