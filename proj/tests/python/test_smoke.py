"""Smoke tests for the python bindings."""

import os

import pytest

import demchar


def test_root_system_basics():
    rs = demchar.RootSystem("G", 2)
    assert rs.rank == 2
    assert rs.num_positive_roots == 6
    assert rs.theta == [2, 3]
    assert rs.d == [1, 3]
    assert rs.coweight_basis() == [[1, 0], [0, 3]]
    assert rs.is_dominant([1, 0])
    assert not rs.is_dominant([-1, 0])


def test_invalid_type_raises():
    with pytest.raises(ValueError):
        demchar.RootSystem("D", 2)


def test_dimensions_and_characters():
    a1 = demchar.RootSystem("A", 1)
    assert demchar.demazure_dim(a1, 1, [2]) == 4
    terms = demchar.demazure_character(a1, 1, [1])
    assert ([1], 0, 1, 1) in [tuple(t) for t in terms]
    graded = demchar.demazure_character(a1, 1, [2], graded=True)
    assert ([0], 1, 1, 1) in [tuple(t) for t in graded]

    a2 = demchar.RootSystem("A", 2)
    assert demchar.weyl_dim(a2, [1, 1]) == 8
    assert demchar.demazure_dim(a2, 1, [1, 1]) == 9


def test_decompose_and_tensor():
    a2 = demchar.RootSystem("A", 2)
    parts = demchar.decompose_demazure(a2, 2, [1, 1])
    assert parts == [([1, 1], 1)]
    assert demchar.tensor_mult(a2, [1, 1], [1, 0], [0, 1]) == 1


def test_steinberg():
    c2 = demchar.RootSystem("C", 2)
    mu, lam0 = demchar.steinberg_split(c2, 1, [3, 1])
    assert mu == [2, 1]
    assert lam0 == [1, 0]
    assert demchar.verify_factorization(c2, 1, [3, 1])


def test_key_proposition():
    a2 = demchar.RootSystem("A", 2)
    assert demchar.key_search_brute(a2, 1, [1, 1]) == [1, 0]
    g2 = demchar.RootSystem("G", 2)
    assert demchar.key_construct(g2, 1, [1, 0]) == [1, 0]
    f4 = demchar.RootSystem("F", 4)
    assert demchar.key_valid(f4, 2, [1, 0, 2, 0], [0, 1, 0, 0])
    assert demchar.dominant_witness_exists(f4, 2, [1, 0, 2, 0], [0, 1, 0, 0])


def test_verify_table_fixture():
    here = os.path.dirname(os.path.abspath(__file__))
    fixture = os.path.join(here, os.pardir, os.pardir, "data", "f4_l2.csv")
    report = demchar.verify_table(fixture)
    assert report["ok"]
    assert report["rows"] == 64
    assert report["passing_convention"] == "bourbaki"


def test_qsystem_and_schur():
    a2 = demchar.RootSystem("A", 2)
    assert demchar.minuscule(a2, 1)
    assert demchar.qsystem_identity(a2, 2, 1, [1, 1])
    assert demchar.classical_qsystem(a2, 2, 1)
    assert demchar.schur_compare(a2, 2, 1, [0, 1])


def test_prime_certificate():
    a1 = demchar.RootSystem("A", 1)
    verdict = demchar.prime_certificate(a1, 1, [2])
    assert not verdict["prime"]
    assert verdict["factor1"] == [([1], 1)]
    a2 = demchar.RootSystem("A", 2)
    assert demchar.prime_certificate(a2, 2, [1, 1])["prime"]
