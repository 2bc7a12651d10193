"""Fixture families: shapes, closure, determinism."""

from __future__ import annotations

import json

import pytest

from boundance import complexes, generate


def test_sheets_shape():
    doc = generate.sheets(3)
    K = complexes.from_json(doc)
    assert (K.size(0), K.size(1), K.size(2)) == (3, 3, 3)
    assert K.degrees() == [3, 3, 3]


def test_par_edges_shape():
    K = complexes.from_json(generate.par_edges(4))
    assert K.n == 1 and K.size(0) == 2 and K.size(1) == 4


def test_hollow_simplex_counts():
    # boundary of the (n+1)-simplex: C(n+2, d+1) simplices per dimension
    from math import comb

    for n in (1, 2, 3):
        K = complexes.from_json(generate.hollow_simplex(n))
        for d in range(n + 1):
            assert K.size(d) == comb(n + 2, d + 1), (n, d)


def test_tetra2_shape(tetra2):
    assert (tetra2.size(0), tetra2.size(1), tetra2.size(2)) == (5, 9, 7)
    assert [r.id for r in tetra2.tables[2]] == list("ABCDEFG")


def test_tetra2_subdiv_shape(tetra2_subdiv):
    K = tetra2_subdiv
    assert (K.size(0), K.size(1), K.size(2)) == (6, 12, 9)
    assert not K.has_id("D")


def test_random_complex_deterministic():
    a = generate.random_complex(2, 6, 0.4, seed=7)
    b = generate.random_complex(2, 6, 0.4, seed=7)
    assert json.dumps(a) == json.dumps(b)
    c = generate.random_complex(2, 6, 0.4, seed=8)
    assert json.dumps(a) != json.dumps(c)


def test_random_complex_closed_and_capped():
    for seed in range(12):
        doc = generate.random_complex(3, 6, 0.5, seed=seed, max_top=8)
        K = complexes.from_json(doc)  # re-validation checks closure
        assert K.size(K.n) <= 8


def test_family_dispatch_unknown():
    with pytest.raises(ValueError):
        generate.family("klein-bottle")


def test_family_param_validation():
    with pytest.raises(ValueError):
        generate.sheets(0)
    with pytest.raises(ValueError):
        generate.random_complex(2, 2, 0.5, seed=0)
