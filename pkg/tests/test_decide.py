"""Boundance decisions: packing, deletion robustness, surgery, cobordance."""

from __future__ import annotations

import itertools
import random

import pytest

from boundance import complexes, corpus, decide, generate
from boundance.decide import UNBOUNDED, NotACycle

from conftest import brute_k_boundant, brute_robust, triangle_cycle


def tri_ref_set(K, ids):
    return {K.id_ref(i) for i in ids}


# -- is_boundary ---------------------------------------------------------


def test_is_boundary_trivial(tetra2):
    P = decide.is_boundary(tetra2, tetra2.chain(1))
    assert P is not None and P.is_zero


def test_is_boundary_tetra2(tetra2):
    c = triangle_cycle(tetra2)
    P = decide.is_boundary(tetra2, c)
    assert P is not None
    assert tetra2.boundary(P) == c
    assert tetra2.ids_of(P) == ["A"]


def test_is_boundary_absent():
    K = complexes.build(2, ["1", "2", "3"], [
        {"dim": 1, "id": "e12", "vertices": ["1", "2"], "faces": ["1", "2"]},
        {"dim": 1, "id": "e13", "vertices": ["1", "3"], "faces": ["1", "3"]},
        {"dim": 1, "id": "e23", "vertices": ["2", "3"], "faces": ["2", "3"]},
    ])
    assert K.size(2) == 0
    assert decide.is_boundary(K, triangle_cycle(K)) is None


def test_is_boundary_rejects_non_cycle(tetra2):
    with pytest.raises(NotACycle):
        decide.is_boundary(tetra2, tetra2.chain(1, ["e12"]))


# -- primal --------------------------------------------------------------


def test_disjoint_chains_tetra2_witness(tetra2):
    c = triangle_cycle(tetra2)
    assert brute_k_boundant(tetra2, [c], 3)
    w = decide.disjoint_chains(tetra2, [c], 3)
    assert w is not None
    w.validate(tetra2, [c])
    assert [tetra2.ids_of(ch) for ch in w.chains] == [["A"], ["B", "C", "D"], ["E", "F", "G"]]


def test_disjoint_chains_sheets2_absent(sheets):
    K = sheets(2)
    c = triangle_cycle(K)
    assert not brute_k_boundant(K, [c], 3)
    assert decide.disjoint_chains(K, [c], 3) is None


def test_trivial_cycle_always_boundant(sheets):
    K = sheets(2)
    trivial = K.chain(1)
    w = decide.disjoint_chains(K, [triangle_cycle(K), trivial], 5)
    assert w is not None
    assert all(ch.is_zero for ch in w.chains)
    w.validate(K, [triangle_cycle(K), trivial])


def test_disjoint_chains_k0(tetra2):
    w = decide.disjoint_chains(tetra2, [triangle_cycle(tetra2)], 0)
    assert w is not None and w.chains == ()


# -- dual ----------------------------------------------------------------


def test_robust_tetra2(tetra2):
    c = triangle_cycle(tetra2)
    assert decide.robust_under_deletion(tetra2, [c], 3) is True
    assert decide.robust_under_deletion(tetra2, [c], 4) is False
    # oracle detail: dropping A, B, E kills every triangle adjacent to e12
    K = tetra2.delete_top_simplices(tri_ref_set(tetra2, ["A", "B", "E"]))
    assert decide.is_boundary(K, triangle_cycle(K)) is None


def test_robust_sheets(sheets):
    for k in (1, 2, 3, 4):
        K = sheets(k)
        c = triangle_cycle(K)
        assert decide.robust_under_deletion(K, [c], k) is True
        assert decide.robust_under_deletion(K, [c], k + 1) is False


def test_robust_matches_bruteforce_corpus():
    for inst in corpus.instances(18, seed=3):
        if inst.complex.size(inst.complex.n) > 6:
            continue
        for k in (1, 2, 3):
            got = decide.robust_under_deletion(inst.complex, inst.cycles, k)
            assert got == brute_robust(inst.complex, inst.cycles, k), inst.name


def test_primal_matches_bruteforce_corpus():
    for inst in corpus.instances(18, seed=4):
        if inst.complex.size(inst.complex.n) > 6:
            continue
        for k in (1, 2, 3):
            got = decide.disjoint_chains(inst.complex, inst.cycles, k) is not None
            assert got == brute_k_boundant(inst.complex, inst.cycles, k), inst.name


# -- dispatch ------------------------------------------------------------


def test_is_k_boundant_all_methods(sheets):
    K = sheets(3)
    c = triangle_cycle(K)
    assert decide.is_k_boundant(K, [c], 3, "all") is True
    assert decide.is_k_boundant(K, [c], 4, "all") is False
    trivial = K.chain(1)
    assert decide.is_k_boundant(K, [trivial], 7, "all") is True


def test_monotonicity_in_k(tetra2):
    c = triangle_cycle(tetra2)
    verdicts = [decide.is_k_boundant(tetra2, [c], k, "all") for k in range(1, 6)]
    assert verdicts == sorted(verdicts, reverse=True)


def test_method_validation(tetra2):
    c = triangle_cycle(tetra2)
    with pytest.raises(ValueError):
        decide.is_k_boundant(tetra2, [c], 1, "psychic")
    with pytest.raises(ValueError):
        decide.is_k_boundant(tetra2, [c, tetra2.chain(1)], 1, "recursive")


def test_disagreement_detector_fires(tetra2, monkeypatch):
    # sabotage the dual route: the detector must trip with a reproducer
    monkeypatch.setattr(decide, "robust_under_deletion", lambda K, L, k: False)
    c = triangle_cycle(tetra2)
    with pytest.raises(decide.MethodDisagreement) as exc:
        decide.is_k_boundant(tetra2, [c], 2, "all")
    rep = exc.value.reproducer
    assert rep["k"] == 2 and rep["verdicts"]["primal"] != rep["verdicts"]["dual"]
    assert rep["complex"]["n"] == 2


# -- max boundance --------------------------------------------------------


def test_max_boundance(tetra2, sheets):
    assert decide.max_boundance(tetra2, [triangle_cycle(tetra2)]) == 3
    assert decide.max_boundance(sheets(5), [triangle_cycle(sheets(5))]) == 5
    assert decide.max_boundance(tetra2, [tetra2.chain(1)]) is UNBOUNDED
    with pytest.raises(ValueError):
        decide.max_boundance(tetra2, [])


def test_max_boundance_zero_when_nothing_bounds():
    # triangle graph declared as a 2-complex with an empty top table
    G = generate.build_family("hollow-simplex", n=1)
    K = complexes.build(2, ["1", "2", "3"], G.to_json()["simplices"])
    assert decide.max_boundance(K, [triangle_cycle(K)]) == 0


def test_parallel_copies_never_decrease_max(sheets):
    rng = random.Random(11)
    for inst in itertools.islice(corpus.instances(10, seed=7), 10):
        K = inst.complex
        if K.size(K.n) == 0 or any(c.is_zero for c in inst.cycles):
            continue
        before = decide.max_boundance(K, inst.cycles)
        doc = K.to_json()
        dup = dict(next(s for s in doc["simplices"] if s["dim"] == K.n))
        dup["id"] = dup["id"] + "-copy"
        doc["simplices"].append(dup)
        K2 = complexes.from_json(doc)
        cycles2 = [complexes.transfer_chain(K, c, K2) for c in inst.cycles]
        assert decide.max_boundance(K2, cycles2) >= before


# -- closure and surgery ---------------------------------------------------


def test_closure_set_empty(tetra2):
    assert decide.closure_set(tetra2, tetra2.chain(2)) == frozenset()


def test_closure_set_sheets(sheets):
    K = sheets(2)
    got = decide.closure_set(K, K.chain(2, ["T1"]))
    assert got == {K.id_ref("T1")}


def test_closure_set_tetra2(tetra2):
    K = tetra2
    got = decide.closure_set(K, K.chain(2, ["E", "F", "G"]))
    want = tri_ref_set(K, ["E", "F", "G", "e15", "e25", "e35", "5"])
    assert got == want


def test_surgery_identity(tetra2):
    K2 = decide.surgery(tetra2, tetra2.chain(2), tetra2.chain(1))
    assert K2 == tetra2


def test_surgery_sheets(sheets):
    K = sheets(2)
    K2 = decide.surgery(K, K.chain(2, ["T1"]), triangle_cycle(K))
    assert K2.size(2) == 1 and K2.size(1) == 3 and K2.size(0) == 3
    assert not K2.has_id("T1") and K2.has_id("T2")


def test_surgery_tetra2(tetra2):
    c = triangle_cycle(tetra2)
    K2 = decide.surgery(tetra2, tetra2.chain(2, ["E", "F", "G"]), c)
    assert (K2.size(0), K2.size(1), K2.size(2)) == (4, 6, 4)
    for gone in ("E", "F", "G", "e15", "e25", "e35", "5"):
        assert not K2.has_id(gone)


def test_surgery_boundary_mismatch(tetra2):
    with pytest.raises(ValueError):
        decide.surgery(tetra2, tetra2.chain(2, ["A"]), tetra2.chain(1, ["e12"]))


# -- recursive -------------------------------------------------------------


def test_recursive_k0(tetra2):
    assert decide.recursive_boundant(tetra2, triangle_cycle(tetra2), 0) is True


def test_recursive_sheets(sheets):
    K = sheets(3)
    c = triangle_cycle(K)
    assert decide.recursive_boundant(K, c, 3) is True
    assert decide.recursive_boundant(K, c, 4) is False


def test_recursive_matches_flat(tetra2):
    c = triangle_cycle(tetra2)
    for k in range(0, 6):
        flat = decide.is_k_boundant(tetra2, [c], k, "primal")
        assert decide.recursive_boundant(tetra2, c, k) == flat


def recursive_no_memo(K, c, k):
    """Reference for the memoized recursion: literal exists-P descent."""
    if k == 0 or c.is_zero:
        return True
    from boundance.gf2 import kernel

    m = K.size(K.n)
    rows = list(K.boundary_matrix(K.n).rows)
    full = (1 << m) - 1
    base = kernel.solve_masked(rows, m, c.mask, full)
    if base is None:
        return False
    sols = [base]
    for nv in kernel.nullspace_masked(rows, m, full):
        sols += [s ^ nv for s in sols]
    for sol in sorted(sols):
        K2 = decide.surgery(K, K.chain_from_mask(K.n, sol), c)
        if recursive_no_memo(K2, complexes.transfer_chain(K, c, K2), k - 1):
            return True
    return False


def test_recursive_memo_is_transparent():
    for inst in corpus.instances(14, seed=21):
        K = inst.complex
        if K.size(K.n) > 5:
            continue
        for c in inst.cycles[:1]:
            for k in (1, 2, 3):
                assert decide.recursive_boundant(K, c, k) == recursive_no_memo(K, c, k)


# -- cobordance --------------------------------------------------------------


def test_cobordant_reflexive(tetra2):
    c = triangle_cycle(tetra2)
    for k in (1, 3, 7):
        assert decide.cobordant(tetra2, c, c, k) is True


def test_cobordant_tetra2(tetra2):
    K = tetra2
    b_cycle = K.boundary(K.chain(2, ["B"]))
    c_cycle = K.boundary(K.chain(2, ["C"]))
    assert decide.cobordant(K, b_cycle, c_cycle, 2) is True


def test_cobordant_sheets2(sheets):
    K = sheets(2)
    assert decide.cobordant(K, triangle_cycle(K), K.chain(1), 3) is False


def test_cobordance_classes_singleton(tetra2):
    assert decide.cobordance_classes(tetra2, [triangle_cycle(tetra2)], 2) == [[0]]


def test_cobordance_classes_sheets2(sheets):
    K = sheets(2)
    classes = decide.cobordance_classes(K, [triangle_cycle(K), K.chain(1)], 3)
    assert classes == [[0], [1]]


def test_cobordance_classes_k1_is_homology(tetra2):
    # 1-cobordant = homologous; all bounding cycles collapse to one class
    K = tetra2
    from boundance.gf2 import kernel

    M = K.boundary_matrix(1)
    cyc_masks = kernel.nullspace_masked(list(M.rows), M.ncols, (1 << M.ncols) - 1)
    cycles = [K.chain_from_mask(1, m) for m in cyc_masks]
    cycles.append(K.chain(1))
    classes = decide.cobordance_classes(K, cycles, 1)
    bound_masks = {K.boundary(K.chain_from_mask(2, p)).mask for p in range(1 << 7)}
    bounding = {i for i, c in enumerate(cycles) if c.mask in bound_masks}
    for cls in classes:
        assert set(cls) <= bounding or not (set(cls) & bounding)
    # every bounding cycle in the input shares one class
    joint = [cls for cls in classes if set(cls) & bounding]
    assert len(joint) == 1


def test_witnesses_validate_on_corpus():
    for inst in corpus.instances(15, seed=9):
        for k in (1, 2, 3):
            w = decide.disjoint_chains(inst.complex, inst.cycles, k)
            if w is not None:
                w.validate(inst.complex, inst.cycles)


def test_degree_bound_on_single_cycles():
    for inst in corpus.instances(20, seed=12):
        K = inst.complex
        for c in inst.cycles:
            if c.is_zero:
                continue
            for k in (1, 2, 3, 4):
                if decide.is_k_boundant(K, [c], k, "primal"):
                    degs = [K.degrees()[i] for i in c.vector.support()]
                    assert min(degs) >= k


def test_concurrent_evaluation_matches_sequential():
    # decisions are pure; sharing complexes across threads must not change verdicts
    from concurrent.futures import ThreadPoolExecutor

    jobs = [
        (inst.complex, inst.cycles, k)
        for inst in corpus.instances(24, seed=31)
        for k in (1, 2, 3)
    ]
    sequential = [decide.is_k_boundant(K, cs, k, "all") for K, cs, k in jobs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(lambda j: decide.is_k_boundant(*j, "all"), jobs))
    assert threaded == sequential
