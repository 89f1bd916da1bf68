"""Acceptance suite: one test per criterion, all comparisons exact.

Each test prints a single PASS line once its assertions hold; run with
``pytest tests/test_acceptance.py -v -s`` to see them.
"""

import json
import random
import time

import pytest

import oracle
from conftest import (
    random_admissible_array,
    random_array,
    random_array_with_denominators,
    random_boundary_array,
    random_invertible,
    random_scalar,
)
from tdpair121 import (
    BasisId,
    Field,
    Matrix,
    ParameterArray,
    QQ,
    SWAP,
    FLIP_DUAL,
    FLIP_PRIMARY,
    admissible,
    canonical_matrices,
    common_invariant_subspace,
    construct,
    derived_params,
    eta_vectors,
    extract_parameter_array,
    relative,
    represent,
    represent_formula,
    transition_formula,
    transition_numeric,
    verify_td_system,
)
from tdpair121.cli import main as cli_main

N_PER_FIELD = 200
GF101 = Field(101)


class Battery:
    def __init__(self):
        rng = random.Random(20210121)
        self.arrays = []
        for field in (QQ, GF101):
            self.arrays += [random_admissible_array(rng, field)
                            for _ in range(N_PER_FIELD)]
        start = time.time()
        self.systems = [construct(pa) for pa in self.arrays]
        self.etas = [eta_vectors(tds) for tds in self.systems]
        self.build_seconds = time.time() - start


@pytest.fixture(scope="module")
def battery():
    return Battery()


def test_criterion_01_classification_soundness(battery):
    start = time.time()
    for pa, tds in zip(battery.arrays, battery.systems):
        report = verify_td_system(tds.A, tds.Astar, tds.theta, tds.thetastar)
        assert report.overall, (pa.to_json(), report.to_json())
        assert report.shape == (1, 2, 1)
        assert report.skipped == ()
    elapsed = battery.build_seconds + time.time() - start
    assert elapsed < 30.0, f"construct+verify took {elapsed:.1f}s"
    print(f"\nACCEPTANCE 1 PASS - {2 * N_PER_FIELD} admissible arrays "
          f"construct and verify with shape (1,2,1) in {elapsed:.1f}s")


def test_criterion_02_roundtrip(battery):
    for pa, tds in zip(battery.arrays, battery.systems):
        assert extract_parameter_array(tds) == pa
    print(f"\nACCEPTANCE 2 PASS - extraction inverts construction on all "
          f"{len(battery.arrays)} arrays")


def test_criterion_03_derived_parameter_identity(battery):
    for pa in battery.arrays:
        dp = derived_params(pa)
        assert pa.varphi - dp.varphi1 * dp.varphi2 == pa.phi - dp.phi1 * dp.phi2
    rng = random.Random(33550336)
    checked = 0
    for field in (QQ, GF101):
        for _ in range(5000):
            pa = random_array_with_denominators(rng, field)
            dp = derived_params(pa)
            assert pa.varphi - dp.varphi1 * dp.varphi2 == pa.phi - dp.phi1 * dp.phi2
            checked += 1
    print(f"\nACCEPTANCE 3 PASS - product identity exact on battery plus "
          f"{checked} random arrays")


def test_criterion_04_worked_instance():
    pa = ParameterArray.make(QQ, (1, 0, -1), (1, 0, -1), 2, 1)
    dp = derived_params(pa)
    got = (dp.varphi1.val, dp.varphi2.val, dp.phi1.val, dp.phi2.val)
    assert got == oracle.P0_DERIVED
    assert got == oracle.derived_formulas(
        oracle.P0_THETA, oracle.P0_THETASTAR, oracle.P0_VARPHI, oracle.P0_PHI)
    assert (pa.varphi - dp.varphi1 * dp.varphi2).val == oracle.P0_IDENTITY_SIDES
    assert (pa.phi - dp.phi1 * dp.phi2).val == oracle.P0_IDENTITY_SIDES
    print("\nACCEPTANCE 4 PASS - worked instance matches the independent "
          "formula oracle: derived (-5/4, -5/4, 3/4, 3/4), identity sides 7/16")


def test_criterion_05_representation_matrices(battery):
    for pa, tds, eta in zip(battery.arrays, battery.systems, battery.etas):
        diag_a = represent(tds, "A", BasisId.EIG_A, eta)
        t0, t1, t2 = pa.theta
        s0, s1, s2 = pa.thetastar
        assert diag_a == Matrix.diagonal(pa.field, [t0, t1, t1, t2])
        diag_s = represent(tds, "Astar", BasisId.EIG_ASTAR, eta)
        assert diag_s == Matrix.diagonal(pa.field, [s0, s1, s1, s2])
        for which in ("A", "Astar"):
            for basis in BasisId:
                assert represent(tds, which, basis, eta) == \
                    represent_formula(pa, which, basis)
    print(f"\nACCEPTANCE 5 PASS - all 12 representation matrices match the "
          f"closed forms on all {len(battery.arrays)} arrays")


def test_criterion_06_transition_matrices(battery):
    all_bases = list(BasisId)
    for pa, tds, eta in zip(battery.arrays, battery.systems, battery.etas):
        eye = Matrix.identity(pa.field, 4)
        formula = {}
        for frm in all_bases:
            for to in all_bases:
                if frm is to:
                    continue
                f = transition_formula(pa, frm, to)
                formula[frm, to] = f
                assert transition_numeric(tds, frm, to, eta) == f
        for i, frm in enumerate(all_bases):
            for to in all_bases[i + 1:]:
                assert formula[frm, to] * formula[to, frm] == eye
        for u in all_bases:
            for v in all_bases:
                if u is v:
                    continue
                left = formula[u, v]
                for w in all_bases:
                    if w is u or w is v:
                        continue
                    assert left * formula[v, w] == formula[u, w]
    print(f"\nACCEPTANCE 6 PASS - 30 transition formulas, 15 inverse pairs "
          f"and all triangle compositions exact on all {len(battery.arrays)} arrays")


def test_criterion_07_dihedral_relations():
    rng = random.Random(8128)
    gens = (SWAP, FLIP_DUAL, FLIP_PRIMARY)
    checked = 0
    for _ in range(1000):
        field = QQ if rng.random() < 0.5 else GF101
        pa = random_array(rng, field)
        for g in gens:
            assert relative(relative(pa, g), g) == pa
        assert relative(relative(pa, FLIP_PRIMARY), SWAP) == \
            relative(relative(pa, SWAP), FLIP_DUAL)
        assert relative(relative(pa, FLIP_DUAL), SWAP) == \
            relative(relative(pa, SWAP), FLIP_PRIMARY)
        assert relative(relative(pa, FLIP_DUAL), FLIP_PRIMARY) == \
            relative(relative(pa, FLIP_PRIMARY), FLIP_DUAL)
        checked += 1
    from tdpair121 import D4Word
    rng2 = random.Random(496)
    invariant = 0
    for _ in range(200):
        field = QQ if rng2.random() < 0.5 else GF101
        pa = random_array(rng2, field)
        ok = admissible(pa).ok
        for word in D4Word.all_elements():
            assert admissible(relative(pa, word)).ok == ok
        invariant += 1
    print(f"\nACCEPTANCE 7 PASS - dihedral relations hold on {checked} arrays; "
          f"admissibility orbit-invariant on {invariant}")


def test_criterion_08_boundary_necessity():
    rng = random.Random(137)
    for k in range(50):
        field = QQ if k % 2 == 0 else GF101
        pa = random_boundary_array(rng, field)
        a, astar = canonical_matrices(pa)
        dp = derived_params(pa)
        z, o = field.zero, field.one
        w = (z, dp.varphi2, -o, z)
        assert a.apply(w) == tuple(pa.theta[1] * x for x in w)
        assert astar.apply(w) == tuple(pa.thetastar[1] * x for x in w)
        report = verify_td_system(a, astar, pa.theta, pa.thetastar)
        assert report.diagonalizable_a and report.diagonalizable_astar
        assert report.tridiagonal_astar_e and report.tridiagonal_a_estar
        assert not report.irreducible
        assert report.witness is not None and report.witness.dim == 1
        assert report.witness.is_invariant(a) and report.witness.is_invariant(astar)
    print("\nACCEPTANCE 8 PASS - 50 engineered boundary arrays admit the "
          "predicted common eigenvector and fail exactly the irreducibility axiom")


def test_criterion_09_irreducibility_oracle_equivalence():
    rng = random.Random(2891)
    for p in (2, 3):
        field = Field(p)
        subspaces = oracle.all_subspaces_mod(p)
        assert len(subspaces) == oracle.gaussian_binomial_total(p)
        agreements = 0
        for _ in range(100):
            s = random_invertible(rng, field, Matrix)
            d = Matrix.diagonal(field, [random_scalar(rng, field)
                                        for _ in range(4)])
            a = s * d * s.invert()
            astar = Matrix(field, [[random_scalar(rng, field) for _ in range(4)]
                                   for _ in range(4)])
            got = common_invariant_subspace(a, astar)
            expected = oracle.brute_force_common_invariant(
                [[x.val for x in row] for row in a.rows],
                [[x.val for x in row] for row in astar.rows],
                p, subspaces)
            assert (got is None) == (expected is None)
            if got is not None:
                assert 0 < got.dim < 4
                assert got.is_invariant(a) and got.is_invariant(astar)
            agreements += 1
        print(f"\nACCEPTANCE 9 PASS (GF({p})) - invariant-subspace search agrees "
              f"with brute-force enumeration on {agreements} random pairs")


def test_criterion_10_enumeration_sanity(capsys):
    assert cli_main(["enumerate", "--p", "2"]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    assert doc2["admissible"] == 0

    assert cli_main(["enumerate", "--p", "3", "--orbits"]) == 0
    doc3 = json.loads(capsys.readouterr().out)
    count_i, count_i_ii, adm = oracle.enumerate_arrays_mod(3)
    assert doc3["pass_i"] == count_i
    assert doc3["pass_i_ii"] == count_i_ii
    assert doc3["admissible"] == len(adm)
    n_orbits, sizes = oracle.d4_orbit_stats(adm)
    assert doc3["orbits"]["count"] == n_orbits
    assert doc3["orbits"]["sizes"] == {str(k): v for k, v in sizes.items()}
    total = sum(int(k) * v for k, v in doc3["orbits"]["sizes"].items())
    assert total == doc3["admissible"]
    print("\nACCEPTANCE 10 PASS - enumeration over GF(2) is empty and GF(3) "
          "matches the 6561-array brute-force oracle, orbits partitioning "
          "the admissible set")
