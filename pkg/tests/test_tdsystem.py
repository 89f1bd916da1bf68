import pytest

import oracle
from conftest import (
    random_admissible_array,
    random_boundary_array,
    random_invertible,
    random_scalar,
)
from tdpair121 import (
    Decomposition,
    Field,
    Matrix,
    QQ,
    Subspace,
    TDSystem,
    canonical_matrices,
    common_invariant_subspace,
    construct,
    find_td_orderings,
    shape,
    split_decomposition,
    verify_split_actions,
    verify_td_system,
)


@pytest.fixture
def tds(p0):
    return construct(p0)


def test_verify_worked_instance(tds):
    report = verify_td_system(tds.A, tds.Astar, tds.theta, tds.thetastar)
    assert report.overall
    assert report.diagonalizable_a and report.diagonalizable_astar
    assert report.tridiagonal_astar_e and report.tridiagonal_a_estar
    assert report.irreducible and report.witness is None
    assert report.shape == (1, 2, 1)
    assert report.skipped == ()


def test_verify_four_distinct_eigenvalues_fails_first_axiom():
    m = Matrix.diagonal(QQ, [0, 1, 2, 3])
    report = verify_td_system(m, m, (QQ(0), QQ(1), QQ(2)), (QQ(0), QQ(1), QQ(2)))
    assert not report.diagonalizable_a and not report.diagonalizable_astar
    assert not report.overall
    assert "irreducible" in report.skipped
    assert report.shape is None


def test_verify_wrong_spectrum_reported_not_raised(tds):
    report = verify_td_system(tds.A, tds.Astar,
                              (QQ(5), QQ(6), QQ(7)), tds.thetastar)
    assert not report.diagonalizable_a
    assert report.diagonalizable_astar
    assert not report.overall


def test_verify_repeated_eigenvalue_reported(tds):
    report = verify_td_system(tds.A, tds.Astar,
                              (QQ(1), QQ(1), QQ(0)), tds.thetastar)
    assert not report.diagonalizable_a


def test_verify_malformed_raises(tds):
    with pytest.raises(ValueError):
        verify_td_system(tds.A, tds.Astar, (QQ(1), QQ(0)), tds.thetastar)
    small = Matrix(QQ, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        verify_td_system(small, small, tds.theta, tds.thetastar)


def test_verify_boundary_array_fails_only_irreducibility(rng):
    pa = random_boundary_array(rng, QQ)
    a, astar = canonical_matrices(pa)
    report = verify_td_system(a, astar, pa.theta, pa.thetastar)
    assert report.diagonalizable_a and report.diagonalizable_astar
    assert report.tridiagonal_astar_e and report.tridiagonal_a_estar
    assert not report.irreducible
    w = report.witness
    assert w is not None and w.dim == 1
    assert w.is_invariant(a) and w.is_invariant(astar)
    assert "witness" in report.to_json()


def test_verify_irreducibility_skipped_when_tridiagonality_fails():
    # diagonal against a lower-triangular partner with a far corner entry:
    # axioms (i)-(iii) hold, the tridiagonal axiom fails, so the
    # invariant-subspace check is skipped rather than run
    a = Matrix.diagonal(QQ, [0, 1, 1, 2])
    astar = Matrix(QQ, [[3, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [1, 0, 0, 5]])
    report = verify_td_system(a, astar, (QQ(0), QQ(1), QQ(2)),
                              (QQ(3), QQ(4), QQ(5)))
    assert report.diagonalizable_a and report.diagonalizable_astar
    assert not report.tridiagonal_astar_e
    assert not report.irreducible and not report.overall
    assert report.skipped == ("irreducible",)


def test_every_admissible_array_over_gf3_constructs_and_verifies():
    """Exhaustive small-characteristic check: all 108 admissible arrays."""
    field = Field(3)
    _, _, arrays = oracle.enumerate_arrays_mod(3)
    assert len(arrays) == oracle.GF3_ADMISSIBLE
    for arr in arrays:
        pa_theta = tuple(field(x) for x in arr[0:3])
        pa_thetastar = tuple(field(x) for x in arr[3:6])
        from tdpair121 import ParameterArray, extract_parameter_array
        pa = ParameterArray(field, pa_theta, pa_thetastar,
                            field(arr[6]), field(arr[7]))
        sys_ = construct(pa)
        report = verify_td_system(sys_.A, sys_.Astar, sys_.theta, sys_.thetastar)
        assert report.overall and report.shape == (1, 2, 1), arr
        assert extract_parameter_array(sys_) == pa


def test_find_orderings_worked_instance(tds):
    pairs = find_td_orderings(tds.A, tds.Astar)
    assert len(pairs) == oracle.P0_ORDERING_PAIR_COUNT
    found = {(tuple(str(x) for x in th), tuple(str(x) for x in ts))
             for th, ts in pairs}
    fwd = ("1", "0", "-1")
    rev = ("-1", "0", "1")
    assert found == {(fwd, fwd), (fwd, rev), (rev, fwd), (rev, rev)}


def test_find_orderings_closed_under_reversals(rng, gf101):
    for field in (QQ, gf101):
        pa = random_admissible_array(rng, field)
        sys_ = construct(pa)
        pairs = set(find_td_orderings(sys_.A, sys_.Astar))
        for th, ts in pairs:
            assert (th[::-1], ts) in pairs
            assert (th, ts[::-1]) in pairs
            assert (th[::-1], ts[::-1]) in pairs


def test_find_orderings_junk_pair_empty():
    # repeated-eigenvalue diagonal against a generic conjugated diagonal:
    # both diagonalizable with 3 eigenvalues, no ordering tridiagonalizes
    a = Matrix.diagonal(QQ, [0, 0, 1, 2])
    s = Matrix(QQ, [[1, -1, 2, -1], [3, 2, 3, 2], [2, 1, -3, 3], [0, 3, -2, 2]])
    astar = s * Matrix.diagonal(QQ, [3, 4, 4, 5]) * s.invert()
    assert find_td_orderings(a, astar) == []


def test_find_orderings_wrong_eigenvalue_count():
    eye = Matrix.identity(QQ, 4)
    with pytest.raises(ValueError):
        find_td_orderings(eye, eye)


def test_find_orderings_symmetric_in_the_pair(tds):
    direct = find_td_orderings(tds.A, tds.Astar)
    swapped = find_td_orderings(tds.Astar, tds.A)
    assert {(ts, th) for th, ts in direct} == set(swapped)


def test_split_decomposition_eigenspace_rows(tds):
    spaces = [Subspace(QQ, 4, tds.A.shift(t).kernel()) for t in tds.theta]
    duals = [Subspace(QQ, 4, tds.Astar.shift(t).kernel()) for t in tds.thetastar]
    assert split_decomposition(tds, Decomposition.Z_D) == spaces
    assert split_decomposition(tds, Decomposition.ZSTAR_DSTAR) == duals


def test_split_decomposition_first_row(tds):
    comps = split_decomposition(tds, Decomposition.ZSTAR_D)
    assert [c.dim for c in comps] == [1, 2, 1]
    assert comps[0] == Subspace.column_space(tds.Estar[0])


def test_split_components_direct_sum(rng, gf101, tds):
    systems = [tds]
    for field in (QQ, gf101):
        systems.append(construct(random_admissible_array(rng, field)))
    for sys_ in systems:
        for dec in Decomposition:
            comps = split_decomposition(sys_, dec)
            assert sum(c.dim for c in comps) == 4
            assert (comps[0] + comps[1] + comps[2]).dim == 4


def test_shape_consistent_across_decompositions(rng, gf101, tds):
    assert shape(tds) == (1, 2, 1)
    for field in (QQ, gf101):
        sys_ = construct(random_admissible_array(rng, field))
        dims = shape(sys_)
        assert dims == (1, 2, 1)
        assert dims[0] == dims[2] and dims[0] <= dims[1]
        for dec in Decomposition:
            assert tuple(c.dim for c in split_decomposition(sys_, dec)) == dims


def test_split_actions_worked_instance(tds):
    assert verify_split_actions(tds)


def test_split_actions_eigenrow_annihilation(tds):
    comps = split_decomposition(tds, Decomposition.Z_D)
    for i, comp in enumerate(comps):
        m = tds.A.shift(tds.theta[i])
        for v in comp.basis:
            assert all(x.is_zero for x in m.apply(v))


def test_split_actions_detect_corruption(p0, tds):
    rows = [list(r) for r in tds.Astar.rows]
    rows[0][3] = QQ(1)  # single corrupted entry
    corrupted = Matrix(QQ, rows)
    bad = TDSystem(tds.A, corrupted, tds.theta, tds.thetastar, tds.E, tds.Estar)
    assert not verify_split_actions(bad)


def test_split_actions_random_systems(rng, gf101):
    for field in (QQ, gf101):
        assert verify_split_actions(construct(random_admissible_array(rng, field)))


# -- invariant subspace search ------------------------------------------------

def random_diagonalizable(rng, field):
    s = random_invertible(rng, field, Matrix)
    d = Matrix.diagonal(field, [random_scalar(rng, field) for _ in range(4)])
    return s * d * s.invert()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_invariant_search_agrees_with_bruteforce(rng, p):
    field = Field(p)
    subspaces = oracle.all_subspaces_mod(p)
    assert len(subspaces) == oracle.gaussian_binomial_total(p)
    trials = 25 if p < 5 else 8
    for _ in range(trials):
        a = random_diagonalizable(rng, field)
        astar = Matrix(field, [[random_scalar(rng, field) for _ in range(4)]
                               for _ in range(4)])
        got = common_invariant_subspace(a, astar)
        a_rows = [[x.val for x in row] for row in a.rows]
        astar_rows = [[x.val for x in row] for row in astar.rows]
        expected = oracle.brute_force_common_invariant(a_rows, astar_rows, p, subspaces)
        assert (got is None) == (expected is None)
        if got is not None:
            assert 0 < got.dim < 4
            assert got.is_invariant(a) and got.is_invariant(astar)


def test_invariant_search_requires_diagonalizable():
    jordan = Matrix(QQ, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    with pytest.raises(ValueError):
        common_invariant_subspace(jordan, Matrix.identity(QQ, 4))


def test_invariant_search_profile_limit_over_rationals():
    # two planes cannot be searched over the rationals
    a = Matrix.diagonal(QQ, [1, 1, 2, 2])
    with pytest.raises(ValueError):
        common_invariant_subspace(a, Matrix.identity(QQ, 4))


def test_invariant_search_verified_system_is_clean(tds):
    assert common_invariant_subspace(tds.A, tds.Astar) is None


def test_invariant_search_finds_rational_line():
    # A and A* share the obvious line through e1 + e2
    a = Matrix(QQ, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]])
    astar = Matrix(QQ, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 4, 0], [0, 0, 0, 5]])
    w = common_invariant_subspace(a, astar)
    assert w is not None
    assert w.is_invariant(a) and w.is_invariant(astar)


def test_verify_conjugated_systems(rng, gf101):
    # non-canonical presentations: conjugate by random invertible maps
    from tdpair121 import extract_parameter_array
    for field in (QQ, gf101):
        for _ in range(5):
            pa = random_admissible_array(rng, field)
            sys_ = construct(pa)
            s = random_invertible(rng, field, Matrix)
            si = s.invert()
            a = s * sys_.A * si
            astar = s * sys_.Astar * si
            report = verify_td_system(a, astar, pa.theta, pa.thetastar)
            assert report.overall and report.shape == (1, 2, 1)
            conj = TDSystem.from_matrices(a, astar, pa.theta, pa.thetastar)
            assert extract_parameter_array(conj) == pa
            assert (pa.theta, pa.thetastar) in find_td_orderings(a, astar)


def test_system_json_roundtrip(tds):
    data = tds.to_json()
    field = Field.from_json(data["field"])
    a = Matrix.from_json(field, data["A"])
    astar = Matrix.from_json(field, data["Astar"])
    assert a == tds.A and astar == tds.Astar
