"""The six bases, representation matrices, and all 30 transition matrices.

From a seed vector in the first dual eigenspace, four chain vectors are
built; they generate four split bases plus one eigenbasis for each of the
two transformations.  Representation and transition matrices come in two
independent flavors: closed formulas in the parameter array, and numeric
computation from the basis matrices.  The two must agree exactly; the
formula tables below are transcriptions, never compositions, so that the
cross-check is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .linalg import Matrix, SingularMatrixError, vec_is_zero, vec_scale
from .params import ParameterArray, admissible, derived_params, extract_parameter_array
from .tdsystem import TDSystem


class BasisId(Enum):
    SPLIT_ZD = "SplitZD"
    SPLIT_ZZ = "SplitZZ"
    SPLIT_DZ = "SplitDZ"
    SPLIT_DD = "SplitDD"
    EIG_A = "EigA"
    EIG_ASTAR = "EigAstar"


@dataclass(frozen=True)
class EtaVectors:
    eta0star: tuple
    eta0: tuple
    eta2: tuple
    eta2star: tuple


def canonical_seed(tds: TDSystem):
    """First dual eigenspace image of the earliest standard vector,
    rescaled so its first nonzero coordinate is 1."""
    estar0 = tds.Estar[0]
    for j in range(4):
        v = estar0.col(j)
        if not vec_is_zero(v):
            lead = next(x for x in v if not x.is_zero)
            return vec_scale(lead.inverse(), v)
    raise ValueError("zero projector")


def eta_vectors(tds: TDSystem, seed=None) -> EtaVectors:
    """The chain vectors grown from a seed of the first dual eigenspace."""
    field = tds.field
    if seed is None:
        seed = canonical_seed(tds)
    else:
        seed = tuple(field(x) for x in seed)
    if vec_is_zero(seed):
        raise ValueError("seed vector is zero")
    if tds.Estar[0].apply(seed) != seed:
        raise ValueError("seed vector is outside the first dual eigenspace")
    t0, t1, t2 = tds.theta
    s0, s1, _ = tds.thetastar
    a, astar = tds.A, tds.Astar
    eta0 = a.shift(t1).apply(a.shift(t2).apply(seed))
    eta2 = a.shift(t1).apply(a.shift(t0).apply(seed))
    eta2star = astar.shift(s1).apply(astar.shift(s0).apply(eta2))
    for name, v in (("eta0", eta0), ("eta2", eta2), ("eta2star", eta2star)):
        if vec_is_zero(v):
            raise ValueError(f"chain vector {name} vanished; "
                             "input is not a shape-(1,2,1) system")
    return EtaVectors(seed, eta0, eta2, eta2star)


@lru_cache(maxsize=256)
def _system_scalars(tds: TDSystem):
    pa = extract_parameter_array(tds)
    return pa.varphi, pa.phi


@lru_cache(maxsize=256)
def _canonical_eta(tds: TDSystem) -> EtaVectors:
    return eta_vectors(tds)


def basis_matrix(tds: TDSystem, basis: BasisId, eta: EtaVectors | None = None) -> Matrix:
    """4x4 matrix whose columns are the requested basis, in order."""
    if eta is None:
        eta = _canonical_eta(tds)
    return _basis_cached(tds, basis, eta)


@lru_cache(maxsize=8192)
def _basis_cached(tds: TDSystem, basis: BasisId, eta: EtaVectors) -> Matrix:
    t0, t1, t2 = tds.theta
    s0, s1, s2 = tds.thetastar
    a, astar = tds.A, tds.Astar
    if basis is BasisId.SPLIT_ZD:
        cols = [eta.eta0star, a.shift(t0).apply(eta.eta0star),
                astar.shift(s2).apply(eta.eta2), eta.eta2]
    elif basis is BasisId.SPLIT_ZZ:
        cols = [eta.eta0star, a.shift(t2).apply(eta.eta0star),
                astar.shift(s2).apply(eta.eta0), eta.eta0]
    elif basis is BasisId.SPLIT_DZ:
        vp, _ = _system_scalars(tds)
        cols = [eta.eta2star, a.shift(t2).apply(eta.eta2star),
                vec_scale(vp, astar.shift(s0).apply(eta.eta0)),
                vec_scale(vp, eta.eta0)]
    elif basis is BasisId.SPLIT_DD:
        _, ph = _system_scalars(tds)
        cols = [eta.eta2star, a.shift(t0).apply(eta.eta2star),
                vec_scale(ph, astar.shift(s0).apply(eta.eta2)),
                vec_scale(ph, eta.eta2)]
    elif basis is BasisId.EIG_A:
        e1 = tds.E[1]
        cols = [eta.eta0, e1.apply(eta.eta0star), e1.apply(eta.eta2star), eta.eta2]
    elif basis is BasisId.EIG_ASTAR:
        estar1 = tds.Estar[1]
        cols = [eta.eta0star, estar1.apply(eta.eta0), estar1.apply(eta.eta2),
                eta.eta2star]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    m = Matrix.from_columns(tds.field, cols)
    if m.det().is_zero:
        raise SingularMatrixError(
            f"{basis.value} columns are dependent; input is not shape (1,2,1)")
    return m


@lru_cache(maxsize=8192)
def _basis_inverse(tds: TDSystem, basis: BasisId, eta: EtaVectors) -> Matrix:
    return _basis_cached(tds, basis, eta).invert()


def represent(tds: TDSystem, which: str, basis: BasisId,
              eta: EtaVectors | None = None) -> Matrix:
    """Matrix of the chosen transformation with respect to the basis."""
    if which == "A":
        m = tds.A
    elif which == "Astar":
        m = tds.Astar
    else:
        raise ValueError("operator must be 'A' or 'Astar'")
    if eta is None:
        eta = _canonical_eta(tds)
    return _basis_inverse(tds, basis, eta) * m * _basis_cached(tds, basis, eta)


def transition_numeric(tds: TDSystem, frm: BasisId, to: BasisId,
                       eta: EtaVectors | None = None) -> Matrix:
    """Transition matrix computed as (from basis)^-1 (to basis)."""
    if eta is None:
        eta = _canonical_eta(tds)
    return _basis_inverse(tds, frm, eta) * _basis_cached(tds, to, eta)


# -- closed-form tables -------------------------------------------------------

def _ctx(pa: ParameterArray):
    dp = derived_params(pa)
    f = pa.field
    return (*pa.theta, *pa.thetastar, pa.varphi, pa.phi,
            dp.varphi1, dp.varphi2, dp.phi1, dp.phi2, f.one, f.zero)


def represent_formula(pa: ParameterArray, which: str, basis: BasisId) -> Matrix:
    """The tabulated representation matrix with parameters substituted."""
    if which not in ("A", "Astar"):
        raise ValueError("operator must be 'A' or 'Astar'")
    rows = _REPRESENT_TABLE[(which, basis)](_ctx(pa))
    return Matrix._raw(pa.field, tuple(tuple(r) for r in rows))


def transition_formula(pa: ParameterArray, frm: BasisId, to: BasisId) -> Matrix:
    """The tabulated transition matrix with parameters substituted.

    Every ordered pair of distinct bases has its own tabulated matrix;
    nothing here is composed from other pairs, so agreement with
    transition_numeric is an actual check.
    """
    report = admissible(pa)
    if not report.ok:
        raise ValueError(f"inadmissible parameter array, failed {list(report.failed)}")
    if frm is to:
        return Matrix.identity(pa.field, 4)
    rows = _TRANSITION_TABLE[(frm, to)](_ctx(pa))
    return Matrix._raw(pa.field, tuple(tuple(r) for r in rows))


def _rep_a_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[t0, z, z, z], [o, t1, z, z], [z, z, t1, z], [z, o, vp2, t2]]

def _rep_astar_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[s0, vp1, vp, z], [z, s1, z, z], [z, z, s1, o], [z, z, z, s2]]

def _rep_a_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[t2, z, z, z], [o, t1, z, z], [z, z, t1, z], [z, o, ph2, t0]]

def _rep_astar_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[s0, ph1, ph, z], [z, s1, z, z], [z, z, s1, o], [z, z, z, s2]]

def _rep_a_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[t2, z, z, z], [o, t1, z, z], [z, z, t1, z], [z, o, vp1, t0]]

def _rep_astar_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[s2, vp2, vp, z], [z, s1, z, z], [z, z, s1, o], [z, z, z, s0]]

def _rep_a_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[t0, z, z, z], [o, t1, z, z], [z, z, t1, z], [z, o, ph1, t2]]

def _rep_astar_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[s2, ph2, ph, z], [z, s1, z, z], [z, z, s1, o], [z, z, z, s0]]

def _rep_a_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[t0, z, z, z], [z, t1, z, z], [z, z, t1, z], [z, z, z, t2]]

def _rep_astar_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [
        [s0 + vp1 / (t0 - t1),
         vp1 / ((t0 - t1) * (t0 - t1) * (t2 - t0)),
         vp * ph2 / ((t0 - t1) * (t0 - t1) * (t2 - t0)),
         z],
        [ph / (s0 - s2),
         s1 + (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * (s0 - s2)),
         vp * ph / ((t1 - t0) * (t1 - t2) * (s0 - s2)),
         vp / (s0 - s2)],
        [o / (s2 - s0),
         o / ((t1 - t0) * (t1 - t2) * (s2 - s0)),
         s1 + (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2) * (s2 - s0)),
         o / (s2 - s0)],
        [z,
         ph1 / ((t1 - t2) * (t1 - t2) * (t0 - t2)),
         ph * vp2 / ((t1 - t2) * (t1 - t2) * (t0 - t2)),
         s2 + vp2 / (t2 - t1)],
    ]

def _rep_a_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [
        [t0 + vp1 / (s0 - s1),
         ph * vp1 / ((s0 - s1) * (s0 - s1) * (s2 - s0)),
         vp * ph1 / ((s0 - s1) * (s0 - s1) * (s2 - s0)),
         z],
        [o / (t0 - t2),
         t1 + (vp + vp1 * (t0 - t2) * (s1 - s2)) / ((t0 - t2) * (s1 - s0) * (s1 - s2)),
         vp / ((t0 - t2) * (s1 - s0) * (s1 - s2)),
         vp / (t0 - t2)],
        [o / (t2 - t0),
         ph / ((t2 - t0) * (s1 - s0) * (s1 - s2)),
         t1 + (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((t2 - t0) * (s1 - s0) * (s1 - s2)),
         ph / (t2 - t0)],
        [z,
         ph2 / ((s1 - s2) * (s1 - s2) * (s0 - s2)),
         vp2 / ((s1 - s2) * (s1 - s2) * (s0 - s2)),
         t2 + vp2 / (s2 - s1)],
    ]

def _rep_astar_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[s0, z, z, z], [z, s1, z, z], [z, z, s1, z], [z, z, z, s2]]


_REPRESENT_TABLE = {
    ("A", BasisId.SPLIT_ZD): _rep_a_zd,
    ("Astar", BasisId.SPLIT_ZD): _rep_astar_zd,
    ("A", BasisId.SPLIT_ZZ): _rep_a_zz,
    ("Astar", BasisId.SPLIT_ZZ): _rep_astar_zz,
    ("A", BasisId.SPLIT_DZ): _rep_a_dz,
    ("Astar", BasisId.SPLIT_DZ): _rep_astar_dz,
    ("A", BasisId.SPLIT_DD): _rep_a_dd,
    ("Astar", BasisId.SPLIT_DD): _rep_astar_dd,
    ("A", BasisId.EIG_A): _rep_a_eiga,
    ("Astar", BasisId.EIG_A): _rep_astar_eiga,
    ("A", BasisId.EIG_ASTAR): _rep_a_eigastar,
    ("Astar", BasisId.EIG_ASTAR): _rep_astar_eigastar,
}


# transitions among the four split bases (ring neighbours)

def _t_zd_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, t0 - t2, (t0 - t2) * ph2, (t0 - t2) * (t0 - t1)],
            [z, o, (t0 - t2) * (s1 - s2), t0 - t2],
            [z, z, o, z],
            [z, z, z, o]]

def _t_zz_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, t2 - t0, (t2 - t0) * vp2, (t2 - t0) * (t2 - t1)],
            [z, o, (t2 - t0) * (s1 - s2), t2 - t0],
            [z, z, o, z],
            [z, z, z, o]]

def _t_zz_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[ph, z, z, z],
            [z, ph, z, z],
            [s2 - s0, (s2 - s0) * (t1 - t2), vp, z],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp]]

def _t_dz_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[ip, z, z, z],
            [z, ip, z, z],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t2) * iv * ip, iv, z],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * ph1 * iv * ip,
             (s0 - s2) * iv, iv]]

def _t_dz_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, t2 - t0, (t2 - t0) * ph1, (t2 - t0) * (t2 - t1)],
            [z, o, (t2 - t0) * (s1 - s0), t2 - t0],
            [z, z, o, z],
            [z, z, z, o]]

def _t_dd_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, t0 - t2, (t0 - t2) * vp1, (t0 - t2) * (t0 - t1)],
            [z, o, (t0 - t2) * (s1 - s0), t0 - t2],
            [z, z, o, z],
            [z, z, z, o]]

def _t_dd_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[iv, z, z, z],
            [z, iv, z, z],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t0) * iv * ip, ip, z],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * vp1 * iv * ip,
             (s0 - s2) * ip, ip]]

def _t_zd_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[vp, z, z, z],
            [z, vp, z, z],
            [s2 - s0, (s2 - s0) * (t1 - t0), ph, z],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph]]


# transitions among the four split bases (diagonals)

def _t_zd_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[vp, (t0 - t2) * vp, (t0 - t2) * vp * vp1, (t0 - t2) * (t0 - t1) * vp],
            [z, vp, (t0 - t2) * (s1 - s0) * vp, (t0 - t2) * vp],
            [s2 - s0, (s2 - s0) * (t1 - t2), vp, z],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp]]

def _t_dz_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[ip, (t2 - t0) * ip, (t2 - t0) * vp2 * ip, (t2 - t0) * (t2 - t1) * ip],
            [z, ip, (t2 - t0) * (s1 - s2) * ip, (t2 - t0) * ip],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t0) * iv * ip, ip, z],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * vp1 * iv * ip,
             (s0 - s2) * ip, ip]]

def _t_zz_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[ph, (t2 - t0) * ph, (t2 - t0) * ph * ph1, (t2 - t0) * (t2 - t1) * ph],
            [z, ph, (t2 - t0) * (s1 - s0) * ph, (t2 - t0) * ph],
            [s2 - s0, (s2 - s0) * (t1 - t0), ph, z],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph]]

def _t_dd_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[iv, (t0 - t2) * iv, (t0 - t2) * ph2 * iv, (t0 - t2) * (t0 - t1) * iv],
            [z, iv, (t0 - t2) * (s1 - s2) * iv, (t0 - t2) * iv],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t2) * iv * ip, iv, z],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * ph1 * iv * ip,
             (s0 - s2) * iv, iv]]


# transitions between a split basis and the first eigenbasis

def _t_zd_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[(t0 - t1) * (t0 - t2), z, z, z],
            [t0 - t2, o / (t1 - t0), vp / (t1 - t0), z],
            [z, z, s2 - s0, z],
            [o, o / ((t1 - t0) * (t1 - t2)),
             (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2)), o]]

def _t_eiga_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o / ((t0 - t1) * (t0 - t2)), z, z, z],
            [o, t1 - t0, vp / (s0 - s2), z],
            [z, z, o / (s2 - s0), z],
            [o / ((t2 - t0) * (t2 - t1)), o / (t2 - t1), vp2 / (t2 - t1), o]]

def _t_zz_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[z, z, z, (t2 - t0) * (t2 - t1)],
            [z, o / (t1 - t2), ph / (t1 - t2), t2 - t0],
            [z, z, s2 - s0, z],
            [o, o / ((t1 - t0) * (t1 - t2)),
             (ph + ph2 * (t1 - t2) * (s2 - s0)) / ((t1 - t0) * (t1 - t2)), o]]

def _t_eiga_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o / ((t0 - t1) * (t0 - t2)), o / (t0 - t1), ph2 / (t0 - t1), o],
            [o, t1 - t2, ph / (s0 - s2), z],
            [z, z, o / (s2 - s0), z],
            [o / ((t2 - t0) * (t2 - t1)), z, z, z]]

def _t_dz_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[z, z, z, (t2 - t0) * (t2 - t1) * ip],
            [z, ip / (t1 - t2), o / (t1 - t2), (t2 - t0) * ip],
            [z, (s0 - s2) * iv * ip, z, z],
            [iv, (ph + ph1 * (t1 - t0) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * vp * ph),
             o / ((t1 - t0) * (t1 - t2)), ip]]

def _t_eiga_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[vp / ((t0 - t1) * (t0 - t2)), vp / (t0 - t1), vp * vp1 / (t0 - t1), vp],
            [z, z, vp * ph / (s0 - s2), z],
            [o, t1 - t2, vp / (s2 - s0), z],
            [ph / ((t0 - t2) * (t1 - t2)), z, z, z]]

def _t_dd_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[(t0 - t1) * (t0 - t2) * iv, z, z, z],
            [(t0 - t2) * iv, iv / (t1 - t0), o / (t1 - t0), z],
            [z, (s0 - s2) * iv * ip, z, z],
            [iv, (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * vp * ph),
             o / ((t1 - t0) * (t1 - t2)), ip]]

def _t_eiga_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[vp / ((t0 - t1) * (t0 - t2)), z, z, z],
            [z, z, vp * ph / (s0 - s2), z],
            [o, t1 - t0, ph / (s2 - s0), z],
            [ph / ((t0 - t2) * (t1 - t2)), ph / (t2 - t1), ph * ph1 / (t2 - t1), ph]]


# transitions between a split basis and the second eigenbasis

def _t_zd_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, (ph + ph2 * (t0 - t2) * (s1 - s0)) / ((s1 - s0) * (s1 - s2)),
             vp / ((s1 - s0) * (s1 - s2)), vp],
            [z, t0 - t2, z, z],
            [z, o / (s1 - s2), o / (s1 - s2), s2 - s0],
            [z, z, z, (s2 - s0) * (s2 - s1)]]

def _t_eigastar_zd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, vp1 / (s0 - s1), vp / (s0 - s1), vp / ((s0 - s1) * (s0 - s2))],
            [z, o / (t0 - t2), z, z],
            [z, o / (t2 - t0), s1 - s2, o],
            [z, z, z, o / ((s0 - s2) * (s1 - s2))]]

def _t_zz_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, ph / ((s1 - s0) * (s1 - s2)),
             (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((s1 - s0) * (s1 - s2)), ph],
            [z, z, t2 - t0, z],
            [z, o / (s1 - s2), o / (s1 - s2), s2 - s0],
            [z, z, z, (s2 - s0) * (s2 - s1)]]

def _t_eigastar_zz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[o, ph1 / (s0 - s1), ph / (s0 - s1), ph / ((s0 - s1) * (s0 - s2))],
            [z, o / (t0 - t2), s1 - s2, o],
            [z, o / (t2 - t0), z, z],
            [z, z, z, o / ((s0 - s2) * (s1 - s2))]]

def _t_dz_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[ip, o / ((s1 - s0) * (s1 - s2)),
             (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((s1 - s0) * (s1 - s2) * ph), o],
            [z, z, (t2 - t0) * ip, z],
            [(s0 - s2) * iv * ip, iv / (s1 - s0), ip / (s1 - s0), z],
            [(s0 - s2) * (s0 - s1) * iv * ip, z, z, z]]

def _t_eigastar_dz(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[z, z, z, vp * ph / ((s0 - s1) * (s0 - s2))],
            [z, vp / (t0 - t2), (s1 - s0) * vp, vp],
            [z, ph / (t2 - t0), z, z],
            [o, vp2 / (s2 - s1), vp / (s2 - s1), vp / ((s2 - s1) * (s2 - s0))]]

def _t_dd_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    iv, ip = o / vp, o / ph
    return [[iv, (vp + vp1 * (t0 - t2) * (s1 - s2)) / ((s1 - s0) * (s1 - s2) * vp),
             o / ((s1 - s0) * (s1 - s2)), o],
            [z, (t0 - t2) * iv, z, z],
            [(s0 - s2) * iv * ip, iv / (s1 - s0), ip / (s1 - s0), z],
            [(s0 - s2) * (s0 - s1) * iv * ip, z, z, z]]

def _t_eigastar_dd(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [[z, z, z, vp * ph / ((s1 - s0) * (s2 - s0))],
            [z, vp / (t0 - t2), z, z],
            [z, ph / (t2 - t0), (s1 - s0) * ph, ph],
            [o, ph2 / (s2 - s1), ph / (s2 - s1), ph / ((s2 - s1) * (s2 - s0))]]


# transitions between the two eigenbases

def _t_eiga_eigastar(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [
        [o / ((t0 - t1) * (t0 - t2)),
         (ph + ph2 * (t0 - t2) * (s1 - s0)) / ((t0 - t1) * (t0 - t2) * (s1 - s0) * (s1 - s2)),
         vp / ((t0 - t1) * (t0 - t2) * (s1 - s0) * (s1 - s2)),
         vp / ((t0 - t1) * (t0 - t2))],
        [o, ph / ((s0 - s2) * (s1 - s0)), vp / ((s0 - s2) * (s1 - s0)), z],
        [z, o / ((s2 - s1) * (s0 - s2)), o / ((s2 - s1) * (s0 - s2)), o],
        [o / ((t0 - t2) * (t1 - t2)),
         ph / ((t0 - t2) * (t1 - t2) * (s1 - s0) * (s1 - s2)),
         (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((t0 - t2) * (t1 - t2) * (s1 - s0) * (s1 - s2)),
         ph / ((t0 - t2) * (t1 - t2))],
    ]

def _t_eigastar_eiga(c):
    t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, o, z = c
    return [
        [ph / ((s0 - s1) * (s0 - s2)),
         (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * (s0 - s1) * (s0 - s2)),
         vp * ph / ((t1 - t0) * (t1 - t2) * (s0 - s1) * (s0 - s2)),
         vp / ((s0 - s1) * (s0 - s2))],
        [o, o / ((t1 - t0) * (t0 - t2)), vp / ((t1 - t0) * (t0 - t2)), z],
        [z, o / ((t2 - t1) * (t0 - t2)), ph / ((t2 - t1) * (t0 - t2)), o],
        [o / ((s1 - s2) * (s0 - s2)),
         o / ((t1 - t0) * (t1 - t2) * (s0 - s2) * (s1 - s2)),
         (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2) * (s0 - s2) * (s1 - s2)),
         o / ((s0 - s2) * (s1 - s2))],
    ]


_TRANSITION_TABLE = {
    (BasisId.SPLIT_ZD, BasisId.SPLIT_ZZ): _t_zd_zz,
    (BasisId.SPLIT_ZZ, BasisId.SPLIT_ZD): _t_zz_zd,
    (BasisId.SPLIT_ZZ, BasisId.SPLIT_DZ): _t_zz_dz,
    (BasisId.SPLIT_DZ, BasisId.SPLIT_ZZ): _t_dz_zz,
    (BasisId.SPLIT_DZ, BasisId.SPLIT_DD): _t_dz_dd,
    (BasisId.SPLIT_DD, BasisId.SPLIT_DZ): _t_dd_dz,
    (BasisId.SPLIT_DD, BasisId.SPLIT_ZD): _t_dd_zd,
    (BasisId.SPLIT_ZD, BasisId.SPLIT_DD): _t_zd_dd,
    (BasisId.SPLIT_ZD, BasisId.SPLIT_DZ): _t_zd_dz,
    (BasisId.SPLIT_DZ, BasisId.SPLIT_ZD): _t_dz_zd,
    (BasisId.SPLIT_ZZ, BasisId.SPLIT_DD): _t_zz_dd,
    (BasisId.SPLIT_DD, BasisId.SPLIT_ZZ): _t_dd_zz,
    (BasisId.SPLIT_ZD, BasisId.EIG_A): _t_zd_eiga,
    (BasisId.EIG_A, BasisId.SPLIT_ZD): _t_eiga_zd,
    (BasisId.SPLIT_ZZ, BasisId.EIG_A): _t_zz_eiga,
    (BasisId.EIG_A, BasisId.SPLIT_ZZ): _t_eiga_zz,
    (BasisId.SPLIT_DZ, BasisId.EIG_A): _t_dz_eiga,
    (BasisId.EIG_A, BasisId.SPLIT_DZ): _t_eiga_dz,
    (BasisId.SPLIT_DD, BasisId.EIG_A): _t_dd_eiga,
    (BasisId.EIG_A, BasisId.SPLIT_DD): _t_eiga_dd,
    (BasisId.SPLIT_ZD, BasisId.EIG_ASTAR): _t_zd_eigastar,
    (BasisId.EIG_ASTAR, BasisId.SPLIT_ZD): _t_eigastar_zd,
    (BasisId.SPLIT_ZZ, BasisId.EIG_ASTAR): _t_zz_eigastar,
    (BasisId.EIG_ASTAR, BasisId.SPLIT_ZZ): _t_eigastar_zz,
    (BasisId.SPLIT_DZ, BasisId.EIG_ASTAR): _t_dz_eigastar,
    (BasisId.EIG_ASTAR, BasisId.SPLIT_DZ): _t_eigastar_dz,
    (BasisId.SPLIT_DD, BasisId.EIG_ASTAR): _t_dd_eigastar,
    (BasisId.EIG_ASTAR, BasisId.SPLIT_DD): _t_eigastar_dd,
    (BasisId.EIG_A, BasisId.EIG_ASTAR): _t_eiga_eigastar,
    (BasisId.EIG_ASTAR, BasisId.EIG_A): _t_eigastar_eiga,
}
