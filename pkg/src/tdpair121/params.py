"""Parameter arrays and the classification of shape-(1,2,1) systems.

A parameter array bundles the two eigenvalue sequences with the two split
scalars (varphi, phi).  Admissibility is the exact three-part criterion
under which a tridiagonal system with these parameters exists; the
canonical construction realizes it and extraction inverts it.  The three
involutions swap / flip-dual / flip-primary generate a dihedral group of
order 8 acting on arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, FieldElement
from .linalg import Matrix
from .tdsystem import TDSystem


@dataclass(frozen=True)
class ParameterArray:
    field: Field
    theta: tuple
    thetastar: tuple
    varphi: FieldElement
    phi: FieldElement

    @classmethod
    def make(cls, field: Field, theta, thetastar, varphi, phi) -> ParameterArray:
        return cls(
            field,
            tuple(field(x) for x in theta),
            tuple(field(x) for x in thetastar),
            field(varphi),
            field(phi),
        )

    def __post_init__(self):
        if len(self.theta) != 3 or len(self.thetastar) != 3:
            raise ValueError("eigenvalue sequences must have length 3")

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "theta": [str(x) for x in self.theta],
            "thetastar": [str(x) for x in self.thetastar],
            "varphi": str(self.varphi),
            "phi": str(self.phi),
        }

    @classmethod
    def from_json(cls, data: dict) -> ParameterArray:
        field = Field.from_json(data["field"])
        return cls.make(field, data["theta"], data["thetastar"], data["varphi"], data["phi"])


@dataclass(frozen=True)
class DerivedParams:
    varphi1: FieldElement
    varphi2: FieldElement
    phi1: FieldElement
    phi2: FieldElement

    def to_json(self) -> dict:
        return {
            "varphi1": str(self.varphi1),
            "varphi2": str(self.varphi2),
            "phi1": str(self.phi1),
            "phi2": str(self.phi2),
        }


def derived_params(pa: ParameterArray) -> DerivedParams:
    """The four scalars by which the quadratic products act on the end
    eigenspaces, as closed formulas in the array."""
    t0, t1, t2 = pa.theta
    s0, s1, s2 = pa.thetastar
    if t0 == t2:
        raise ValueError("derived parameters undefined: theta[0] == theta[2]")
    if s0 == s2:
        raise ValueError("derived parameters undefined: thetastar[0] == thetastar[2]")
    vp, ph = pa.varphi, pa.phi
    vp1 = (ph - vp) / ((t0 - t2) * (s0 - s2)) - (t0 - t1) * (s0 - s1)
    ph1 = (vp - ph) / ((t2 - t0) * (s0 - s2)) - (t2 - t1) * (s0 - s1)
    ph2 = (vp - ph) / ((t2 - t0) * (s0 - s2)) - (t1 - t0) * (s1 - s2)
    vp2 = (ph - vp) / ((t0 - t2) * (s0 - s2)) - (t1 - t2) * (s1 - s2)
    return DerivedParams(vp1, vp2, ph1, ph2)


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    failed: tuple

    def to_json(self) -> dict:
        return {"ok": self.ok, "failed": list(self.failed)}


def admissible(pa: ParameterArray) -> AdmissibilityReport:
    """Check the classification criterion: (i) distinct eigenvalue
    sequences, (ii) nonzero split scalars, (iii) varphi != varphi1*varphi2."""
    failed = []
    t, s = pa.theta, pa.thetastar
    if t[0] == t[1] or t[0] == t[2] or t[1] == t[2] or s[0] == s[1] or s[0] == s[2] or s[1] == s[2]:
        failed.append("(i)")
    if pa.varphi.is_zero or pa.phi.is_zero:
        failed.append("(ii)")
    if t[0] != t[2] and s[0] != s[2]:
        dp = derived_params(pa)
        if pa.varphi == dp.varphi1 * dp.varphi2:
            failed.append("(iii)")
    return AdmissibilityReport(not failed, tuple(failed))


def canonical_matrices(pa: ParameterArray):
    """The lower/upper-triangular matrix pair of the canonical construction.

    Available for any array with defined derived parameters, admissible or
    not, so that boundary arrays can be probed.
    """
    dp = derived_params(pa)
    f = pa.field
    z, o = f.zero, f.one
    t0, t1, t2 = pa.theta
    s0, s1, s2 = pa.thetastar
    a = Matrix._raw(f, (
        (t0, z, z, z),
        (o, t1, z, z),
        (z, z, t1, z),
        (z, o, dp.varphi2, t2),
    ))
    astar = Matrix._raw(f, (
        (s0, dp.varphi1, pa.varphi, z),
        (z, s1, z, z),
        (z, z, s1, o),
        (z, z, z, s2),
    ))
    return a, astar


def construct(pa: ParameterArray) -> TDSystem:
    """Build the tridiagonal system with this parameter array."""
    report = admissible(pa)
    if not report.ok:
        raise ValueError(f"inadmissible parameter array, failed {list(report.failed)}")
    a, astar = canonical_matrices(pa)
    return TDSystem.from_matrices(a, astar, pa.theta, pa.thetastar)


def _scalar_action(product: Matrix, projector: Matrix):
    """The scalar by which `product` acts on the image of `projector`.

    Checked at the level of whole matrices (product * projector must equal
    scalar * projector), which covers every vector of the image at once.
    """
    image = product * projector
    scalar = None
    for prow, erow in zip(image.rows, projector.rows):
        for pv, ev in zip(prow, erow):
            if not ev.is_zero:
                scalar = pv / ev
                break
        if scalar is not None:
            break
    if scalar is None:
        raise ValueError("projector is zero")
    if image != projector.scale(scalar):
        raise ValueError("product does not act as a scalar on the eigenspace; "
                         "input is not a shape-(1,2,1) system")
    return scalar


def extract_parameter_array(tds: TDSystem) -> ParameterArray:
    """Read the parameter array off a verified shape-(1,2,1) system."""
    a, astar = tds.A, tds.Astar
    t0, t1, t2 = tds.theta
    s0, s1, s2 = tds.thetastar
    estar0 = tds.Estar[0]
    left = astar.shift(s1) * astar.shift(s2)
    varphi = _scalar_action(left * (a.shift(t1) * a.shift(t0)), estar0)
    phi = _scalar_action(left * (a.shift(t1) * a.shift(t2)), estar0)
    if varphi.is_zero or phi.is_zero:
        raise ValueError("split scalars vanish; input is not a shape-(1,2,1) system")
    return ParameterArray(tds.A.field, tds.theta, tds.thetastar, varphi, phi)


# -- the dihedral action -----------------------------------------------------

SWAP = "*"          # exchange the roles of the two transformations
FLIP_DUAL = "d"     # reverse the dual eigenvalue sequence
FLIP_PRIMARY = "D"  # reverse the primary eigenvalue sequence

_GENERATORS = (SWAP, FLIP_DUAL, FLIP_PRIMARY)


class D4Word:
    """Word over {*, d, D}, reduced to one of 8 canonical forms.

    The relations are *^2 = d^2 = D^2 = 1, D* = *d, d* = *D, dD = Dd, so
    every word reduces to d^a D^b *^c with a, b, c in {0, 1}.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, letters=""):
        a = b = c = 0
        for letter in letters:
            if letter == FLIP_DUAL:
                if c:
                    b ^= 1
                else:
                    a ^= 1
            elif letter == FLIP_PRIMARY:
                if c:
                    a ^= 1
                else:
                    b ^= 1
            elif letter == SWAP:
                c ^= 1
            else:
                raise ValueError(f"unknown generator {letter!r}")
        self.a, self.b, self.c = a, b, c

    @property
    def letters(self) -> str:
        return FLIP_DUAL * self.a + FLIP_PRIMARY * self.b + SWAP * self.c

    def __mul__(self, other: D4Word) -> D4Word:
        return D4Word(self.letters + other.letters)

    def __eq__(self, other):
        return (
            isinstance(other, D4Word)
            and (self.a, self.b, self.c) == (other.a, other.b, other.c)
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return f"D4Word({self.letters!r})" if self.letters else "D4Word(identity)"

    @classmethod
    def all_elements(cls):
        return [cls(FLIP_DUAL * a + FLIP_PRIMARY * b + SWAP * c)
                for a in (0, 1) for b in (0, 1) for c in (0, 1)]


def _apply_generator(pa: ParameterArray, letter: str) -> ParameterArray:
    if letter == SWAP:
        return ParameterArray(pa.field, pa.thetastar, pa.theta, pa.varphi, pa.phi)
    if letter == FLIP_DUAL:
        return ParameterArray(pa.field, pa.theta, pa.thetastar[::-1], pa.phi, pa.varphi)
    if letter == FLIP_PRIMARY:
        return ParameterArray(pa.field, pa.theta[::-1], pa.thetastar, pa.phi, pa.varphi)
    raise ValueError(f"unknown generator {letter!r}")


def relative(pa: ParameterArray, word) -> ParameterArray:
    """Parameter array of the relative system; letters apply left to right."""
    if isinstance(word, str):
        word = D4Word(word)
    out = pa
    for letter in word.letters:
        out = _apply_generator(out, letter)
    return out


# how each generator permutes (varphi1, varphi2, phi1, phi2)
_DERIVED_SWAP = {
    SWAP: (0, 1, 3, 2),
    FLIP_DUAL: (3, 2, 1, 0),
    FLIP_PRIMARY: (2, 3, 0, 1),
}


def derived_of_relative_consistency(pa: ParameterArray) -> bool:
    """Check that derived parameters transform along the dihedral action
    exactly as the closed formulas predict, for all 8 group elements."""
    dp = derived_params(pa)
    base = (dp.varphi1, dp.varphi2, dp.phi1, dp.phi2)
    for word in D4Word.all_elements():
        expected = base
        for letter in word.letters:
            perm = _DERIVED_SWAP[letter]
            expected = tuple(expected[i] for i in perm)
        got = derived_params(relative(pa, word))
        if (got.varphi1, got.varphi2, got.phi1, got.phi2) != expected:
            return False
    return True
