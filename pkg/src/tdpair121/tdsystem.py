"""Axiom-level verification of tridiagonal systems on a 4-dimensional space.

A tridiagonal system is a matrix pair together with orderings of both
spectra such that each matrix acts block-tridiagonally on the other's
eigenspace chain and the pair admits no common proper nonzero invariant
subspace.  This module verifies the axioms one by one, searches for valid
orderings, builds the six eigenspace-chain decompositions, and computes
the shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product

from .fields import Field
from .linalg import (
    Matrix,
    Subspace,
    _det_rows,
    _p_gcd,
    _p_trim,
    eigen_data,
    primitive_idempotents,
    vec_add,
    vec_is_zero,
    vec_scale,
)


@dataclass(frozen=True)
class TDSystem:
    """Matrix pair with ordered eigenvalues and ordered idempotents."""

    A: Matrix
    Astar: Matrix
    theta: tuple
    thetastar: tuple
    E: tuple
    Estar: tuple

    @classmethod
    def from_matrices(cls, a: Matrix, astar: Matrix, theta, thetastar) -> TDSystem:
        field = a.field
        theta = tuple(field(x) for x in theta)
        thetastar = tuple(field(x) for x in thetastar)
        e = tuple(primitive_idempotents(a, theta))
        estar = tuple(primitive_idempotents(astar, thetastar))
        return cls(a, astar, theta, thetastar, e, estar)

    @property
    def field(self) -> Field:
        return self.A.field

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "A": self.A.to_json(),
            "Astar": self.Astar.to_json(),
            "theta": [str(x) for x in self.theta],
            "thetastar": [str(x) for x in self.thetastar],
        }


class Decomposition(Enum):
    """The six eigenspace-chain decompositions of the space."""

    ZSTAR_D = "[0*D]"
    ZSTAR_Z = "[0*0]"
    DSTAR_Z = "[D*0]"
    DSTAR_D = "[D*D]"
    Z_D = "[0D]"
    ZSTAR_DSTAR = "[0*D*]"


@dataclass(frozen=True)
class VerificationReport:
    diagonalizable_a: bool
    diagonalizable_astar: bool
    tridiagonal_astar_e: bool
    tridiagonal_a_estar: bool
    irreducible: bool
    shape: tuple | None
    witness: Subspace | None
    skipped: tuple

    @property
    def overall(self) -> bool:
        return (
            self.diagonalizable_a
            and self.diagonalizable_astar
            and self.tridiagonal_astar_e
            and self.tridiagonal_a_estar
            and self.irreducible
        )

    def to_json(self) -> dict:
        doc = {
            "diagonalizable_A": self.diagonalizable_a,
            "diagonalizable_Astar": self.diagonalizable_astar,
            "tridiagonal_AstarE": self.tridiagonal_astar_e,
            "tridiagonal_AEstar": self.tridiagonal_a_estar,
            "irreducible": self.irreducible,
            "shape": list(self.shape) if self.shape is not None else None,
            "overall": self.overall,
        }
        if self.skipped:
            doc["skipped"] = list(self.skipped)
        if self.witness is not None:
            doc["witness"] = self.witness.to_json()
        return doc


def _check_pair_shape(a: Matrix, astar: Matrix, theta, thetastar) -> None:
    if a.nrows != 4 or a.ncols != 4 or astar.nrows != 4 or astar.ncols != 4:
        raise ValueError("both matrices must be 4x4")
    if a.field != astar.field:
        raise ValueError("matrices live over different fields")
    if len(theta) != 3 or len(thetastar) != 3:
        raise ValueError("eigenvalue lists must have length 3")


def _diag_with_spectrum(m: Matrix, evs):
    """True (with eigenspaces) iff m is diagonalizable with exactly evs."""
    if len(set(evs)) != len(evs):
        return False, None
    spaces = [Subspace(m.field, 4, m.shift(e).kernel()) for e in evs]
    ok = all(s.dim >= 1 for s in spaces) and sum(s.dim for s in spaces) == 4
    return ok, spaces if ok else None


def verify_td_system(a: Matrix, astar: Matrix, theta, thetastar) -> VerificationReport:
    """Check all six axioms for the given matrices and orderings.

    Axiom failures are reported, never raised; only malformed input
    (wrong sizes, mixed fields, wrong list lengths) raises.
    """
    field = a.field
    theta = tuple(field(x) for x in theta)
    thetastar = tuple(field(x) for x in thetastar)
    _check_pair_shape(a, astar, theta, thetastar)

    skipped = []
    diag_a, spaces = _diag_with_spectrum(a, theta)
    diag_s, dual_spaces = _diag_with_spectrum(astar, thetastar)

    tri_astar = tri_a = False
    if diag_a and diag_s:
        e = primitive_idempotents(a, theta)
        estar = primitive_idempotents(astar, thetastar)
        tri_astar = (e[0] * astar * e[2]).is_zero and (e[2] * astar * e[0]).is_zero
        tri_a = (estar[0] * a * estar[2]).is_zero and (estar[2] * a * estar[0]).is_zero
    else:
        skipped += ["tridiagonal_AstarE", "tridiagonal_AEstar"]

    witness = None
    irreducible = False
    if diag_a and diag_s and tri_astar and tri_a:
        witness = common_invariant_subspace(a, astar)
        irreducible = witness is None
    else:
        skipped.append("irreducible")

    shape_dims = None
    if diag_a and diag_s and tri_astar and tri_a:
        shape_dims = _consistent_shape(field, spaces, dual_spaces)

    return VerificationReport(
        diag_a, diag_s, tri_astar, tri_a, irreducible,
        shape_dims, witness, tuple(skipped),
    )


def find_td_orderings(a: Matrix, astar: Matrix):
    """All ordering pairs of both spectra passing the tridiagonal axioms.

    Requires both matrices diagonalizable with exactly 3 eigenvalues;
    returns a lexicographically ordered list of (theta, thetastar) pairs.
    """
    eda = eigen_data(a)
    eds = eigen_data(astar)
    if not eda.diagonalizable or len(eda.eigenvalues) != 3:
        raise ValueError("first matrix is not diagonalizable with 3 eigenvalues")
    if not eds.diagonalizable or len(eds.eigenvalues) != 3:
        raise ValueError("second matrix is not diagonalizable with 3 eigenvalues")
    e = primitive_idempotents(a, eda.eigenvalues)
    estar = primitive_idempotents(astar, eds.eigenvalues)
    far_a = [[(e[i] * astar * e[j]).is_zero for j in range(3)] for i in range(3)]
    far_s = [[(estar[i] * a * estar[j]).is_zero for j in range(3)] for i in range(3)]
    out = []
    for pa in permutations(range(3)):
        if not (far_a[pa[0]][pa[2]] and far_a[pa[2]][pa[0]]):
            continue
        for ps in permutations(range(3)):
            if far_s[ps[0]][ps[2]] and far_s[ps[2]][ps[0]]:
                out.append((
                    tuple(eda.eigenvalues[i] for i in pa),
                    tuple(eds.eigenvalues[i] for i in ps),
                ))
    return out


@lru_cache(maxsize=256)
def _eigenspace_chains(tds: TDSystem):
    spaces = tuple(Subspace(tds.field, 4, tds.A.shift(t).kernel()) for t in tds.theta)
    duals = tuple(Subspace(tds.field, 4, tds.Astar.shift(t).kernel()) for t in tds.thetastar)
    return spaces, duals


def _components(field, spaces, duals, dec: Decomposition):
    def prefix(seq):
        out = [seq[0]]
        for s in seq[1:]:
            out.append(out[-1] + s)
        return out

    pa = prefix(spaces)
    sa = prefix(spaces[::-1])[::-1]     # sa[i] = spaces[i] + ... + spaces[2]
    pd = prefix(duals)
    sd = prefix(duals[::-1])[::-1]
    if dec is Decomposition.ZSTAR_D:
        return [pd[i] & sa[i] for i in range(3)]
    if dec is Decomposition.ZSTAR_Z:
        return [pd[i] & pa[2 - i] for i in range(3)]
    if dec is Decomposition.DSTAR_Z:
        return [sd[2 - i] & pa[2 - i] for i in range(3)]
    if dec is Decomposition.DSTAR_D:
        return [sd[2 - i] & sa[i] for i in range(3)]
    if dec is Decomposition.Z_D:
        return list(spaces)
    if dec is Decomposition.ZSTAR_DSTAR:
        return list(duals)
    raise ValueError(f"unknown decomposition {dec!r}")


def split_decomposition(tds: TDSystem, dec: Decomposition):
    """The three components of the named decomposition."""
    spaces, duals = _eigenspace_chains(tds)
    return _components(tds.field, spaces, duals, dec)


def _consistent_shape(field, spaces, duals):
    """Dims of the six decompositions, or None if they disagree or fail
    to be direct."""
    dims = None
    for dec in Decomposition:
        comps = _components(field, spaces, duals, dec)
        these = tuple(c.dim for c in comps)
        total = comps[0] + comps[1] + comps[2]
        if sum(these) != 4 or total.dim != 4:
            return None
        if dims is None:
            dims = these
        elif dims != these:
            return None
    return dims


def shape(tds: TDSystem):
    """Component dimensions, cross-checked over all six decompositions."""
    spaces, duals = _eigenspace_chains(tds)
    dims = _consistent_shape(tds.field, spaces, duals)
    if dims is None:
        raise ValueError("decomposition dimensions are inconsistent; "
                         "not a verified tridiagonal system")
    return dims


_SPLIT_ACTION = {
    Decomposition.ZSTAR_D: (lambda i: i, lambda i: i),
    Decomposition.ZSTAR_Z: (lambda i: 2 - i, lambda i: i),
    Decomposition.DSTAR_Z: (lambda i: 2 - i, lambda i: 2 - i),
    Decomposition.DSTAR_D: (lambda i: i, lambda i: 2 - i),
}


def _maps_into(m: Matrix, src: Subspace, dst: Subspace | None) -> bool:
    for v in src.basis:
        w = m.apply(v)
        if dst is None:
            if not vec_is_zero(w):
                return False
        elif not dst.contains(w):
            return False
    return True


def verify_split_actions(tds: TDSystem) -> bool:
    """Check the raising/lowering action table on all six decompositions."""
    a, astar = tds.A, tds.Astar
    theta, thetastar = tds.theta, tds.thetastar
    for dec, (a_idx, s_idx) in _SPLIT_ACTION.items():
        comps = split_decomposition(tds, dec)
        for i in range(3):
            up = comps[i + 1] if i + 1 < 3 else None
            down = comps[i - 1] if i - 1 >= 0 else None
            if not _maps_into(a.shift(theta[a_idx(i)]), comps[i], up):
                return False
            if not _maps_into(astar.shift(thetastar[s_idx(i)]), comps[i], down):
                return False
    for dec, m, shifts, other in (
        (Decomposition.Z_D, tds.A, theta, tds.Astar),
        (Decomposition.ZSTAR_DSTAR, tds.Astar, thetastar, tds.A),
    ):
        comps = split_decomposition(tds, dec)
        for i in range(3):
            if not _maps_into(m.shift(shifts[i]), comps[i], None):
                return False
            window = comps[i]
            if i > 0:
                window = window + comps[i - 1]
            if i < 2:
                window = window + comps[i + 1]
            if not _maps_into(other, comps[i], window):
                return False
    return True


# -- common invariant subspace search ----------------------------------------

def common_invariant_subspace(a: Matrix, astar: Matrix) -> Subspace | None:
    """A subspace W with 0 != W != V invariant under both, or None.

    Requires the first matrix diagonalizable over the field.  Any
    invariant W is then the direct sum of its slices W /\\ (eigenspace),
    so the search runs over eigenspace slices: whole-or-nothing pieces
    for 1-dimensional eigenspaces, and a projective line of candidate
    slices inside a 2-dimensional eigenspace, where invariance under the
    second matrix reduces to a polynomial system of degree at most 2.
    """
    ed = eigen_data(a)
    if not ed.diagonalizable:
        raise ValueError("first matrix is not diagonalizable over its field")
    spaces = sorted(ed.eigenspaces, key=lambda s: s.dim)
    dims = [s.dim for s in spaces]
    if dims[-1] == 1 or dims == [1, 1, 2]:
        return _search_profile_211(a.field, spaces, astar)
    if a.field.is_prime_field:
        return _search_enumerate(a.field, spaces, astar)
    raise ValueError(
        f"eigenspace dimension profile {dims} is only searchable over prime fields")


def _search_profile_211(field, spaces, astar):
    """Search when every eigenspace is a line except at most one plane."""
    lines = [s for s in spaces if s.dim == 1]
    planes = [s for s in spaces if s.dim == 2]
    plane = planes[0] if planes else None

    def fixed_candidates():
        for r in range(1, len(spaces) + 1):
            for chosen in combinations(range(len(spaces)), r):
                w = spaces[chosen[0]]
                for i in chosen[1:]:
                    w = w + spaces[i]
                if 0 < w.dim < 4:
                    yield w

    candidates = sorted(fixed_candidates(), key=lambda s: s.dim)
    line_families = []
    if plane is not None:
        u1, u2 = plane.basis
        for r in range(len(lines) + 1):
            for chosen in combinations(lines, r):
                gens = [v for s in chosen for v in s.basis]
                line_families.append(gens)
        line_families.sort(key=len)

    by_dim = {1: [], 2: [], 3: []}
    for w in candidates:
        by_dim[w.dim].append(("fixed", w))
    for gens in line_families:
        by_dim[len(gens) + 1].append(("line", gens))

    for d in (1, 2, 3):
        for kind, payload in by_dim[d]:
            if kind == "fixed":
                if payload.is_invariant(astar):
                    return payload
            else:
                sol = _solve_line_family(field, payload, u1, u2, astar)
                if sol is not None:
                    x, y = sol
                    vec = vec_add(vec_scale(x, u1), vec_scale(y, u2))
                    w = Subspace(field, 4, list(payload) + [vec])
                    if not w.is_invariant(astar):
                        raise RuntimeError("projective-line solver produced a bad witness")
                    return w
    return None


def _minor_dets(field, cols, size):
    """Determinants of all size x size row-selections of the column stack."""
    out = []
    for rows in combinations(range(4), size):
        out.append(_det_rows([[c[r] for c in cols] for r in rows], field))
    return out


def _line_conditions(field, gens, u1, u2, astar):
    """Vanishing conditions, per generator, that span(gens, x*u1 + y*u2)
    be invariant under astar: linear forms (alpha, beta) meaning
    alpha*x + beta*y and quadratics (alpha, beta, gamma) meaning
    alpha*x^2 + beta*xy + gamma*y^2."""
    k = len(gens)
    size = k + 2
    lin, quad = [], []
    au1, au2 = astar.apply(u1), astar.apply(u2)
    for g in gens:
        ag = astar.apply(g)
        c1 = _minor_dets(field, gens + [u1, ag], size)
        c2 = _minor_dets(field, gens + [u2, ag], size)
        lin += [(a, b) for a, b in zip(c1, c2) if not (a.is_zero and b.is_zero)]
    d11 = _minor_dets(field, gens + [u1, au1], size)
    d12 = _minor_dets(field, gens + [u1, au2], size)
    d21 = _minor_dets(field, gens + [u2, au1], size)
    d22 = _minor_dets(field, gens + [u2, au2], size)
    for a, b1, b2, c in zip(d11, d12, d21, d22):
        b = b1 + b2
        if not (a.is_zero and b.is_zero and c.is_zero):
            quad.append((a, b, c))
    return lin, quad


def _solve_line_family(field, gens, u1, u2, astar):
    """A projective point (x : y) satisfying every condition, or None."""
    lin, quad = _line_conditions(field, gens, u1, u2, astar)
    one, zero = field.one, field.zero
    if not lin and not quad:
        return one, zero
    if all(a.is_zero for a, _ in lin) and all(a.is_zero for a, _, _ in quad):
        return one, zero

    def holds(x, y):
        return (
            all((a * x + b * y).is_zero for a, b in lin)
            and all((a * x * x + b * x * y + c * y * y).is_zero for a, b, c in quad)
        )

    if field.is_prime_field:
        for x in field.elements():
            if holds(x, one):
                return x, one
        return None

    # rationals: gcd of the dehomogenized conditions, degree at most 2
    polys = [_p_trim([b, a]) for a, b in lin]
    polys += [_p_trim([c, b, a]) for a, b, c in quad]
    g = polys[0]
    for q in polys[1:]:
        g = _p_gcd(field, g, q)
    if len(g) <= 1:
        return None
    if len(g) == 2:
        root = -g[0] / g[1]
        return (root, one) if holds(root, one) else None
    roots = _rational_quadratic_roots(field, g)
    for root in roots:
        if holds(root, one):
            return root, one
    return None


def _rational_quadratic_roots(field, cs):
    """Roots in Q of c0 + c1 x + c2 x^2, via a discriminant square test."""
    import math

    c0, c1, c2 = cs[0].val, cs[1].val, cs[2].val
    disc = c1 * c1 - 4 * c0 * c2
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return []
    from fractions import Fraction

    s = Fraction(rn, rd)
    roots = {(-cs[1].val + s) / (2 * cs[2].val), (-cs[1].val - s) / (2 * cs[2].val)}
    return [field(r) for r in sorted(roots)]


def _search_enumerate(field, spaces, astar):
    """Finite-field fallback for eigenspace profiles with a slice of
    dimension 3 or more, or several planes: enumerate every subspace of
    each eigenspace directly."""
    per_space = []
    for s in spaces:
        subs = [Subspace.zero(field, 4)]
        for coords in _coordinate_subspaces(field, s.dim):
            vecs = []
            for coeffs in coords:
                v = (field.zero,) * 4
                for c, bvec in zip(coeffs, s.basis):
                    v = vec_add(v, vec_scale(c, bvec))
                vecs.append(v)
            subs.append(Subspace(field, 4, vecs))
        per_space.append(subs)
    found = []
    for combo in product(*per_space):
        w = combo[0]
        for s in combo[1:]:
            w = w + s
        if 0 < w.dim < 4 and w.is_invariant(astar):
            found.append(w)
    if not found:
        return None
    return min(found, key=lambda s: (s.dim, s.to_json()))


def _coordinate_subspaces(field, m):
    """Echelon bases of all nonzero subspaces of F^m over a prime field."""
    for k in range(1, m + 1):
        for pivots in combinations(range(m), k):
            free_pos = [
                (i, j)
                for i in range(k)
                for j in range(pivots[i] + 1, m)
                if j not in pivots
            ]
            for values in product(field.elements(), repeat=len(free_pos)):
                rows = [[field.zero] * m for _ in range(k)]
                for i in range(k):
                    rows[i][pivots[i]] = field.one
                for (i, j), v in zip(free_pos, values):
                    rows[i][j] = v
                yield [tuple(r) for r in rows]
