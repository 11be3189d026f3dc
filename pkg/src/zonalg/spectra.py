"""Eigenspace dimensions of the dilation/face-action module by independent
routes, explicit eigenvector families, and signed-Minkowski decompositions.

The central quantity is the multiplicity table eta: for a flat X and a grade
r, the number of simple composition factors at X inside the grade-r part of
the deformation algebra.  Three routes compute it:

* ``eta_mobius`` -- Möbius sums of h-polynomials of zonotope faces;
* ``eta_permutations`` -- counting (signed) permutations by support and
  (B-)excedance;
* ``eta_idempotent_rank`` / ``eta_gamma_rank`` -- ranks of idempotent images
  in cone-weight coordinates (braid and coordinate arrangements).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import arrangement as arrg
from . import linalg, permstat, polyclass, titsalgebra
from .arrangement import Arrangement, Flat
from .gfseries import RatPoly, eulerian_A, eulerian_B
from .polyclass import PiElement, VPolytope, log_class


@dataclass(frozen=True)
class EtaTable:
    arr: Arrangement
    method: str
    entries: tuple  # sorted tuple of ((Flat, r), value)

    @classmethod
    def from_dict(cls, arr, method, mapping):
        items = sorted(
            mapping.items(), key=lambda kv: (arrg._flat_sort_key(kv[0][0]), kv[0][1])
        )
        return cls(arr, method, tuple(items))

    def value(self, flat, r):
        for (x, rr), v in self.entries:
            if x == flat and rr == r:
                return v
        return 0

    def as_dict(self):
        return dict(self.entries)

    def row_sums(self):
        """Totals per grade r (must equal the h-numbers of the zonotope)."""
        out = {}
        for (_, r), v in self.entries:
            out[r] = out.get(r, 0) + v
        return out

    def rows(self):
        return [
            {"flat": arrg.flat_str(x), "r": r, "value": v, "method": self.method}
            for (x, r), v in self.entries
        ]

    def to_csv(self):
        lines = ["flat,r,value,method"]
        for row in self.rows():
            lines.append(f"\"{row['flat']}\",{row['r']},{row['value']},{row['method']}")
        return "\n".join(lines)

    def same_values(self, other):
        return dict(self.entries) == dict(other.entries)


# ---------------------------------------------------------------------------
# route 1: Möbius sums of h-polynomials

def _h_shape_A(block_sizes):
    acc = RatPoly.of(1)
    for s in block_sizes:
        acc = acc * eulerian_A(s)
    return acc


def _flat_h_product(flat):
    """h-polynomial of the zonotope face at a flat, by the product formulas."""
    arr = flat.arr
    if arr.kind == arrg.KIND_A:
        return _h_shape_A(sorted(len(b) for b in flat.data))
    if arr.kind == arrg.KIND_B:
        zero, blocks = flat.data
        acc = eulerian_B(len(zero) // 2)
        seen = set()
        for b in blocks:
            if b in seen:
                continue
            seen.add(b)
            seen.add(frozenset(-e for e in b))
            acc = acc * eulerian_A(len(b))
        return acc
    return RatPoly.of(1, 1) ** len(flat.data)


@lru_cache(maxsize=None)
def _ambient_zonotope(arr):
    if arr.kind == arrg.KIND_A:
        return polyclass.permutahedron(arr.d)
    if arr.kind == arrg.KIND_B:
        return polyclass.typeB_permutahedron(arr.d)
    return polyclass.cube(arr.d)


def _flat_h_geometric(flat):
    """The same h-polynomial computed from an actual face of the zonotope."""
    arr = flat.arr
    z = _ambient_zonotope(arr)
    face = arrg.faces_with_support(arr, flat)[0]
    return z.face_max(face).h_polynomial()


def eta_mobius(arr, check_geometric=False):
    """The full eta table via Möbius sums of face h-polynomials.

    With ``check_geometric`` the h-polynomial of every face shape is also
    computed from actual vertex data and compared against the product form.
    """
    flats = arrg.flats(arr)
    hs = {}
    shapes_checked = set()
    for y in flats:
        hs[y] = _flat_h_product(y)
        if check_geometric:
            key = tuple(sorted(hs[y].coeffs))
            if key not in shapes_checked:
                shapes_checked.add(key)
                if _flat_h_geometric(y) != hs[y]:
                    raise AssertionError(
                        f"h-polynomial mismatch (geometric vs product) at {arrg.flat_str(y)}"
                    )
    out = {}
    for x in flats:
        poly = RatPoly.of(0)
        for y in flats:
            if arrg.flat_leq(x, y):
                poly = poly + hs[y] * Fraction(arrg.mobius(x, y))
        for r, c in enumerate(poly.coeffs):
            if c:
                if c.denominator != 1 or c < 0:
                    raise AssertionError(f"eta value {c} not a nonnegative integer")
                out[(x, r)] = int(c)
    return EtaTable.from_dict(arr, "mobius_formula", out)


# ---------------------------------------------------------------------------
# route 2: permutation counts

def eta_permutations(arr):
    if arr.kind == arrg.KIND_A:
        elems = permstat.symmetric_group(arr.d)
        stats = [(s.supp(), s.exc()) for s in elems]
    elif arr.kind == arrg.KIND_B:
        elems = permstat.hyperoctahedral_group(arr.d)
        stats = [(s.supp(), s.exc_b()) for s in elems]
    else:
        raise ValueError("permutation counts exist for the braid and type B arrangements")
    out = {}
    for supp, r in stats:
        out[(supp, r)] = out.get((supp, r), 0) + 1
    return EtaTable.from_dict(arr, "permutation_count", out)


# ---------------------------------------------------------------------------
# route 3: idempotent ranks in cone-weight coordinates

@lru_cache(maxsize=None)
def _adams_family(d):
    return titsalgebra.adams_family(d)


@lru_cache(maxsize=None)
def _gamma_family(d):
    _, fam = titsalgebra.gamma_family(d, 2)
    return fam


def _phi_vector(x, face_order):
    return x.phi().to_vector(face_order)


def _log_simplex(arr, s):
    return log_class(polyclass.simplex(arr, s))


@lru_cache(maxsize=None)
def _spanning_sets_braid(d):
    """Spanning sets of each graded piece for the braid arrangement.

    Grade r candidates are the path products of permutations with r
    excedances, extended with generic products of log-simplex classes until
    the span has the full h_r dimension (certified in cone-weight
    coordinates).
    """
    arr = arrg.braid(d)
    face_order = list(arrg.faces(arr))
    h = eulerian_A(d)
    spans = {0: [PiElement.one(arr)]}
    by_r = {}
    for sigma in permstat.symmetric_group(d):
        by_r.setdefault(sigma.exc(), []).append(sigma)
    subsets = [
        frozenset(s)
        for k in range(2, d + 1)
        for s in itertools.combinations(range(1, d + 1), k)
    ]
    for r in range(1, d):
        target = int(h.coeff(r))
        cands = []
        for sigma in by_r.get(r, []):
            paths = permstat.forest_of(sigma).leaf_paths()
            prod = PiElement.one(arr)
            for j in paths:
                prod = prod * _log_simplex(arr, j)
            cands.append(prod)
        tracker = linalg.IncrementalRank(len(face_order))
        chosen = []
        for b in cands:
            if tracker.add(_phi_vector(b, face_order)):
                chosen.append(b)
            if tracker.rank == target:
                break
        if tracker.rank < target:
            for combo in itertools.combinations_with_replacement(subsets, r):
                prod = PiElement.one(arr)
                for s in combo:
                    prod = prod * _log_simplex(arr, s)
                if tracker.add(_phi_vector(prod, face_order)):
                    chosen.append(prod)
                if tracker.rank == target:
                    break
        if tracker.rank != target:
            raise AssertionError(f"could not span grade {r} at dimension {target}")
        spans[r] = chosen
    return spans


def eta_idempotent_rank(d):
    """Braid-arrangement eta values as ranks of idempotent images."""
    if d > 4:
        raise permstat.BoundExceededError("idempotent ranks are bounded at d = 4")
    arr = arrg.braid(d)
    face_order = list(arrg.faces(arr))
    fam = _adams_family(d)
    spans = _spanning_sets_braid(d)
    out = {}
    for x in arrg.flats(arr):
        ex = fam[x]
        for r, basis in spans.items():
            tracker = linalg.IncrementalRank(len(face_order))
            for b in basis:
                tracker.add(_phi_vector(b.act(ex), face_order))
            if tracker.rank:
                out[(x, r)] = tracker.rank
    return EtaTable.from_dict(arr, "idempotent_rank", out)


def eta_gamma_rank(d):
    """Coordinate-arrangement eta values as ranks of idempotent images,
    using the segment-product eigenvectors as the spanning sets."""
    if d > 4:
        raise permstat.BoundExceededError("idempotent ranks are bounded at d = 4")
    arr = arrg.coordinate(d)
    face_order = list(arrg.faces(arr))
    fam = _gamma_family(d)
    ys = {}
    for k in range(0, d + 1):
        ys[k] = [
            _y_product(arr, s) for s in itertools.combinations(range(1, d + 1), k)
        ]
    out = {}
    for x in arrg.flats(arr):
        ex = fam[x]
        for r, basis in ys.items():
            tracker = linalg.IncrementalRank(len(face_order))
            for b in basis:
                tracker.add(_phi_vector(b.act(ex), face_order))
            if tracker.rank:
                out[(x, r)] = tracker.rank
    return EtaTable.from_dict(arr, "idempotent_rank", out)


def _y_product(arr, s):
    prod = PiElement.one(arr)
    for i in s:
        e = [0] * arr.d
        e[i - 1] = 1
        prod = prod * log_class(polyclass.segment(arr, tuple(e)))
    return prod


# ---------------------------------------------------------------------------
# the conjectural simultaneous eigenbasis (braid)

def x_sigma(sigma, family=None):
    """Path-product eigenvector candidate attached to a permutation."""
    d = sigma.d
    arr = arrg.braid(d)
    family = family or _adams_family(d)
    prod = PiElement.one(arr)
    for j in permstat.forest_of(sigma).leaf_paths():
        prod = prod * _log_simplex(arr, j)
    return prod.act(family[sigma.supp()])


def x_flat(flat):
    """The extremal product over the blocks of a flat: for each block, all
    segments from its minimum."""
    arr = flat.arr
    prod = PiElement.one(arr)
    for block in flat.data:
        m = min(block)
        for j in sorted(block):
            if j != m:
                prod = prod * _log_simplex(arr, frozenset({m, j}))
    return prod


def conjecture_check(d):
    """Independence of the x_sigma families, grouped by (support, excedance).

    The extremal grades (one excedance per non-singleton block count, and the
    maximal grade) are theorems and must pass; the intermediate grades are
    the conjectural part and are reported.
    """
    if d > 4:
        raise permstat.BoundExceededError("the full independence check is bounded at d = 4")
    arr = arrg.braid(d)
    face_order = list(arrg.faces(arr))
    fam = _adams_family(d)
    eta = eta_mobius(arr)
    groups = {}
    for sigma in permstat.symmetric_group(d):
        groups.setdefault((sigma.supp(), sigma.exc()), []).append(sigma)
    records = []
    all_pass = True
    for (x, r), sigmas in sorted(
        groups.items(), key=lambda kv: (arrg._flat_sort_key(kv[0][0]), kv[0][1])
    ):
        tracker = linalg.IncrementalRank(len(face_order))
        vectors = [x_sigma(s, fam) for s in sigmas]
        for v in vectors:
            tracker.add(_phi_vector(v, face_order))
        expected = eta.value(x, r)
        ok = tracker.rank == len(sigmas) == expected
        all_pass = all_pass and ok
        non_singletons = sum(1 for b in x.data if len(b) > 1)
        extremal = r == non_singletons or r == d - len(x.data)
        records.append(
            {
                "flat": arrg.flat_str(x),
                "r": r,
                "count": len(sigmas),
                "rank": tracker.rank,
                "eta": expected,
                "ok": ok,
                "extremal": extremal,
            }
        )
    # the closed-form extremal elements
    extremal_ok = True
    for x in arrg.flats(arr):
        xe = x_flat(x)
        r = d - len(x.data)
        if xe.phi().is_zero():
            extremal_ok = False
        acted = xe.act(fam[x])
        if not polyclass.pi_equal(acted, xe):
            extremal_ok = False
    return {
        "d": d,
        "groups": records,
        "all_independent": all_pass,
        "extremal_products_fixed": extremal_ok,
    }


# ---------------------------------------------------------------------------
# cube eigenbasis

def y_basis_cube(d):
    """The 2^d segment-product eigenvectors of the cube algebra."""
    if d > 5:
        raise permstat.BoundExceededError("the cube eigenbasis check is bounded at d = 5")
    arr = arrg.coordinate(d)
    face_order = list(arrg.faces(arr))
    fam = _gamma_family(d)
    cube = polyclass.cube(d)
    tracker = linalg.IncrementalRank(len(face_order))
    records = []
    ok_all = True
    for k in range(0, d + 1):
        for s in itertools.combinations(range(1, d + 1), k):
            y = _y_product(arr, s)
            flat = Flat(arr, frozenset(s))
            nonzero = not y.phi().is_zero()
            graded = y.dilate(2).phi() == y.phi().scale(Fraction(2) ** k)
            fixed = polyclass.pi_equal(y.act(fam[flat]), y)
            # inclusion-exclusion expansion over cube faces
            alt = PiElement.zero(arr)
            for t in _subsets(s):
                sign = (-1) ** (len(s) - len(t))
                face = titsalgebra._first_orthant_face(arr, frozenset(t))
                alt = alt + PiElement.of(cube.face_max(face), sign)
            expansion = polyclass.pi_equal(y, alt)
            indep = tracker.add(_phi_vector(y, face_order))
            ok = nonzero and graded and fixed and expansion and indep
            ok_all = ok_all and ok
            records.append(
                {
                    "S": sorted(s),
                    "nonzero": nonzero,
                    "graded": graded,
                    "idempotent_fixed": fixed,
                    "face_expansion": expansion,
                    "independent": indep,
                }
            )
    return {"d": d, "ok": ok_all and tracker.rank == 2 ** d, "records": records}


def _subsets(items):
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


# ---------------------------------------------------------------------------
# signed-Minkowski generators

@dataclass(frozen=True)
class GeneratorFamilyB:
    d: int
    members: tuple  # of ("simplex" | "simplex0", frozenset)

    def non_point_members(self):
        return [
            (kind, s)
            for kind, s in self.members
            if not (kind == "simplex" and len(s) == 1)
        ]

    def full_dimensional(self):
        return [(k, s) for k, s in self.members if k == "simplex0" and len(s) == self.d]

    def polytope(self, member):
        kind, s = member
        arr = arrg.type_b(self.d)
        if kind == "simplex":
            return polyclass.simplex(arr, s)
        return polyclass.simplex0(arr, s)

    def label(self, member):
        kind, s = member
        body = ",".join(str(e) for e in sorted(s, key=lambda e: (abs(e), e < 0)))
        return ("Delta{" if kind == "simplex" else "Delta0{") + body + "}"


def special_subsets(d):
    """Involution-exclusive subsets of [±d] containing the positive element
    of smallest absolute value."""
    out = []
    for abs_vals in _subsets(tuple(range(1, d + 1))):
        if not abs_vals:
            continue
        rest = abs_vals[1:]
        for signs in itertools.product((1, -1), repeat=len(rest)):
            s = frozenset([abs_vals[0]]) | frozenset(a * e for a, e in zip(rest, signs))
            out.append(s)
    out.sort(key=lambda s: (len(s), sorted((abs(e), e < 0) for e in s)))
    return out


def b_generators(d):
    members = []
    for s in special_subsets(d):
        if len(s) >= 2:
            members.append(("simplex", s))
    for s in special_subsets(d):
        members.append(("simplex0", s))
    for s in special_subsets(d):
        if len(s) == 1:
            members.append(("simplex", s))  # points, carrying translations
    return GeneratorFamilyB(d, tuple(members))


def _edge_weight_columns(arr, gens, gen_polys):
    face_order = [f for f in arrg.faces(arr) if f.dim == arr.d - 1]
    cols = []
    for g in gens:
        w = polyclass.psi1(gen_polys[g])
        cols.append([w.weights.get(f, Fraction(0)) for f in face_order])
    return face_order, cols


@lru_cache(maxsize=None)
def _b_system(d):
    arr = arrg.type_b(d)
    family = b_generators(d)
    gens = tuple(family.non_point_members())
    polys = {g: family.polytope(g) for g in gens}
    face_order, cols = _edge_weight_columns(arr, gens, polys)
    return family, gens, polys, face_order, cols


def b_decompose(p):
    """Unique signed-Minkowski coordinates of a type-B deformation in the
    special-simplex family (non-point members; points absorb translations)."""
    d = p.arr.d
    if d > 4 or p.arr.kind != arrg.KIND_B:
        raise ValueError("type-B decompositions need a type-B deformation with d <= 4")
    family, gens, polys, face_order, cols = _b_system(d)
    rows = [[col[i] for col in cols] for i in range(len(face_order))]
    target = polyclass.psi1(p)
    rhs = [target.weights.get(f, Fraction(0)) for f in face_order]
    sol = linalg.solve_unique(rows, rhs)
    return {g: c for g, c in zip(gens, sol)}


@lru_cache(maxsize=None)
def _a_system(d):
    arr = arrg.braid(d)
    gens = tuple(
        frozenset(s)
        for k in range(2, d + 1)
        for s in itertools.combinations(range(1, d + 1), k)
    )
    polys = {s: polyclass.simplex(arr, s) for s in gens}
    face_order = [f for f in arrg.faces(arr) if f.dim == arr.d - 1]
    cols = []
    for s in gens:
        w = polyclass.psi1(polys[s])
        cols.append([w.weights.get(f, Fraction(0)) for f in face_order])
    return gens, polys, face_order, cols


def a_decompose(p):
    """Coordinates of a braid deformation in the simplex-face basis."""
    d = p.arr.d
    if d > 5 or p.arr.kind != arrg.KIND_A:
        raise ValueError("type-A decompositions need a braid deformation with d <= 5")
    gens, polys, face_order, cols = _a_system(d)
    rows = [[col[i] for col in cols] for i in range(len(face_order))]
    target = polyclass.psi1(p)
    rhs = [target.weights.get(f, Fraction(0)) for f in face_order]
    sol = linalg.solve_unique(rows, rhs)
    return {s: c for s, c in zip(gens, sol)}


def reconstruction_holds(p, coeffs, polys):
    """Vertex-level signed-Minkowski identity:
    p + sum_{c<0} |c| gen = sum_{c>0} c gen, up to translation."""
    lhs = p
    rhs = None
    for g, c in coeffs.items():
        if c == 0:
            continue
        piece = polys[g].dilate(abs(c))
        if c < 0:
            lhs = lhs.minkowski(piece)
        else:
            rhs = piece if rhs is None else rhs.minkowski(piece)
    if rhs is None:
        rhs = VPolytope(p.arr, [(Fraction(0),) * p.arr.d], assume_vertices=True)
    return lhs.normalized() == rhs.normalized()


def random_b_deformation(d, rng, max_terms=6):
    """A random nonnegative integral combination of the generator family."""
    family, gens, polys, _, _ = _b_system(d)
    acc = VPolytope(arrg.type_b(d), [(Fraction(0),) * d], assume_vertices=True)
    used = {}
    count = rng.randint(1, max_terms)
    for g in rng.sample(list(gens), min(count, len(gens))):
        c = rng.choice((1, 1, 2))
        used[g] = Fraction(c)
        acc = acc.minkowski(polys[g].dilate(c))
    return acc, used
