"""Exact V-representation calculus for deformations of the ambient zonotope,
classes in the polytope algebra, and their faithful cone-weight coordinates.

A polytope is stored by its vertex set (exact rationals).  Everything
exploits the deformation property: the normal fan of a deformation coarsens
the arrangement fan, so argmax queries at chamber interior points extract
vertices, and argmax at interior points of an arbitrary arrangement face F
yields the face of the polytope attached to F, independently of the chosen
interior point.

The linear coordinates of a class are its cone weights: the weight at an
arrangement face F is the normalized volume of the polytope's face at F,
counted only when that face has complementary dimension.  This map is
linear, kills translations, vanishes on valuation relations, and is
injective on the span of deformation classes, so all equality and rank
questions are settled here.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial, gcd

from . import arrangement as arrg
from . import linalg
from .arrangement import Arrangement
from .gfseries import RatPoly


class NotDeformationError(ValueError):
    """The given points are not the vertices of a deformation of the zonotope."""


def _lcm(a, b):
    return a * b // gcd(a, b)


_INTERN = {}


def _chamber_vectors(arr):
    key = ("chambers", arr)
    out = _INTERN.get(key)
    if out is None:
        out = tuple(
            tuple(int(c) for c in arrg.interior_point(ch)) for ch in arrg.chambers(arr)
        )
        _INTERN[key] = out
    return out


class VPolytope:
    """A polytope given by its exact vertex set, tagged by the arrangement."""

    __slots__ = (
        "arr", "verts", "_ipts", "_dim", "_face_sets", "_face_cache",
        "_lattice", "_children", "_volumes", "_weights", "__weakref__",
    )

    def __new__(cls, arr, points, assume_vertices=False, check=False):
        pts = _dedup(points)
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if len({len(p) for p in pts}) != 1 or len(pts[0]) != arr.d:
            raise ValueError("points must all live in the ambient dimension")
        if assume_vertices:
            verts = tuple(sorted(pts))
        else:
            verts = _extract_vertices(arr, pts)
        key = (arr, verts)
        self = _INTERN.get(key)
        if self is None:
            self = object.__new__(cls)
            self.arr = arr
            self.verts = verts
            self._ipts = _int_coords(verts)
            self._dim = None
            self._face_sets = {}
            self._face_cache = {}
            self._lattice = None
            self._children = None
            self._volumes = {}
            self._weights = {}
            _INTERN[key] = self
        if check:
            check_deformation(self)
        return self

    # equality and hashing go through the intern table
    def __eq__(self, other):
        return self is other or (
            isinstance(other, VPolytope) and self.arr == other.arr and self.verts == other.verts
        )

    def __hash__(self):
        return hash((self.arr, self.verts))

    def __repr__(self):
        return f"VPolytope({self.arr.kind}{self.arr.d}, {len(self.verts)} vertices, dim {self.dim})"

    @property
    def dim(self):
        if self._dim is None:
            base = self.verts[0]
            diffs = [tuple(a - b for a, b in zip(v, base)) for v in self.verts[1:]]
            self._dim = linalg.rank(diffs, self.arr.d) if diffs else 0
        return self._dim

    # -- faces ------------------------------------------------------------

    def argmax_set(self, weight_vector):
        """Indices of the vertices maximizing an integer direction."""
        best = None
        out = []
        for i, q in enumerate(self._ipts):
            v = sum(a * b for a, b in zip(q, weight_vector))
            if best is None or v > best:
                best = v
                out = [i]
            elif v == best:
                out.append(i)
        return frozenset(out)

    def face_set(self, face):
        """Vertex-index set of the face of this polytope attached to an
        arrangement face."""
        fs = self._face_sets.get(face)
        if fs is None:
            w = tuple(int(c) for c in arrg.interior_point(face))
            fs = self.argmax_set(w)
            self._face_sets[face] = fs
        return fs

    def face_max(self, face):
        """The face of the polytope maximal in the directions of an
        arrangement face (the module action of that face)."""
        if face.arr != self.arr:
            raise ValueError("face from a different arrangement")
        q = self._face_cache.get(face)
        if q is None:
            fs = self.face_set(face)
            q = VPolytope(self.arr, [self.verts[i] for i in fs], assume_vertices=True)
            self._face_cache[face] = q
        return q

    def lattice(self):
        """All distinct faces (as vertex-index sets) with their dimensions."""
        if self._lattice is None:
            lat = {}
            for face in arrg.faces(self.arr):
                fs = self.face_set(face)
                if fs not in lat:
                    lat[fs] = _subset_dim(self, fs)
            self._lattice = lat
        return self._lattice

    def children(self):
        """fset -> list of its facets (codimension-one faces) in the lattice."""
        if self._children is None:
            lat = self.lattice()
            kids = {fs: [] for fs in lat}
            for fs, dim in lat.items():
                for gs, gdim in lat.items():
                    if gdim == dim - 1 and gs < fs:
                        kids[fs].append(gs)
            self._children = kids
        return self._children

    def f_vector(self):
        lat = self.lattice()
        out = [0] * (self.dim + 1)
        for _, dim in lat.items():
            out[dim] += 1
        return tuple(out)

    def h_polynomial(self):
        """h(p, z) = f(p, z-1)."""
        zm1 = RatPoly.of(-1, 1)
        acc = RatPoly.of(0)
        for i, f in enumerate(self.f_vector()):
            acc = acc + zm1 ** i * Fraction(f)
        return acc

    # -- volumes and cone weights ------------------------------------------

    def _simplices(self, fs):
        lat = self.lattice()
        if lat[fs] == 0:
            return [tuple(fs)]
        base = min(fs)
        out = []
        for g in self.children()[fs]:
            if base in g:
                continue
            for s in self._simplices(g):
                out.append((base,) + s)
        return out

    def face_volume(self, fs):
        """Normalized volume of a face: Euclidean volume in coordinates of a
        lattice basis of (span of the face) intersected with Z^d."""
        vol = self._volumes.get(fs)
        if vol is not None:
            return vol
        r = self.lattice()[fs]
        if r == 0:
            vol = Fraction(1)
        elif r == 1:
            a, b = (self.verts[i] for i in sorted(fs))
            vol = _segment_length(a, b)
        else:
            idx = sorted(fs)
            base_pt = self.verts[idx[0]]
            diffs = [
                tuple(a - b for a, b in zip(self.verts[i], base_pt)) for i in idx[1:]
            ]
            basis = linalg.span_lattice_basis(diffs, self.arr.d)
            coords = {}
            for i in fs:
                vec = tuple(a - b for a, b in zip(self.verts[i], base_pt))
                coords[i] = linalg.coords_in_basis(basis, vec)
            vol = Fraction(0)
            for simplex in self._simplices(fs):
                rows = [
                    [a - b for a, b in zip(coords[i], coords[simplex[0]])]
                    for i in simplex[1:]
                ]
                vol += abs(linalg.det(rows))
            vol /= factorial(r)
        self._volumes[fs] = vol
        return vol

    def cone_weight(self, face):
        """Weight of the class [p] at one arrangement face: the normalized
        volume of p's face there, if its dimension is complementary."""
        w = self._weights.get(face)
        if w is None:
            fs = self.face_set(face)
            qdim = self.lattice()[fs] if self._lattice else _subset_dim(self, fs)
            if qdim == self.arr.d - face.dim:
                if qdim <= 1:
                    if qdim == 0:
                        w = Fraction(1)
                    else:
                        a, b = (self.verts[i] for i in sorted(fs))
                        w = _segment_length(a, b)
                else:
                    self.lattice()
                    w = self.face_volume(fs)
            else:
                w = Fraction(0)
            self._weights[face] = w
        return w

    # -- polytope operations -------------------------------------------------

    def translate(self, t):
        return VPolytope(
            self.arr,
            [tuple(a + b for a, b in zip(v, t)) for v in self.verts],
            assume_vertices=True,
        )

    def normalized(self):
        """Translate the lexicographically least vertex to the origin."""
        base = self.verts[0]
        if all(c == 0 for c in base):
            return self
        return self.translate(tuple(-c for c in base))

    def minkowski(self, other):
        if self.arr != other.arr:
            raise ValueError("polytopes over different arrangements")
        pts = [
            tuple(a + b for a, b in zip(v, w))
            for v in self.verts
            for w in other.verts
        ]
        return VPolytope(self.arr, pts)

    def dilate(self, lam):
        lam = Fraction(lam)
        if lam < 0:
            raise ValueError("dilation requires a nonnegative scalar")
        if lam == 0:
            return VPolytope(self.arr, [(Fraction(0),) * self.arr.d], assume_vertices=True)
        return VPolytope(
            self.arr,
            [tuple(lam * c for c in v) for v in self.verts],
            assume_vertices=True,
        )


def _dedup(points):
    seen = set()
    out = []
    for p in points:
        t = tuple(Fraction(c) for c in p)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _int_coords(verts):
    den = 1
    for v in verts:
        for c in v:
            den = _lcm(den, c.denominator)
    return tuple(tuple(int(c * den) for c in v) for v in verts)


def _extract_vertices(arr, pts):
    ipts = _int_coords(pts)
    chosen = set()
    for w in _chamber_vectors(arr):
        best = None
        best_idx = []
        for i, q in enumerate(ipts):
            v = sum(a * b for a, b in zip(q, w))
            if best is None or v > best:
                best = v
                best_idx = [i]
            elif v == best:
                best_idx.append(i)
        if len(best_idx) > 1:
            raise NotDeformationError(
                "multiple maximizers at a chamber interior point; the hull is "
                "not a deformation of the ambient zonotope"
            )
        chosen.add(best_idx[0])
    return tuple(sorted(pts[i] for i in chosen))


def _subset_dim(p, fs):
    idx = sorted(fs)
    base = p.verts[idx[0]]
    diffs = [tuple(a - b for a, b in zip(p.verts[i], base)) for i in idx[1:]]
    return linalg.rank(diffs, p.arr.d) if diffs else 0


def _segment_length(a, b):
    """Lattice-normalized length of a segment: b - a as a multiple of the
    primitive integer vector in its direction."""
    v = tuple(x - y for x, y in zip(b, a))
    den = 1
    for c in v:
        den = _lcm(den, c.denominator)
    iv = [int(c * den) for c in v]
    g = 0
    for c in iv:
        g = gcd(g, abs(c))
    return Fraction(g, den)


def check_deformation(p):
    """Debug check: the argmax vertex set at every arrangement face must not
    depend on the choice of interior point."""
    for face in arrg.faces(p.arr):
        w0 = tuple(int(c) for c in arrg.interior_point(face, variant=0))
        w1 = arrg.interior_point(face, variant=1)
        den = 1
        for c in w1:
            den = _lcm(den, c.denominator)
        w1i = tuple(int(c * den) for c in w1)
        if p.argmax_set(w0) != p.argmax_set(w1i):
            raise NotDeformationError(
                f"face maximizer at {arrg.face_str(face)} depends on the "
                "interior point; not a deformation"
            )
    return True


# ---------------------------------------------------------------------------
# cone weights

class ConeWeights:
    """Sparse rational weights on the faces of an arrangement."""

    __slots__ = ("arr", "weights")

    def __init__(self, arr, weights=None):
        self.arr = arr
        self.weights = {f: Fraction(w) for f, w in (weights or {}).items() if w != 0}

    def __add__(self, other):
        out = dict(self.weights)
        for f, w in other.weights.items():
            out[f] = out.get(f, Fraction(0)) + w
        return ConeWeights(self.arr, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return ConeWeights(self.arr, {f: w * c for f, w in self.weights.items()})

    def __eq__(self, other):
        return (
            isinstance(other, ConeWeights)
            and self.arr == other.arr
            and self.weights == other.weights
        )

    def is_zero(self):
        return not self.weights

    def support_dims(self):
        return sorted({f.dim for f in self.weights})

    def to_vector(self, face_order):
        return [self.weights.get(f, Fraction(0)) for f in face_order]

    def to_json(self):
        keys = sorted(self.weights, key=arrg._face_sort_key)
        return [{"face": arrg.face_str(f), "coeff": str(self.weights[f])} for f in keys]


def polytope_cone_weights(p, face_dims=None):
    """Cone weights of the single class [p]."""
    out = {}
    for face in arrg.faces(p.arr):
        if face_dims is not None and face.dim not in face_dims:
            continue
        w = p.cone_weight(face)
        if w:
            out[face] = w
    return ConeWeights(p.arr, out)


# ---------------------------------------------------------------------------
# classes in the polytope algebra

class PiElement:
    """A formal rational combination of translation-normalized polytope
    classes.  Linear structure is formal; equality of classes is decided in
    cone-weight coordinates."""

    __slots__ = ("arr", "terms")

    def __init__(self, arr, terms=None):
        self.arr = arr
        clean = {}
        for p, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            q = p.normalized()
            clean[q] = clean.get(q, Fraction(0)) + c
        self.terms = {p: c for p, c in clean.items() if c != 0}

    @classmethod
    def of(cls, p, coeff=1):
        return cls(p.arr, {p: Fraction(coeff)})

    @classmethod
    def one(cls, arr):
        return cls.of(_point(arr))

    @classmethod
    def zero(cls, arr):
        return cls(arr, {})

    def _check(self, other):
        if self.arr != other.arr:
            raise ValueError("classes over different arrangements")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return PiElement(self.arr, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return PiElement(self.arr, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other):
        """Product of classes: Minkowski sum on representatives."""
        self._check(other)
        out = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = p.minkowski(q)
                out[r] = out.get(r, Fraction(0)) + a * b
        return PiElement(self.arr, out)

    def power(self, n):
        acc = PiElement.one(self.arr)
        for _ in range(n):
            acc = acc * self
        return acc

    def dilate(self, lam):
        return PiElement(self.arr, {p.dilate(lam): c for p, c in self.terms.items()})

    def degree0(self):
        """Coefficient of the point class in the degree decomposition."""
        return sum(self.terms.values(), Fraction(0))

    def act_face(self, face):
        """Module action of a single arrangement face: classwise maximization."""
        out = {}
        for p, c in self.terms.items():
            q = p.face_max(face)
            out[q] = out.get(q, Fraction(0)) + c
        return PiElement(self.arr, out)

    def act(self, element):
        """Module action of a face sum (bilinear extension)."""
        if element.arr != self.arr:
            raise ValueError("acting element over a different arrangement")
        acc = PiElement.zero(self.arr)
        for face, coeff in element.terms:
            acc = acc + self.act_face(face).scale(coeff)
        return acc

    def phi(self, face_dims=None):
        """Cone-weight coordinates of the class."""
        acc = ConeWeights(self.arr, {})
        for p, c in self.terms.items():
            acc = acc + polytope_cone_weights(p, face_dims).scale(c)
        return acc

    def is_formally_zero(self):
        return not self.terms

    def __repr__(self):
        return f"PiElement({self.arr.kind}{self.arr.d}, {len(self.terms)} terms)"


def _point(arr):
    return VPolytope(arr, [(Fraction(0),) * arr.d], assume_vertices=True)


def face_lattice(p):
    """All faces of the polytope as vertex-index sets with their dimensions."""
    return dict(p.lattice())


def lattice_volume(q):
    """Normalized volume of a polytope given by its vertex set: Euclidean
    volume in coordinates of a lattice basis of its linear span over Z^d."""
    q.lattice()
    return q.face_volume(frozenset(range(len(q.verts))))


def pi_equal(x, y):
    """Equality of classes, decided in the faithful cone-weight coordinates."""
    return (x - y).phi().is_zero()


def pi_multiply(x, y):
    return x * y


def module_act(x, element):
    return x.act(element)


# ---------------------------------------------------------------------------
# log, exp, grading

def log_class(p):
    """The logarithm of a polytope class, as a finite combination of dilates.

    Expands log(1 + ([p]-1)) using [p]^j = [jp] and the nilpotency of
    [p] - 1 beyond the dimension of p.
    """
    k = p.dim
    arr = p.arr
    if k == 0:
        return PiElement.zero(arr)
    coeffs = [Fraction(0)] * (k + 1)
    for r in range(1, k + 1):
        outer = Fraction((-1) ** (r - 1), r)
        for j in range(r + 1):
            sign = (-1) ** (r - j)
            coeffs[j] += outer * _choose(r, j) * sign
    out = PiElement.zero(arr)
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        out = out + PiElement.of(p.dilate(j), c)
    return out


def _choose(n, k):
    return Fraction(factorial(n), factorial(k) * factorial(n - k))


def exp_class(x):
    """Inverse of the logarithm on classes with zero degree-0 part."""
    if x.degree0() != 0:
        raise ValueError("exp requires zero degree-0 part")
    acc = PiElement.one(x.arr)
    term = PiElement.one(x.arr)
    for r in range(1, x.arr.d + 1):
        term = term * x
        acc = acc + term.scale(Fraction(1, factorial(r)))
    return acc


def graded_component(x, r):
    """The weight-r part of a class: exact interpolation across dilates.

    Dilation by lambda scales the weight-r part by lambda^r, so evaluating
    at d+1 integer dilation factors and solving the Vandermonde system
    isolates each graded piece.
    """
    d = x.arr.d
    if r < 0 or r > d:
        return PiElement.zero(x.arr)
    lams = list(range(1, d + 2))
    rows = [[Fraction(lam) ** k for k in range(d + 1)] for lam in lams]
    rhs = [Fraction(1) if i == r else Fraction(0) for i in range(d + 1)]
    # weights w with sum_lam w_lam lam^k = [k == r]
    weights = linalg.solve_unique([list(col) for col in zip(*rows)], rhs)
    acc = PiElement.zero(x.arr)
    for w, lam in zip(weights, lams):
        if w:
            acc = acc + x.dilate(lam).scale(w)
    return acc


# ---------------------------------------------------------------------------
# standard polytopes

def permutahedron(d):
    verts = [tuple(Fraction(v) for v in p) for p in itertools.permutations(range(1, d + 1))]
    return VPolytope(arrg.braid(d), verts, assume_vertices=True)


def typeB_permutahedron(d):
    verts = []
    for p in itertools.permutations(range(1, d + 1)):
        for signs in itertools.product((1, -1), repeat=d):
            verts.append(tuple(Fraction(v * s) for v, s in zip(p, signs)))
    return VPolytope(arrg.type_b(d), verts, assume_vertices=True)


def cube(d):
    verts = [tuple(Fraction(c) for c in v) for v in itertools.product((0, 1), repeat=d)]
    return VPolytope(arrg.coordinate(d), verts, assume_vertices=True)


def _unit(arr, e):
    """Signed standard basis point: e in [±d] gives ±e_{|e|}."""
    v = [Fraction(0)] * arr.d
    v[abs(e) - 1] = Fraction(1 if e > 0 else -1)
    return tuple(v)


def simplex(arr, indices):
    """Conv{e_i : i in S}; for type B the indices are signed and S must be
    involution-exclusive."""
    s = frozenset(indices)
    if arr.kind == arrg.KIND_A:
        if not s or not all(1 <= i <= arr.d for i in s):
            raise ValueError("simplex index set must be a nonempty subset of [d]")
    else:
        if not s or s & frozenset(-e for e in s):
            raise ValueError("simplex index set must be involution-exclusive")
    return VPolytope(arr, [_unit(arr, e) for e in sorted(s)], assume_vertices=True)


def simplex0(arr, indices):
    """Conv({0} ∪ {e_i : i in S}) for involution-exclusive signed S (type B)."""
    s = frozenset(indices)
    if not s or s & frozenset(-e for e in s):
        raise ValueError("index set must be nonempty and involution-exclusive")
    pts = [(Fraction(0),) * arr.d] + [_unit(arr, e) for e in sorted(s)]
    return VPolytope(arr, pts, assume_vertices=True)


def segment(arr, v):
    return VPolytope(arr, [(Fraction(0),) * arr.d, tuple(Fraction(c) for c in v)])


def hyperplane_normals(arr):
    d = arr.d
    out = []
    if arr.kind in (arrg.KIND_A, arrg.KIND_B):
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                out.append(tuple(Fraction(1 if k == i else (-1 if k == j else 0)) for k in range(1, d + 1)))
                if arr.kind == arrg.KIND_B:
                    out.append(tuple(Fraction(1 if k in (i, j) else 0) for k in range(1, d + 1)))
    if arr.kind in (arrg.KIND_B, arrg.KIND_C):
        for i in range(1, d + 1):
            out.append(tuple(Fraction(1 if k == i else 0) for k in range(1, d + 1)))
    return out


def zonotope_of(arr):
    """The Minkowski sum of the segments Conv{0, v_H} over all hyperplanes."""
    acc = _point(arr)
    for v in hyperplane_normals(arr):
        acc = acc.minkowski(segment(arr, v))
    return acc


def zonotope_face(arr, flat):
    """The summand of the zonotope over the hyperplanes containing a flat."""
    some_face = arrg.faces_with_support(arr, flat)[0]
    ip = arrg.interior_point(some_face)
    acc = _point(arr)
    for v in hyperplane_normals(arr):
        if sum(a * b for a, b in zip(v, ip)) == 0:
            acc = acc.minkowski(segment(arr, v))
    return acc


# ---------------------------------------------------------------------------
# slicing (generates valuation relations)

def _slice_form(arr, form):
    kind = form[0]
    d = arr.d
    vec = [Fraction(0)] * d
    if kind == "coord":
        _, i = form
        vec[i - 1] = Fraction(1)
    elif kind == "diff":
        if arr.kind == arrg.KIND_C:
            raise ValueError("difference forms are not available for the coordinate arrangement")
        _, i, j = form
        vec[i - 1] = Fraction(1)
        vec[j - 1] = Fraction(-1)
    elif kind == "sum":
        if arr.kind != arrg.KIND_B:
            raise ValueError("sum forms are only available for type B")
        _, i, j = form
        vec[i - 1] = Fraction(1)
        vec[j - 1] = Fraction(1)
    else:
        raise ValueError(f"unknown slice form {form!r}")
    return tuple(vec)


def slice_polytope(p, form, c, check=True):
    """Cut a deformation along a hyperplane; returns (lower, upper, section).

    The value c must lie strictly between the minimum and maximum of the form
    over the polytope.  Each piece is constructed with the deformation check
    on by default: cuts that break the deformation property (which can happen
    for difference forms in dimension >= 3) are rejected.
    """
    arr = p.arr
    vec = _slice_form(arr, form)
    c = Fraction(c)
    vals = {v: sum(a * b for a, b in zip(v, vec)) for v in p.verts}
    lo, hi = min(vals.values()), max(vals.values())
    if not (lo < c < hi):
        raise ValueError(f"slice level {c} outside the open range ({lo}, {hi})")
    lower = [v for v in p.verts if vals[v] <= c]
    upper = [v for v in p.verts if vals[v] >= c]
    section = [v for v in p.verts if vals[v] == c]
    lat = p.lattice()
    for fs, dim in lat.items():
        if dim != 1:
            continue
        i, j = sorted(fs)
        a, b = p.verts[i], p.verts[j]
        va, vb = vals[a], vals[b]
        if (va < c < vb) or (vb < c < va):
            t = (c - va) / (vb - va)
            cut = tuple(x + t * (y - x) for x, y in zip(a, b))
            lower.append(cut)
            upper.append(cut)
            section.append(cut)
    p_le = VPolytope(arr, lower, check=check)
    p_ge = VPolytope(arr, upper, check=check)
    p_eq = VPolytope(arr, section, check=check)
    return p_le, p_ge, p_eq


def valuation_relation(p, form, c, check=True):
    """[lower] + [upper] - [whole] - [section] as a formal class combination."""
    p_le, p_ge, p_eq = slice_polytope(p, form, c, check=check)
    return (
        PiElement.of(p_le) + PiElement.of(p_ge) - PiElement.of(p) - PiElement.of(p_eq)
    )


# ---------------------------------------------------------------------------
# degree-1 weights (edge lengths), computed without expanding the log

def psi1(p, face_dims=None):
    """Cone weights of log[p]: lattice edge lengths on complementary faces.

    Equals phi(log_class(p)) restricted to faces of dimension d-1; computed
    directly from the edges for speed.
    """
    arr = p.arr
    out = {}
    target = arr.d - 1
    for face in arrg.faces(arr):
        if face.dim != target:
            continue
        fs = p.face_set(face)
        if len(fs) == 2:
            i, j = sorted(fs)
            seg = _segment_length(p.verts[i], p.verts[j])
            if seg:
                out[face] = seg
    return ConeWeights(arr, out)


# ---------------------------------------------------------------------------
# serialization

_KIND_NAMES = {"A": arrg.KIND_A, "B": arrg.KIND_B, "C": arrg.KIND_C, "cube": arrg.KIND_C}


def polytope_to_json(p):
    return {
        "arrangement": p.arr.kind,
        "d": p.arr.d,
        "points": [[str(c) for c in v] for v in p.verts],
    }


def polytope_from_json(data):
    kind = _KIND_NAMES.get(data["arrangement"])
    if kind is None:
        raise ValueError(f"unknown arrangement {data['arrangement']!r}")
    arr = Arrangement(kind, int(data["d"]))
    pts = [tuple(Fraction(c) for c in row) for row in data["points"]]
    return VPolytope(arr, pts)
