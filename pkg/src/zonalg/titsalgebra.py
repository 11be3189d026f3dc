"""Rational face sums (the monoid algebra of the Tits product), the flats
algebra with its H/Q bases, characters, characteristic elements, and two
explicit complete families of orthogonal idempotents indexed by flats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import arrangement as arrg
from .arrangement import Arrangement, Face

_product_cache = {}


def _cached_product(f, g):
    key = (f, g)
    out = _product_cache.get(key)
    if out is None:
        out = arrg.tits_product(f, g)
        _product_cache[key] = out
    return out


def _clean(mapping):
    return {k: v for k, v in mapping.items() if v != 0}


@dataclass(frozen=True)
class TitsElement:
    """A sparse rational combination of faces, in the basis {H_F}."""

    arr: Arrangement
    terms: tuple  # sorted tuple of (Face, Fraction), no zero coefficients

    @classmethod
    def from_dict(cls, arr, mapping):
        items = sorted(_clean(mapping).items(), key=lambda kv: arrg._face_sort_key(kv[0]))
        return cls(arr, tuple(items))

    @classmethod
    def basis(cls, face):
        return cls(face.arr, ((face, Fraction(1)),))

    @classmethod
    def unit(cls, arr):
        return cls.basis(arrg.central_face(arr))

    @classmethod
    def zero(cls, arr):
        return cls(arr, ())

    def coeff(self, face):
        for f, c in self.terms:
            if f == face:
                return c
        return Fraction(0)

    def as_dict(self):
        return dict(self.terms)

    def _check(self, other):
        if self.arr != other.arr:
            raise ValueError("elements live over different arrangements")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for f, c in other.terms:
            out[f] = out.get(f, Fraction(0)) + c
        return TitsElement.from_dict(self.arr, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return TitsElement.zero(self.arr)
        return TitsElement(self.arr, tuple((f, v * c) for f, v in self.terms))

    def __mul__(self, other):
        """Bilinear extension of the Tits product."""
        self._check(other)
        out = {}
        for f, a in self.terms:
            for g, b in other.terms:
                fg = _cached_product(f, g)
                out[fg] = out.get(fg, Fraction(0)) + a * b
        return TitsElement.from_dict(self.arr, out)

    def is_zero(self):
        return not self.terms

    def support_image(self):
        """Apply the support map coefficientwise; lands in the flats algebra."""
        out = {}
        for f, c in self.terms:
            x = arrg.support(f)
            out[x] = out.get(x, Fraction(0)) + c
        return FlatsElement.from_dict(self.arr, out)

    def to_json(self):
        return [
            {"face": arrg.face_str(f), "coeff": str(c)} for f, c in self.terms
        ]

    @classmethod
    def from_json(cls, arr, data):
        out = {}
        for item in data:
            f = arrg.parse_face(arr, item["face"])
            out[f] = out.get(f, Fraction(0)) + Fraction(item["coeff"])
        return cls.from_dict(arr, out)


@dataclass(frozen=True)
class FlatsElement:
    """A sparse rational combination of flats (H basis of the flats algebra)."""

    arr: Arrangement
    terms: tuple

    @classmethod
    def from_dict(cls, arr, mapping):
        items = sorted(_clean(mapping).items(), key=lambda kv: arrg._flat_sort_key(kv[0]))
        return cls(arr, tuple(items))

    @classmethod
    def basis(cls, flat):
        return cls(flat.arr, ((flat, Fraction(1)),))

    def coeff(self, flat):
        for x, c in self.terms:
            if x == flat:
                return c
        return Fraction(0)

    def _check(self, other):
        if self.arr != other.arr:
            raise ValueError("elements live over different arrangements")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for x, c in other.terms:
            out[x] = out.get(x, Fraction(0)) + c
        return FlatsElement.from_dict(self.arr, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return FlatsElement(self.arr, ())
        return FlatsElement(self.arr, tuple((x, v * c) for x, v in self.terms))

    def __mul__(self, other):
        """H_X H_Y = H_{X v Y} extended bilinearly."""
        self._check(other)
        out = {}
        for x, a in self.terms:
            for y, b in other.terms:
                j = arrg.flat_join(x, y)
                out[j] = out.get(j, Fraction(0)) + a * b
        return FlatsElement.from_dict(self.arr, out)

    def is_zero(self):
        return not self.terms


def q_basis_element(flat):
    """Q_X = sum_{Y >= X} mu(X, Y) H_Y, the orthogonal idempotent at X."""
    out = {}
    for y in arrg.flats_geq(flat):
        out[y] = Fraction(arrg.mobius(flat, y))
    return FlatsElement.from_dict(flat.arr, out)


# ---------------------------------------------------------------------------
# characters and characteristic elements

def char_on_simple(w, flat):
    """Character of the simple module at a flat: sum of w^F over supp(F) <= X."""
    total = Fraction(0)
    for f, c in w.terms:
        if arrg.flat_leq(arrg.support(f), flat):
            total += c
    return total


def is_characteristic(w, t):
    """True iff the character at every flat X equals t^{dim X}."""
    t = Fraction(t)
    return all(char_on_simple(w, x) == t ** x.dim for x in arrg.flats(w.arr))


def characteristic_poly_value(arr, flat, t):
    coeffs = arrg.characteristic_polynomial(arr, flat)
    t = Fraction(t)
    return sum(c * t ** i for i, c in enumerate(coeffs))


def is_noncritical(arr, t):
    """True iff t is not a root of chi(A^X, .) for any flat X."""
    return all(characteristic_poly_value(arr, x, t) != 0 for x in arrg.flats(arr))


# ---------------------------------------------------------------------------
# Eulerian families

@dataclass(frozen=True)
class EulerianFamily:
    """A complete family of orthogonal idempotents indexed by flats."""

    arr: Arrangement
    elements: tuple  # of (Flat, TitsElement), sorted like flats(arr)

    @classmethod
    def from_dict(cls, arr, mapping):
        items = sorted(mapping.items(), key=lambda kv: arrg._flat_sort_key(kv[0]))
        return cls(arr, tuple(items))

    def __getitem__(self, flat):
        for x, e in self.elements:
            if x == flat:
                return e
        raise KeyError(flat)

    def flats(self):
        return [x for x, _ in self.elements]

    def completeness_defect(self):
        total = TitsElement.zero(self.arr)
        for _, e in self.elements:
            total = total + e
        return total - TitsElement.unit(self.arr)

    def check(self):
        """Idempotency, orthogonality, completeness, supports and the support
        condition on coefficients; raises AssertionError on failure."""
        def demand(cond, msg):
            if not cond:
                raise AssertionError(msg)

        demand(self.completeness_defect().is_zero(), "family does not sum to H_O")
        for x, e in self.elements:
            demand((e * e - e).is_zero(), f"E_{x} not idempotent")
            demand(e.support_image() == q_basis_element(x), f"supp(E_{x}) != Q_{x}")
            has_exact = False
            for f, _c in e.terms:
                s = arrg.support(f)
                demand(arrg.flat_leq(x, s), f"E_{x} has a term below its flat")
                if s == x:
                    has_exact = True
            demand(has_exact, f"E_{x} vanishes on support {x}")
        for x, e in self.elements:
            for y, g in self.elements:
                if x != y:
                    demand((e * g).is_zero(), f"E_{x} E_{y} != 0")
        return True


def _binomial(t, k):
    """(t choose k) for rational t: falling factorial over k!."""
    t = Fraction(t)
    num = Fraction(1)
    for i in range(k):
        num *= t - i
    return num / factorial(k)


def adams_element(d, t):
    """The braid-arrangement characteristic element sum_F (t choose dim F) H_F."""
    arr = arrg.braid(d)
    out = {}
    for f in arrg.faces(arr):
        c = _binomial(t, f.dim)
        if c:
            out[f] = c
    return TitsElement.from_dict(arr, out)


def adams_family(d):
    """The Eulerian idempotents attached to the Adams elements.

    E_X = (1/dim(X)!) sum_{supp F = X} sum_{G >= F} (-1)^{dim(G/F)}/deg(G/F) H_G,
    with deg(G/F) the product over blocks S of F of the number of G-blocks in S.
    """
    arr = arrg.braid(d)
    all_faces = arrg.faces(arr)
    family = {}
    for x in arrg.flats(arr):
        out = {}
        pref = Fraction(1, factorial(x.dim))
        for f in arrg.faces_with_support(arr, x):
            for g in all_faces:
                if not arrg.face_leq(f, g):
                    continue
                deg = 1
                for block in f.data:
                    deg *= sum(1 for b in g.data if b <= block)
                sign = -1 if (g.dim - f.dim) % 2 else 1
                out[g] = out.get(g, Fraction(0)) + pref * Fraction(sign, deg)
        family[x] = TitsElement.from_dict(arr, out)
    return EulerianFamily.from_dict(arr, family)


def _first_orthant_face(arr, zero_set):
    """The face of the coordinate arrangement: 0 on zero_set, + elsewhere."""
    signs = tuple(0 if i + 1 in zero_set else 1 for i in range(arr.d))
    return Face(arr, signs)


def gamma_element(d, t):
    """Characteristic element of the coordinate arrangement supported on the
    first orthant: coefficient (t-1)^{dim F} on each first-orthant face."""
    t = Fraction(t)
    if t == 1:
        raise ValueError("gamma requires t != 1")
    arr = arrg.coordinate(d)
    out = {}
    for f in arrg.faces(arr):
        if any(s < 0 for s in f.data):
            continue
        out[f] = (t - 1) ** f.dim
    return TitsElement.from_dict(arr, out)


def gamma_family(d, t):
    """(gamma_t, its Eulerian family) for the coordinate arrangement.

    E_{X_S} = sum_{T subset S} (-1)^{|S minus T|} H_{F_T}, where F_T is the
    intersection of the first orthant with the flat X_T.
    """
    import itertools

    arr = arrg.coordinate(d)
    gamma = gamma_element(d, t)
    family = {}
    for x in arrg.flats(arr):
        s = sorted(x.data)
        out = {}
        for r in range(len(s) + 1):
            for sub in itertools.combinations(s, r):
                f = _first_orthant_face(arr, frozenset(sub))
                sign = -1 if (len(s) - r) % 2 else 1
                out[f] = out.get(f, Fraction(0)) + sign
        family[x] = TitsElement.from_dict(arr, out)
    return gamma, EulerianFamily.from_dict(arr, family)


def family_reconstructs(element, family, t):
    """True iff element = sum_X t^{dim X} E_X exactly."""
    t = Fraction(t)
    acc = TitsElement.zero(element.arr)
    for x, e in family.elements:
        acc = acc + e.scale(t ** x.dim)
    return (acc - element).is_zero()
