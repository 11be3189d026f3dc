"""Permutations, signed permutations, their statistics, and the forest bijection.

Statistics follow the usual conventions: an excedance of a permutation is a
position i with sigma(i) > i; for signed permutations the B-excedance is
exc + floor((fneg+1)/2) where fneg counts positions mapped to negative
values.  Supports are returned as flats of the matching arrangement.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .arrangement import Flat, braid, type_b

MAX_SYMMETRIC = int(os.environ.get("ZONALG_MAX_SYMMETRIC", "8"))
MAX_HYPEROCTAHEDRAL = int(os.environ.get("ZONALG_MAX_HYPEROCTAHEDRAL", "6"))


class BoundExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


@dataclass(frozen=True)
class Permutation:
    images: tuple  # images[i-1] = sigma(i)

    def __post_init__(self):
        d = len(self.images)
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of [{d}]: {self.images}")

    @property
    def d(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.d + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def exc(self):
        return sum(1 for i in range(1, self.d + 1) if self(i) > i)

    def des(self):
        return sum(1 for i in range(1, self.d) if self(i) > self(i + 1))

    def supp(self):
        return Flat(braid(self.d), frozenset(frozenset(c) for c in self.cycles()))

    @classmethod
    def from_cycles(cls, d, cycles):
        images = list(range(1, d + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    def __str__(self):
        return "".join(f"({' '.join(str(x) for x in c)})" for c in self.cycles())


@dataclass(frozen=True)
class SignedPermutation:
    images: tuple  # images[i-1] = sigma(i) in [±d]; sigma(-i) = -sigma(i)

    def __post_init__(self):
        d = len(self.images)
        if sorted(abs(v) for v in self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def d(self):
        return len(self.images)

    def __call__(self, i):
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def cycles(self):
        """Cycles on the signed ground set [±d]."""
        seen = set()
        out = []
        for start in [x for i in range(1, self.d + 1) for x in (i, -i)]:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def exc(self):
        return sum(1 for i in range(1, self.d) if self(i) > i)

    def des(self):
        # descent at position 0 uses sigma(0) = 0
        return sum(1 for i in range(0, self.d) if (self(i) if i else 0) > self(i + 1))

    def fneg(self):
        return sum(1 for v in self.images if v < 0)

    def fexc(self):
        return 2 * self.exc() + self.fneg()

    def exc_b(self):
        return (self.fexc() + 1) // 2

    def supp(self):
        """Signed partition: cycles, with self-negative cycles merged into the zero block."""
        zero = set()
        blocks = set()
        for cyc in self.cycles():
            s = frozenset(cyc)
            if s & frozenset(-e for e in s):
                zero |= s
            else:
                blocks.add(s)
        return Flat(type_b(self.d), (frozenset(zero), frozenset(blocks)))

    @classmethod
    def from_cycles(cls, d, cycles):
        images = {}
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + tuple(cyc[:1])):
                images[a] = b
                images[-a] = -b
        out = [images.get(i, i) for i in range(1, d + 1)]
        return cls(tuple(out))

    def __str__(self):
        return "".join(f"({' '.join(str(x) for x in c)})" for c in self.cycles())


def parse_signed_cycles(d, text):
    """Parse cycle notation like "(1)(-1)(2 -2)(3 4 -3 -4)"."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        cycles.append(tuple(int(t) for t in chunk.split()))
    # keep only one representative of each mirrored pair
    seen = set()
    uniq = []
    for cyc in cycles:
        s = frozenset(cyc)
        if s in seen:
            continue
        seen.add(s)
        seen.add(frozenset(-e for e in s))
        uniq.append(cyc)
    return SignedPermutation.from_cycles(d, uniq)


def stats(sigma):
    return {"exc": sigma.exc(), "des": sigma.des(), "supp": sigma.supp()}


def stats_signed(sigma):
    return {
        "exc": sigma.exc(),
        "fneg": sigma.fneg(),
        "fexc": sigma.fexc(),
        "exc_B": sigma.exc_b(),
        "supp": sigma.supp(),
    }


# ---------------------------------------------------------------------------
# the order used for type-B cycle excedances: negatives by increasing
# absolute value, then positives increasing

def _prec_key(e):
    return (0, -e) if e < 0 else (1, e)


def exc_prec(cycle):
    """Number of excedances of a cyclic permutation of an involution-exclusive
    set, with respect to the order: -1 < -2 < ... < 0 < ... < 1 < 2 ..."""
    s = frozenset(cycle)
    if s & frozenset(-e for e in s):
        raise ValueError("cycle support must be involution-exclusive")
    count = 0
    for a, b in zip(cycle, cycle[1:] + tuple(cycle[:1])):
        if _prec_key(b) > _prec_key(a):
            count += 1
    return count


def cycle_through(sigma, start):
    """The cycle of ``sigma`` through ``start`` as a tuple."""
    cyc = [start]
    nxt = sigma(start)
    while nxt != start:
        cyc.append(nxt)
        nxt = sigma(nxt)
    return tuple(cyc)


def restrict_to_zero_block(sigma):
    """Restriction of a signed permutation to the zero block of its support,
    relabeled as a signed permutation of {1..k}."""
    zero, _blocks = sigma.supp().data
    abs_z = sorted({abs(e) for e in zero})
    relabel = {a: i + 1 for i, a in enumerate(abs_z)}
    imgs = []
    for a in abs_z:
        v = sigma(a)
        imgs.append(relabel[abs(v)] * (1 if v > 0 else -1))
    return SignedPermutation(tuple(imgs)) if imgs else None


# ---------------------------------------------------------------------------
# increasing forests

@dataclass(frozen=True)
class Tree:
    root: int
    children: tuple  # of Tree, roots increasing left to right

    def nodes(self):
        out = {self.root}
        for c in self.children:
            out |= c.nodes()
        return out

    def leaves(self):
        if not self.children:
            return 0
        return sum(max(c.leaves(), 1) for c in self.children)

    def postorder(self):
        out = []
        for c in self.children:
            out.extend(c.postorder())
        out.append(self.root)
        return out


@dataclass(frozen=True)
class IncreasingForest:
    trees: tuple  # of Tree, ordered by root

    def __post_init__(self):
        for t in self.trees:
            _validate_tree(t)
        all_nodes = [n for t in self.trees for n in t.nodes()]
        if len(all_nodes) != len(set(all_nodes)):
            raise ValueError("trees share nodes")

    @property
    def d(self):
        return max((n for t in self.trees for n in t.nodes()), default=0)

    def leaves(self):
        return sum(t.leaves() for t in self.trees)

    def node_sets(self):
        return frozenset(frozenset(t.nodes()) for t in self.trees)

    def leaf_paths(self):
        """For each leaf (left to right, trees by root), the node set of the
        path from the leaf to the root of its tree."""
        paths = []

        def walk(tree, above):
            here = above + [tree.root]
            if not tree.children:
                if len(here) > 1:
                    paths.append(frozenset(here))
                return
            for c in tree.children:
                walk(c, here)

        for t in sorted(self.trees, key=lambda t: t.root):
            walk(t, [])
        return paths


def _validate_tree(tree):
    roots = [c.root for c in tree.children]
    if roots != sorted(roots) or len(set(roots)) != len(roots):
        raise ValueError("children must be increasing left to right")
    for c in tree.children:
        if c.root <= tree.root:
            raise ValueError("each child must be larger than its parent")
        _validate_tree(c)


def _parse_postorder(word):
    """Split a postorder word into subtrees; each segment ends at the running minimum."""
    subtrees = []
    i = 0
    while i < len(word):
        rest = word[i:]
        j = i + rest.index(min(rest))
        seg = word[i:j + 1]
        subtrees.append(Tree(seg[-1], _parse_postorder(seg[:-1])))
        i = j + 1
    return tuple(subtrees)


def forest_of(sigma):
    """The increasing rooted forest of a permutation (components = cycles)."""
    trees = []
    for cyc in sigma.cycles():
        m = min(cyc)
        k = cyc.index(m)
        word = list(cyc[k + 1:]) + list(cyc[:k + 1])  # cycle rotated so min is last
        trees.append(Tree(m, _parse_postorder(word[:-1])))
    trees.sort(key=lambda t: t.root)
    return IncreasingForest(tuple(trees))


def perm_of(forest):
    """Inverse of ``forest_of``: read each tree in postorder as one cycle."""
    d = forest.d
    cycles = [tuple(t.postorder()) for t in forest.trees]
    return Permutation.from_cycles(d, cycles)


# ---------------------------------------------------------------------------
# enumeration (the brute-force oracle)

def symmetric_group(d):
    if d > MAX_SYMMETRIC:
        raise BoundExceededError(f"S_{d} exceeds the bound {MAX_SYMMETRIC}")
    return [Permutation(p) for p in itertools.permutations(range(1, d + 1))]


def hyperoctahedral_group(d):
    if d > MAX_HYPEROCTAHEDRAL:
        raise BoundExceededError(f"B_{d} exceeds the bound {MAX_HYPEROCTAHEDRAL}")
    out = []
    for p in itertools.permutations(range(1, d + 1)):
        for signs in itertools.product((1, -1), repeat=d):
            out.append(SignedPermutation(tuple(v * s for v, s in zip(p, signs))))
    return out


def enumerate_group(group, d, supp=None, exc=None, exc_b=None):
    """Filtered exhaustive enumeration; the oracle for the eigenspace counts.

    ``group`` is "S" or "B".  Filters: supp (a Flat), exc (type A) or exc_b
    (type B).
    """
    if group == "S":
        elems = symmetric_group(d)
        out = []
        for s in elems:
            if supp is not None and s.supp() != supp:
                continue
            if exc is not None and s.exc() != exc:
                continue
            out.append(s)
        return out
    if group == "B":
        out = []
        for s in hyperoctahedral_group(d):
            if supp is not None and s.supp() != supp:
                continue
            if exc_b is not None and s.exc_b() != exc_b:
                continue
            if exc is not None and s.exc() != exc:
                continue
            out.append(s)
        return out
    raise ValueError(f"unknown group {group!r}")
