"""Cartan matrices, weights, roots, Weyl/braid combinatorics, the shifted
action, and the (extended) affine Weyl machinery for type A.

Conventions used throughout the package:
  * the Cartan matrix is a[i][j] = alpha_j(h_i), so the j-th column holds the
    fundamental-weight coordinates of alpha_j;
  * weights are tuples of coordinates lambda_i = lambda(h_i) (ints in most
    places, Fractions allowed);
  * simple reflections are 1-indexed for finite types and 0-indexed with the
    extra node 0 for affine types;
  * a word (i1, ..., il) denotes the product s_{i1} s_{i2} ... s_{il}, acting
    on weights right-to-left.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd
import re

from . import linalg


# ----------------------------------------------------------------------
# Cartan matrices by type tag
# ----------------------------------------------------------------------

_RANK2 = {
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def _matrix_for(tag):
    m = re.fullmatch(r"A(\d+)(~?)", tag)
    if m:
        n, affine = int(m.group(1)), bool(m.group(2))
        if n < 1:
            raise ValueError("bad type tag %r" % tag)
        if not affine:
            return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0)
                               for j in range(n)) for i in range(n)), False
        if n == 1:
            return ((2, -2), (-2, 2)), True
        N = n + 1
        return tuple(tuple(2 if i == j else (-1 if (i - j) % N in (1, N - 1) else 0)
                           for j in range(N)) for i in range(N)), True
    if tag in _RANK2:
        return _RANK2[tag], False
    raise ValueError("unknown type tag %r" % tag)


def _symmetrizers(a):
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i != j and a[i][j]:
                    dj = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = dj
                        queue.append(j)
                    elif d[j] != dj:
                        raise ValueError("Cartan matrix is not symmetrizable")
    L = 1
    for x in d:
        L = L * x.denominator // _igcd(L, x.denominator)
    ints = [int(x * L) for x in d]
    g = 0
    for x in ints:
        g = _igcd(g, x)
    ints = [x // g for x in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * a[i][j] != ints[j] * a[j][i]:
                raise ValueError("Cartan matrix is not symmetrizable")
    return tuple(ints)


@dataclass(frozen=True)
class AffineWeight:
    """A weight of the affine algebra written as (finite part, level, degree)."""
    lam: tuple
    k: Fraction
    delta: Fraction

    def __iter__(self):
        return iter((self.lam, self.k, self.delta))

    def shift(self, other):
        return AffineWeight(tuple(a + b for a, b in zip(self.lam, other.lam)),
                            self.k + other.k, self.delta + other.delta)

    def negate(self):
        return AffineWeight(tuple(-a for a in self.lam), -self.k, -self.delta)


class CartanDatum:
    """Immutable Cartan datum plus the Weyl-group combinatorics built on it."""

    def __init__(self, tag):
        a, affine = _matrix_for(tag)
        self.tag = tag
        self.a = a
        self.affine = affine
        self.rank = len(a)
        self.d = _symmetrizers(a)
        self.letters = tuple(range(0, self.rank)) if affine else tuple(range(1, self.rank + 1))
        self._pos = {i: p for p, i in enumerate(self.letters)}
        self.rho = (1,) * self.rank
        self._elements = None
        self._form = None
        if affine:
            self.finite = cartan_datum(tag[:-1])
        else:
            self.finite = self

    # -- indexing -------------------------------------------------------

    def pos(self, i):
        try:
            return self._pos[i]
        except KeyError:
            raise IndexError("simple index %r out of range for %s" % (i, self.tag))

    def d_of(self, i):
        return self.d[self.pos(i)]

    def simple_root(self, i):
        """alpha_i in fundamental-weight coordinates (a column of a)."""
        p = self.pos(i)
        return tuple(self.a[k][p] for k in range(self.rank))

    def simple_coroot(self, i):
        p = self.pos(i)
        return tuple(1 if k == p else 0 for k in range(self.rank))

    # -- the W action on weight coordinates ------------------------------

    def reflect(self, i, lam):
        p = self.pos(i)
        c = lam[p]
        if not c:
            return tuple(lam)
        return tuple(lam[k] - c * self.a[k][p] for k in range(self.rank))

    def shifted_reflect(self, i, lam):
        p = self.pos(i)
        c = lam[p] + 1
        return tuple(lam[k] - c * self.a[k][p] for k in range(self.rank))

    def coroot_reflect(self, i, c):
        """s_i on a coroot written in the basis of simple coroots."""
        p = self.pos(i)
        pairing = sum(c[k] * self.a[k][p] for k in range(self.rank))
        return tuple(c[k] - pairing * (1 if k == p else 0) for k in range(self.rank))

    def simple_matrix(self, i):
        p = self.pos(i)
        return tuple(tuple((1 if k == j else 0) - (self.a[k][p] if j == p else 0)
                           for j in range(self.rank)) for k in range(self.rank))

    def word_matrix(self, word):
        M = tuple(tuple(1 if k == j else 0 for j in range(self.rank))
                  for k in range(self.rank))
        for i in word:
            M = _imat_mul(M, self.simple_matrix(i))
        return M

    def act(self, word, lam):
        for i in reversed(word):
            lam = self.reflect(i, lam)
        return tuple(lam)

    def shifted_act(self, word, lam):
        for i in reversed(word):
            lam = self.shifted_reflect(i, lam)
        return tuple(lam)

    # -- finite Weyl group enumeration ------------------------------------

    def _enumerate(self):
        if self.affine:
            raise ValueError("cannot enumerate the Weyl group of affine %s" % self.tag)
        if self._elements is not None:
            return self._elements
        ident = tuple(tuple(1 if k == j else 0 for j in range(self.rank))
                      for k in range(self.rank))
        words = {ident: ()}
        queue = deque([ident])
        gens = [(i, self.simple_matrix(i)) for i in self.letters]
        while queue:
            M = queue.popleft()
            w = words[M]
            for i, S in gens:
                M2 = _imat_mul(M, S)
                if M2 not in words:
                    words[M2] = w + (i,)
                    queue.append(M2)
        self._elements = words
        return words

    def weyl_elements(self):
        """All elements as (canonical reduced word, action matrix), by length."""
        words = self._enumerate()
        return sorted(((w, M) for M, w in words.items()),
                      key=lambda t: (len(t[0]), t[0]))

    def order(self):
        return len(self._enumerate())

    def longest_element(self):
        words = self._enumerate()
        return max(words.values(), key=len)

    def canonical_word(self, word_or_matrix):
        M = word_or_matrix if (word_or_matrix and isinstance(word_or_matrix[0], tuple)) \
            else self.word_matrix(word_or_matrix)
        return self._enumerate()[M]

    def length(self, word):
        return len(self.canonical_word(word))

    def is_reduced(self, word):
        return self.length(word) == len(word)

    def braid_order(self, i, j):
        """Order of s_i s_j; None when infinite (affine rank-2)."""
        p, q = self.pos(i), self.pos(j)
        return {0: 2, 1: 3, 2: 4, 3: 6}.get(self.a[p][q] * self.a[q][p])

    def braid_moves(self, word):
        """All words obtained from `word` by a single rank-2 braid move."""
        out = []
        n = len(word)
        for start in range(n):
            i = word[start]
            for j in self.letters:
                if j == i:
                    continue
                m = self.braid_order(i, j)
                if m is None or start + m > n:
                    continue
                ok = all(word[start + t] == (i if t % 2 == 0 else j) for t in range(m))
                if ok:
                    repl = tuple(j if t % 2 == 0 else i for t in range(m))
                    out.append(word[:start] + repl + word[start + m:])
        return out

    def reduced_words(self, word):
        """All reduced words of the element of `word` (braid-move closure)."""
        w0 = tuple(self.canonical_word(word))
        seen = {w0}
        queue = deque([w0])
        while queue:
            w = queue.popleft()
            for w2 in self.braid_moves(w):
                if w2 not in seen:
                    seen.add(w2)
                    queue.append(w2)
        return sorted(seen)

    def braid_equivalent(self, w1, w2):
        return self.word_matrix(w1) == self.word_matrix(w2) \
            and self.is_reduced(w1) and self.is_reduced(w2)

    # -- root sequences of reduced words -----------------------------------

    def root_reflect(self, i, root):
        """s_i on simple-root coordinates (the pairing uses row i of a)."""
        p = self.pos(i)
        pairing = sum(self.a[p][k] * root[k] for k in range(self.rank))
        return tuple(root[k] - pairing * (1 if k == p else 0) for k in range(self.rank))

    def alpha_sequence(self, word):
        """For a reduced word, the roots alpha^j = s_{i_l}...s_{i_{j+1}}(alpha_{i_j})
        as records (weight coords, root coords, coroot coords, d_j), j = 1..l."""
        if not self.affine and not self.is_reduced(word):
            raise ValueError("word %r is not reduced" % (word,))
        n = self.rank
        out = [None] * len(word)
        suffix = ()
        for j in range(len(word) - 1, -1, -1):
            i = word[j]
            p = self.pos(i)
            alpha = self.simple_root(i)
            root = tuple(1 if k == p else 0 for k in range(n))
            coroot = self.simple_coroot(i)
            # alpha^j = s_{i_l}...s_{i_{j+1}}(alpha_{i_j}): innermost letter first
            for t in suffix:
                alpha = self.reflect(t, alpha)
                root = self.root_reflect(t, root)
                coroot = self.coroot_reflect(t, coroot)
            out[j] = (alpha, root, coroot, self.d_of(i))
            suffix = (word[j],) + suffix
        return out

    def n_exponents(self, lam, word):
        """Pairs (n_j, d_j) with n_j = (lam+rho)(h_{alpha^j})."""
        lr = tuple(x + 1 for x in lam)
        return [(sum(c * x for c, x in zip(coroot, lr)), dj)
                for _, _, coroot, dj in self.alpha_sequence(word)]

    # -- roots --------------------------------------------------------------

    @property
    def positive_roots(self):
        """Records (weight coords, root coords, coroot coords, d) for every
        positive root, sorted by height."""
        return self._positive_roots()

    def _positive_roots(self):
        if self.affine:
            raise ValueError("positive roots enumerated for finite types only")
        if getattr(self, "_proots", None) is not None:
            return self._proots
        n = self.rank
        seeds = {}
        for i in self.letters:
            p = self.pos(i)
            rc = tuple(1 if k == p else 0 for k in range(n))
            seeds[rc] = (self.simple_root(i), rc, self.simple_coroot(i), self.d_of(i))
        frontier = deque(seeds.values())
        while frontier:
            om, rc, co, dd = frontier.popleft()
            for i in self.letters:
                om2 = self.reflect(i, om)
                p = self.pos(i)
                c = om[p]
                rc2 = tuple(rc[k] - c * (1 if k == p else 0) for k in range(n))
                co2 = self.coroot_reflect(i, co)
                key = rc2
                if all(x >= 0 for x in rc2) and key not in seeds:
                    seeds[key] = (om2, rc2, co2, dd)
                    frontier.append((om2, rc2, co2, dd))
        roots = sorted(seeds.values(), key=lambda t: (sum(t[1]), t[1]))
        self._proots = roots
        return roots

    @property
    def theta(self):
        """Highest root (weight coords, root coords, coroot coords, d)."""
        roots = self._positive_roots() if not self.affine \
            else self.finite._positive_roots()
        return roots[-1]

    def minuscule_coweights(self):
        """Indices i with theta(omega_i^vee) = 1."""
        fin = self.finite
        _, rc, _, _ = fin.theta
        return {i for i in fin.letters if rc[fin.pos(i)] == 1}

    def dual_coxeter_number(self):
        fin = self.finite
        _, _, co, _ = fin.theta
        return 1 + sum(co)

    # -- invariant form on weights ------------------------------------------

    def weight_form(self, lam, mu):
        """(lam, mu) for weights in fundamental-weight coordinates, normalized
        so (alpha_i, alpha_i) = 2 d_i."""
        if self._form is None:
            n = self.rank
            A = [[Fraction(self.a[i][j]) for j in range(n)] for i in range(n)]
            Ainv = linalg.mat_inv(A)
            # (lam, mu) = (A^{-1} lam) . D mu, hence F[i][j] = Ainv[j][i] d_j
            self._form = [[Ainv[j][i] * self.d[j] for j in range(n)] for i in range(n)]
        F = self._form
        n = self.rank
        return sum(Fraction(lam[i]) * F[i][j] * Fraction(mu[j])
                   for i in range(n) for j in range(n))

    # -- affine weights -------------------------------------------------------

    def affine_pairing(self, i, aw):
        """x(h_i) for an AffineWeight x, including the affine node 0."""
        if not self.affine:
            raise ValueError("affine pairing on a finite datum")
        if i == 0:
            fin = self.finite
            _, _, co, _ = fin.theta
            return aw.k - sum(c * x for c, x in zip(co, aw.lam))
        return aw.lam[self.finite.pos(i)]

    def affine_reflect(self, i, aw):
        if i == 0:
            fin = self.finite
            th, _, _, _ = fin.theta
            c = self.affine_pairing(0, aw)
            return AffineWeight(tuple(l + c * t for l, t in zip(aw.lam, th)),
                                aw.k, aw.delta - c)
        return AffineWeight(self.finite.reflect(i, aw.lam), aw.k, aw.delta)

    def affine_act(self, word, aw):
        for i in reversed(word):
            aw = self.affine_reflect(i, aw)
        return aw

    @property
    def affine_rho(self):
        """(rho, dual Coxeter number, 0)."""
        fin = self.finite
        return AffineWeight(fin.rho, Fraction(self.dual_coxeter_number()), Fraction(0))

    def affine_shifted_act(self, word, aw):
        r = self.affine_rho
        return self.affine_act(word, aw.shift(r)).shift(r.negate())

    # -- translations (type A; the form equals the basic form, m = 1) ---------

    def translation(self, nu):
        """The action of t_nu on AffineWeight, nu a coweight given in
        fundamental-coweight coordinates (type A: identified with a weight)."""
        fin = self.finite
        nw = tuple(nu)

        def act(aw):
            lam2 = tuple(l + aw.k * x for l, x in zip(aw.lam, nw))
            drop = fin.weight_form(aw.lam, nw) + aw.k * fin.weight_form(nw, nw) / 2
            return AffineWeight(lam2, aw.k, aw.delta - drop)
        return act

    def fundamental_translation(self, i):
        """For a minuscule fundamental coweight omega_i^vee (type A): the pair
        (pi_i as a permutation of node labels 0..r, w_i as a reduced word),
        with t_{omega_i^vee} = pi_i ∘ w_i."""
        if not self.affine:
            raise ValueError("translations live on the affine datum")
        fin = self.finite
        if i not in self.minuscule_coweights():
            raise ValueError("omega_%d^vee is not minuscule for %s" % (i, self.tag))
        n = self.rank  # number of nodes = finite rank + 1
        perm = tuple((j + i) % n for j in range(n))
        w0 = fin.longest_element()
        sub = [j for j in fin.letters if j != i]
        w0i = _parabolic_longest(fin, sub)
        word = fin.canonical_word(tuple(w0) + tuple(w0i))
        return perm, word

    def pi_action(self, i):
        """The action of pi_i on AffineWeight, defined by t_{omega_i^vee} w_i^{-1}."""
        perm, word = self.fundamental_translation(i)
        fin = self.finite
        nu = tuple(1 if j == i else 0 for j in fin.letters)
        t = self.translation(nu)
        inv = tuple(reversed(word))

        def act(aw):
            return t(self.affine_act(inv, aw))
        return act


def _parabolic_longest(fin, sub):
    """Longest element of the parabolic generated by `sub`, as a word."""
    lam = list(range(1, fin.rank + 1))  # strictly dominant seed
    coords = tuple(lam)
    word = []
    while True:
        for i in sub:
            if coords[fin.pos(i)] > 0:
                coords = fin.reflect(i, coords)
                word.append(i)
                break
        else:
            break
    return tuple(word)


def _imat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n))
                 for i in range(n))


@lru_cache(maxsize=None)
def cartan_datum(tag):
    return CartanDatum(tag)


def weyl_orbit(datum, lam):
    """The W-orbit of a weight (finite types)."""
    seen = {tuple(lam)}
    queue = deque([tuple(lam)])
    while queue:
        x = queue.popleft()
        for i in datum.letters:
            y = datum.reflect(i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def dominant(lam):
    return all(x >= 0 for x in lam)


def parse_weight(text, rank=None):
    coords = tuple(int(x.strip()) for x in str(text).split(","))
    if rank is not None and len(coords) != rank:
        raise ValueError("expected %d coordinates, got %d" % (rank, len(coords)))
    return coords
