"""Finite-dimensional modules and truncated Verma modules of the quantized
enveloping algebra, built over the exact scalar field.

Everything is driven by a free f-word calculus: a vector of the Verma module
M_lambda is a linear combination of words in the generators f_i applied to
the highest-weight vector, the e-action is computed by the exact commutation
rule, and the contravariant form is evaluated by moving e's across f-words.

Linear relations among f-words (the Serre ideal) do not depend on the highest
weight, so they are detected once per multidegree at a deeply antidominant
auxiliary weight -- where the contravariant form is nondegenerate at every
height -- and cached.  The resulting word bases are PBW bases valid in every
M_lambda; their sizes are certified against the Kostant partition count.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .rootdata import cartan_datum
from .scalars import QField


# ----------------------------------------------------------------------
# multidegree combinatorics
# ----------------------------------------------------------------------

def _ht(beta):
    return sum(beta)


def _words_of(letters, beta):
    """All f-words of the given multidegree, in shortlex order."""
    if not any(beta):
        yield ()
        return
    for p, i in enumerate(letters):
        if beta[p]:
            sub = beta[:p] + (beta[p] - 1,) + beta[p + 1:]
            for tail in _words_of(letters, sub):
                yield (i,) + tail


def _multidegrees(rank, depth):
    """All multidegree tuples with height <= depth, by (height, lex)."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k)
    rec([], depth)
    out.sort(key=lambda b: (sum(b), b))
    return out


@lru_cache(maxsize=None)
def _kostant_count(tag, beta):
    """Number of ways to write beta as an N-combination of positive roots."""
    datum = cartan_datum(tag)
    roots = [rc for _, rc, _, _ in datum.positive_roots]

    def rec(b, idx):
        if not any(b):
            return 1
        if idx == len(roots):
            return 0
        r = roots[idx]
        total = 0
        k = 0
        cur = b
        while all(x >= 0 for x in cur):
            total += rec(cur, idx + 1)
            cur = tuple(x - y for x, y in zip(cur, r))
            k += 1
        return total
    return rec(tuple(beta), 0)


def kostant_partitions(datum, beta):
    return _kostant_count(datum.tag, tuple(beta))


# ----------------------------------------------------------------------
# free f-word calculus
# ----------------------------------------------------------------------

def _dadd(d, k, v):
    cur = d.get(k)
    if cur is None:
        if v:
            d[k] = v
    else:
        s = cur + v
        if s:
            d[k] = s
        else:
            del d[k]


def _e_word(datum, field, lam, i, word, memo):
    """e_i acting on the f-word `word` applied to v_lam, as {word: scalar}."""
    key = (lam, i, word)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not word:
        out = {}
    else:
        j, rest = word[0], word[1:]
        out = {}
        for w2, c in _e_word(datum, field, lam, i, rest, memo).items():
            _dadd(out, (j,) + w2, c)
        if j == i:
            p = datum.pos(i)
            mu_hi = lam[p] - sum(datum.a[p][datum.pos(t)] for t in rest)
            c = field.qint(mu_hi, datum.d[p])
            if c:
                _dadd(out, rest, c)
    memo[key] = out
    return out


def _pair(datum, field, lam, u, w, ememo, pmemo):
    """Contravariant form <u v_lam, w v_lam> for f-words of equal multidegree."""
    if not u:
        return field.one
    key = (lam, u, w) if u <= w else (lam, w, u)
    hit = pmemo.get(key)
    if hit is not None:
        return hit
    acc = field.zero
    for w2, c in _e_word(datum, field, lam, u[0], w, ememo).items():
        acc = acc + c * _pair(datum, field, lam, u[1:], w2, ememo, pmemo)
    pmemo[key] = acc
    return acc


# ----------------------------------------------------------------------
# lambda-independent word bases per multidegree (cached)
# ----------------------------------------------------------------------

_PBW = {}
_MEMOS = {}


def _memos(datum, field):
    key = (datum.tag, field.key)
    m = _MEMOS.get(key)
    if m is None:
        m = ({}, {})
        _MEMOS[key] = m
    return m


class _PbwBlock:
    __slots__ = ("beta", "basis", "index", "gram", "graminv", "expansions", "lamstar")

    def __init__(self, beta, basis, gram, graminv, lamstar):
        self.beta = beta
        self.basis = basis
        self.index = {w: i for i, w in enumerate(basis)}
        self.gram = gram
        self.graminv = graminv
        self.expansions = {}
        self.lamstar = lamstar


def pbw_block(datum, field, beta):
    """The cached PBW data of one multidegree: shortlex-greedy basis words
    certified against the Kostant count, plus their Gram matrix at the
    auxiliary antidominant weight."""
    beta = tuple(beta)
    key = (datum.tag, field.key, beta)
    blk = _PBW.get(key)
    if blk is not None:
        return blk
    t = kostant_partitions(datum, beta)
    lamstar = (-(_ht(beta) + 2),) * datum.rank
    ememo, pmemo = _memos(datum, field)
    basis, gram = [], []
    for w in _words_of(datum.letters, beta):
        if len(basis) == t:
            break
        p = [_pair(datum, field, lamstar, w, b, ememo, pmemo) for b in basis]
        s = _pair(datum, field, lamstar, w, w, ememo, pmemo)
        if basis:
            x = linalg.solve(gram, p)
            schur = s - sum((a * b for a, b in zip(p, x)), field.zero)
        else:
            schur = s
        if schur:
            for row, extra in zip(gram, p):
                row.append(extra)
            gram.append(p + [s])
            basis.append(w)
    if len(basis) != t:
        raise RuntimeError(
            "PBW scan found %d of %d basis words at %s %s; the auxiliary weight "
            "is degenerate here" % (len(basis), t, datum.tag, beta))
    graminv = linalg.mat_inv(gram) if basis else []
    blk = _PbwBlock(beta, tuple(basis), gram, graminv, lamstar)
    _PBW[key] = blk
    return blk


def expand_word(datum, field, beta, word):
    """Coefficients of an f-word over the PBW basis of its multidegree.
    These are identities of the negative half, valid in every Verma module."""
    blk = pbw_block(datum, field, tuple(beta))
    j = blk.index.get(word)
    if j is not None:
        unit = [field.zero] * len(blk.basis)
        unit[j] = field.one
        return unit
    hit = blk.expansions.get(word)
    if hit is not None:
        return hit
    ememo, pmemo = _memos(datum, field)
    p = [_pair(datum, field, blk.lamstar, word, b, ememo, pmemo) for b in blk.basis]
    x = linalg.mat_vec(blk.graminv, p)
    blk.expansions[word] = x
    return x


def _beta_of(datum, word):
    beta = [0] * datum.rank
    for i in word:
        beta[datum.pos(i)] += 1
    return tuple(beta)


# ----------------------------------------------------------------------
# weight modules
# ----------------------------------------------------------------------

class WeightModule:
    """A module with chosen weight basis and sparse e_i/f_i action matrices.

    `eact[i]` and `fact[i]` are {(row, col): scalar} over global indices; the
    q^h action is implicit in the weight grading.  Immutable by convention.
    """

    def __init__(self, field, datum, weights, labels, eact, fact, kind="module"):
        self.field = field
        self.datum = datum
        self.weights = list(weights)
        self.labels = list(labels)
        self.eact = eact
        self.fact = fact
        self.kind = kind
        blocks = {}
        for idx, nu in enumerate(self.weights):
            blocks.setdefault(nu, []).append(idx)
        self.blocks = {nu: tuple(ix) for nu, ix in blocks.items()}
        self._blockcache = {}

    @property
    def dim(self):
        return len(self.weights)

    def weight_of(self, idx):
        return self.weights[idx]

    def mult(self, nu):
        b = self.blocks.get(tuple(nu))
        return len(b) if b else 0

    def weight_set(self):
        return sorted(self.blocks, key=lambda nu: (sum(nu), nu), reverse=True)

    def shifted_weight(self, i, nu):
        return tuple(x + self.datum.a[k][self.datum.pos(i)]
                     for k, x in enumerate(nu))

    def op_block(self, which, i, nu):
        """Dense block of e_i (which='e') or f_i from V[nu]; returns
        (target weight, matrix rows=target block, cols=source block) or None
        when the target weight space is absent."""
        nu = tuple(nu)
        key = (which, i, nu)
        hit = self._blockcache.get(key)
        if hit is not None:
            return hit
        p = self.datum.pos(i)
        sgn = 1 if which == "e" else -1
        target = tuple(x + sgn * self.datum.a[k][p] for k, x in enumerate(nu))
        src = self.blocks.get(nu)
        tgt = self.blocks.get(target)
        if src is None or tgt is None:
            self._blockcache[key] = None
            return None
        mat = self.eact[i] if which == "e" else self.fact[i]
        z = self.field.zero
        block = [[mat.get((r, c), z) for c in src] for r in tgt]
        out = (target, block)
        self._blockcache[key] = out
        return out

    def e_block(self, i, nu):
        return self.op_block("e", i, nu)

    def f_block(self, i, nu):
        return self.op_block("f", i, nu)

    def apply(self, which, i, vec):
        """Apply e_i or f_i to a global coordinate vector."""
        mat = self.eact[i] if which == "e" else self.fact[i]
        z = self.field.zero
        out = [z] * self.dim
        for (r, c), val in mat.items():
            if vec[c]:
                out[r] = out[r] + val * vec[c]
        return out

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def __repr__(self):
        return "<%s %s dim %d over %r>" % (self.kind, self.datum.tag, self.dim, self.field)


def trivial(datum, field):
    nu = (0,) * datum.rank
    e = {i: {} for i in datum.letters}
    f = {i: {} for i in datum.letters}
    return WeightModule(field, datum, [nu], ["1"], e, f, kind="trivial")


def _word_label(word):
    if not word:
        return "v"
    return "f" + "".join(str(i) for i in word) + ".v"


def verma_truncate(datum, field, lam, depth):
    """The quotient of M_lambda by everything of height > depth, on the PBW
    word basis.  e_i is exact below the cut; f_i truncates at the cut."""
    lam = tuple(lam)
    if any(int(x) != x for x in lam):
        raise ValueError("highest weight must be integral, got %r" % (lam,))
    lam = tuple(int(x) for x in lam)
    betas = _multidegrees(datum.rank, depth)
    basis_words = []
    index = {}
    weights = []
    for beta in betas:
        blk = pbw_block(datum, field, beta)
        wt = tuple(lam[k] - sum(beta[p] * datum.a[k][p] for p in range(datum.rank))
                   for k in range(datum.rank))
        for w in blk.basis:
            index[w] = len(basis_words)
            basis_words.append((beta, w))
            weights.append(wt)
    ememo = {}
    eact = {i: {} for i in datum.letters}
    fact = {i: {} for i in datum.letters}
    for col, (beta, w) in enumerate(basis_words):
        for i in datum.letters:
            p = datum.pos(i)
            # f_i w
            if _ht(beta) < depth:
                beta2 = beta[:p] + (beta[p] + 1,) + beta[p + 1:]
                coeffs = expand_word(datum, field, beta2, (i,) + w)
                for b2, c in zip(pbw_block(datum, field, beta2).basis, coeffs):
                    if c:
                        fact[i][(index[b2], col)] = c
            # e_i w at the actual highest weight
            if beta[p]:
                beta0 = beta[:p] + (beta[p] - 1,) + beta[p + 1:]
                blk0 = pbw_block(datum, field, beta0)
                acc = {}
                for w2, c in _e_word(datum, field, lam, i, w, ememo).items():
                    for b0, c0 in zip(blk0.basis, expand_word(datum, field, beta0, w2)):
                        if c0:
                            _dadd(acc, b0, c * c0)
                for b0, c in acc.items():
                    eact[i][(index[b0], col)] = c
    mod = WeightModule(field, datum, weights,
                       [_word_label(w) for _, w in basis_words], eact, fact,
                       kind="verma")
    mod.hw = lam
    mod.depth = depth
    mod.basis_words = basis_words
    mod.word_index = index
    mod.highest = 0
    return mod


def irreducible(datum, field, lam):
    """The simple module L_lambda for dominant integral lambda, built by
    quotienting each weight space of M_lambda by the kernel of the
    contravariant form at lambda itself."""
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError("irreducible() needs a dominant integral weight")
    w0 = datum.longest_element()
    low = datum.act(w0, lam)
    diff = tuple(a - b for a, b in zip(lam, low))
    n = datum.rank
    A = [[Fraction(datum.a[i][j]) for j in range(n)] for i in range(n)]
    hbound = sum(linalg.mat_vec(linalg.mat_inv(A), [Fraction(x) for x in diff]))
    assert hbound == int(hbound)
    hbound = int(hbound)
    ememo, pmemo = {}, {}
    # per multidegree: basis words + expansions of the words we touched
    level = {(0,) * n: ((), )}
    data = {(0,) * n: (((),), {})}
    order = [(0,) * n]
    h = 0
    while level and h < hbound:
        h += 1
        nxt = {}
        cand = set()
        for beta in level:
            for p in range(n):
                cand.add(beta[:p] + (beta[p] + 1,) + beta[p + 1:])
        for beta in sorted(cand):
            words = list(_words_of(datum.letters, beta))
            gram = [[_pair(datum, field, lam, u, w, ememo, pmemo) for w in words]
                    for u in words]
            R, piv = linalg.rref(gram)
            if not piv:
                continue
            basis = tuple(words[c] for c in piv)
            exps = {}
            for c in range(len(words)):
                if c not in piv:
                    exps[words[c]] = [R[r][c] for r in range(len(piv))]
            nxt[beta] = basis
            data[beta] = (basis, exps)
            order.append(beta)
        level = nxt
    if level:
        raise RuntimeError("weight system did not close; %r is not dominant?" % (lam,))

    index = {}
    weights = []
    basis_words = []
    for beta in order:
        basis, _ = data[beta]
        wt = tuple(lam[k] - sum(beta[p] * datum.a[k][p] for p in range(n))
                   for k in range(n))
        for w in basis:
            index[w] = len(basis_words)
            basis_words.append((beta, w))
            weights.append(wt)

    def expand(beta, w):
        basis, exps = data[beta]
        if w in exps:
            return basis, exps[w]
        unit = [field.zero] * len(basis)
        unit[basis.index(w)] = field.one
        return basis, unit

    eact = {i: {} for i in datum.letters}
    fact = {i: {} for i in datum.letters}
    for col, (beta, w) in enumerate(basis_words):
        for i in datum.letters:
            p = datum.pos(i)
            beta2 = beta[:p] + (beta[p] + 1,) + beta[p + 1:]
            if beta2 in data:
                basis2, coeffs = expand(beta2, (i,) + w)
                for b2, c in zip(basis2, coeffs):
                    if c:
                        fact[i][(index[b2], col)] = c
            if beta[p]:
                beta0 = beta[:p] + (beta[p] - 1,) + beta[p + 1:]
                if beta0 in data:
                    acc = {}
                    for w2, c in _e_word(datum, field, lam, i, w, ememo).items():
                        basis0, coeffs = expand(beta0, w2)
                        for b0, c0 in zip(basis0, coeffs):
                            if c0:
                                _dadd(acc, b0, c * c0)
                    for b0, c in acc.items():
                        eact[i][(index[b0], col)] = c
    mod = WeightModule(field, datum, weights,
                       [_word_label(w) for _, w in basis_words], eact, fact,
                       kind="irrep")
    mod.hw = lam
    mod.highest = 0
    return mod


# ----------------------------------------------------------------------
# tensor products and duals
# ----------------------------------------------------------------------

def tensor(A, B):
    """A (x) B with Delta(e_i) = e_i (x) q_i^{h_i} + 1 (x) e_i and
    Delta(f_i) = f_i (x) 1 + q_i^{-h_i} (x) f_i."""
    if A.field.key != B.field.key or A.datum.tag != B.datum.tag:
        raise ValueError("tensor factors live over different data")
    field, datum = A.field, A.datum
    dB = B.dim
    weights = []
    labels = []
    for a in range(A.dim):
        for b in range(dB):
            weights.append(tuple(x + y for x, y in zip(A.weights[a], B.weights[b])))
            labels.append("%s(x)%s" % (A.labels[a], B.labels[b]))
    eact = {i: {} for i in datum.letters}
    fact = {i: {} for i in datum.letters}
    for i in datum.letters:
        p = datum.pos(i)
        di = datum.d[p]
        for (a2, a), c in A.eact[i].items():
            for b in range(dB):
                s = c * field.qpow(di * B.weights[b][p])
                if s:
                    eact[i][(a2 * dB + b, a * dB + b)] = s
        for (b2, b), c in B.eact[i].items():
            for a in range(A.dim):
                _dadd(eact[i], (a * dB + b2, a * dB + b), c)
        for (a2, a), c in A.fact[i].items():
            for b in range(dB):
                _dadd(fact[i], (a2 * dB + b, a * dB + b), c)
        for (b2, b), c in B.fact[i].items():
            for a in range(A.dim):
                s = field.qpow(-di * A.weights[a][p]) * c
                if s:
                    _dadd(fact[i], (a * dB + b2, a * dB + b), s)
    mod = WeightModule(field, datum, weights, labels, eact, fact, kind="tensor")
    mod.factors = (A, B)
    return mod


def tensor_many(mods):
    acc = mods[0]
    for m in mods[1:]:
        acc = tensor(acc, m)
    return acc


def dual(V, left=False):
    """Right dual V^* (antipode S) or left dual ^*V (antipode S^{-1}), on the
    basis dual to V's."""
    field, datum = V.field, V.datum
    weights = [tuple(-x for x in nu) for nu in V.weights]
    labels = ["%s'" % l for l in V.labels]
    eact = {i: {} for i in datum.letters}
    fact = {i: {} for i in datum.letters}
    for i in datum.letters:
        p = datum.pos(i)
        di = datum.d[p]
        for (r, c), val in V.eact[i].items():
            # S(e_i) = -e_i q_i^{-h_i}; S^{-1}(e_i) = -q_i^{-h_i} e_i
            nu_src = V.weights[c][p]
            nu_tgt = V.weights[r][p]
            s = -val * field.qpow(-di * (nu_tgt if left else nu_src))
            if s:
                eact[i][(c, r)] = s
        for (r, c), val in V.fact[i].items():
            # S(f_i) = -q_i^{h_i} f_i; S^{-1}(f_i) = -f_i q_i^{h_i}
            nu_src = V.weights[c][p]
            nu_tgt = V.weights[r][p]
            s = -val * field.qpow(di * (nu_src if left else nu_tgt))
            if s:
                fact[i][(c, r)] = s
    mod = WeightModule(field, datum, weights, labels, eact, fact,
                       kind="dual" if not left else "ldual")
    mod.dual_of = V
    mod.left = left
    return mod


# ----------------------------------------------------------------------
# singular vectors
# ----------------------------------------------------------------------

def singular_vector(ambient, word):
    """v^lambda_{w.lambda} = f_{i_1}^{(n_1)} ... f_{i_l}^{(n_l)} v_lambda as a
    coordinate vector in the truncated Verma `ambient`."""
    datum, field = ambient.datum, ambient.field
    lam = ambient.hw
    ns = datum.n_exponents(lam, word)
    free = ()
    coeff = field.one
    for (i, (nj, dj)) in zip(word, ns):
        if nj < 0:
            raise ValueError("negative exponent n_j=%s; weight not dominant enough" % nj)
        free = free + (i,) * nj
        coeff = coeff * field.qfact(nj, dj).inv()
    beta = _beta_of(datum, free)
    if _ht(beta) > ambient.depth:
        raise ValueError("ambient depth %d < height %d of the singular vector"
                         % (ambient.depth, _ht(beta)))
    coeffs = expand_word(datum, field, beta, free)
    out = ambient.zero_vector()
    for b, c in zip(pbw_block(datum, field, beta).basis, coeffs):
        if c:
            out[ambient.word_index[b]] = coeff * c
    return out


# ----------------------------------------------------------------------
# sl2 strings
# ----------------------------------------------------------------------

class StringDecomposition:
    """All strings of the U_{q_i}(sl2) action on a module: for each string a
    highest vector u with e_i u = 0 and the divided-power basis f_i^{(k)} u."""

    def __init__(self, module, i, strings):
        self.module = module
        self.i = i
        self.strings = strings  # list of (m, top weight, [m+1 global vectors])

    def covering(self, nu):
        """Strings whose weight ladder passes through nu, with the ladder
        position k such that the k-th vector has weight nu."""
        nu = tuple(nu)
        datum = self.module.datum
        p = datum.pos(self.i)
        out = []
        for (m, top, vecs) in self.strings:
            # nu = top - k alpha_i?
            ks = {(top[j] - nu[j]) for j in range(len(nu)) if datum.a[j][p]}
            diffs = [Fraction(top[j] - nu[j], datum.a[j][p])
                     for j in range(len(nu)) if datum.a[j][p]]
            if not diffs or any(d != diffs[0] for d in diffs):
                continue
            k = diffs[0]
            if k.denominator != 1:
                continue
            k = int(k)
            if 0 <= k <= m and all(top[j] - k * datum.a[j][p] == nu[j]
                                   for j in range(len(nu))):
                out.append((m, k, vecs))
        return out

    def block_matrix(self, nu):
        """Columns are the string vectors passing through weight nu, written
        in the coordinates of the block V[nu]; returns (cover, S, Sinv) with
        cover the covering list."""
        module = self.module
        nu = tuple(nu)
        idxs = module.blocks[nu]
        cover = self.covering(nu)
        S = [[cover[c][2][cover[c][1]][r] for c in range(len(cover))] for r in idxs]
        if len(cover) != len(idxs):
            raise RuntimeError("string vectors through %r do not form a basis" % (nu,))
        return cover, S, linalg.mat_inv(S)


def sl2_strings(module, i):
    """Decompose the whole module into strings for the i-th sl2."""
    datum, field = module.datum, module.field
    p = datum.pos(i)
    di = datum.d[p]
    strings = []
    total = 0
    for nu in module.weight_set():
        m = nu[p]
        if m < 0:
            continue
        blk = module.e_block(i, nu)
        idxs = module.blocks[nu]
        if blk is None:
            kernel = linalg.identity(len(idxs), field.one, field.zero)
            kernel = [[kernel[r][c] for r in range(len(idxs))]
                      for c in range(len(idxs))]  # columns as vectors
        else:
            _, E = blk
            kernel = linalg.nullspace(E)
        for kv in kernel:
            # assemble the global highest vector
            u = module.zero_vector()
            for x, idx in zip(kv, idxs):
                u[idx] = x
            vecs = [u]
            cur = u
            for k in range(1, m + 1):
                cur = module.apply("f", i, cur)
                inv = field.qint(k, di).inv()
                cur = [inv * x for x in cur]
                vecs.append(cur)
            strings.append((m, nu, vecs))
            total += m + 1
    if total != module.dim:
        raise RuntimeError("string decomposition miscounted: %d of %d"
                           % (total, module.dim))
    return StringDecomposition(module, i, strings)


def sl2_string(module, i, nu):
    """The strings spanning the U_{q_i}(sl2)-submodule generated by V[nu]."""
    dec = sl2_strings(module, i)
    return dec.covering(tuple(nu))


# ----------------------------------------------------------------------
# relation checks (used by the test suites)
# ----------------------------------------------------------------------

def _smul(A, B):
    out = {}
    bycol = {}
    for (r, c), v in A.items():
        bycol.setdefault(c, []).append((r, v))
    for (r2, c2), v2 in B.items():
        for r, v in bycol.get(r2, ()):
            _dadd(out, (r, c2), v * v2)
    return out


def _ssub(A, B):
    out = dict(A)
    for k, v in B.items():
        _dadd(out, k, -v)
    return out


def _sdiag(vals):
    return {(j, j): v for j, v in enumerate(vals) if v}


def check_defining_relations(module):
    """Exact matrix check of the commutation and quantum Serre relations."""
    datum, field = module.datum, module.field
    for i in datum.letters:
        for j in datum.letters:
            lhs = _ssub(_smul(module.eact[i], module.fact[j]),
                        _smul(module.fact[j], module.eact[i]))
            if i == j:
                p = datum.pos(i)
                diag = _sdiag([field.qint(nu[p], datum.d[p]) for nu in module.weights])
                lhs = _ssub(lhs, diag)
            if lhs:
                raise AssertionError("[e_%s, f_%s] fails on %r" % (i, j, module))
    for i in datum.letters:
        for j in datum.letters:
            if i == j:
                continue
            p, r = datum.pos(i), datum.pos(j)
            N = 1 - datum.a[p][r]
            for mats in (module.eact, module.fact):
                acc = {}
                for k in range(N + 1):
                    term = mats[j]
                    for _ in range(k):
                        term = _smul(mats[i], term)
                    for _ in range(N - k):
                        term = _smul(term, mats[i])
                    sgn = -1 if k % 2 else 1
                    coef = field.qbinom(N, k, datum.d[p]) * field.rat(sgn)
                    for key, v in term.items():
                        _dadd(acc, key, coef * v)
                if acc:
                    raise AssertionError("Serre relation (%s,%s) fails on %r"
                                         % (i, j, module))
    return True
