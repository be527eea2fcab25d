"""Bounded search for elements of prescribed norm in a lattice of A[theta].

Two pieces support the class-equivalence test:

* basis reduction so that short elements have small coordinates (LLL over
  ``Z``; weak Popov form over ``F_p[t]``);
* exact batched norms of ``c Y`` for many coefficient vectors ``c`` at once,
  using numpy object arrays over ``Z`` and coefficient arrays modulo p over
  ``F_p[t]``.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .ring import FpPoly, IntegerRing

CHUNK = 8192


def reduce_basis(ring, rows):
    """Return a reduced basis of the row lattice (same span, short rows)."""
    rows = [list(r) for r in rows]
    if isinstance(ring, IntegerRing):
        return _lll(rows)
    return _weak_popov(ring, rows)


def _lll(rows):
    from sympy.polys.domains import ZZ as SZZ
    from sympy.polys.matrices import DomainMatrix

    M = DomainMatrix([[SZZ(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), SZZ)
    return [[int(x) for x in r] for r in M.lll().to_list()]


def _weak_popov(ring, rows):
    """Mulders-Storjohann reduction to weak Popov form.

    The leading position of a row is the rightmost entry of maximal degree;
    while two rows share a leading position, a monomial multiple of the lower
    degree row cancels the leading term of the other.
    """
    p = ring.p

    def lead(row):
        deg = max(x.degree for x in row)
        pos = max(j for j, x in enumerate(row) if x.degree == deg)
        return deg, pos

    while True:
        info = [lead(r) for r in rows]
        seen = {}
        pair = None
        for i, (_, pos) in enumerate(info):
            if pos in seen:
                pair = (seen[pos], i)
                break
            seen[pos] = i
        if pair is None:
            return rows
        i, k = pair
        if info[i][0] < info[k][0]:
            i, k = k, i
        di, pos = info[i]
        dk = info[k][0]
        c = rows[i][pos].lc() * pow(rows[k][pos].lc(), p - 2, p) % p
        mono = FpPoly(p, [0] * (di - dk) + [c])
        rows[i] = [x - mono * y for x, y in zip(rows[i], rows[k])]


def box_size(ring, b):
    """Number of coordinate values of size at most ``b``."""
    if isinstance(ring, IntegerRing):
        return 2 * b + 1
    return ring.p ** (b + 1)


def _digits(idx, base, n):
    out = []
    for _ in range(n):
        out.append(idx % base)
        idx = idx // base
    return out[::-1]


def shell_candidates(ring, n, b):
    """Coefficient vectors whose largest coordinate has size exactly ``b``.

    Vectors are normalized up to units: over ``Z`` the first nonzero entry is
    positive, over ``F_p[t]`` it is monic.  Yields chunks in a fixed order;
    over ``Z`` a chunk is an ``(m, n)`` object array of integers, over
    ``F_p[t]`` an ``(m, n, b+1)`` int64 array of coefficients.
    """
    m = box_size(ring, b)
    total = m**n
    integer = isinstance(ring, IntegerRing)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        digits = np.stack(_digits(idx, m, n), axis=1)
        if integer:
            vals = digits - b
            size = np.abs(vals)
            on_shell = size.max(axis=1) == b
            nz = vals != 0
            first = np.argmax(nz, axis=1)
            lead = vals[np.arange(len(vals)), first]
            keep = on_shell & (lead > 0)
            if keep.any():
                yield vals[keep].astype(object)
        else:
            p = ring.p
            coeffs = np.stack(_digits(digits, p, b + 1), axis=-1)[..., ::-1]  # low degree first
            nonzero = coeffs != 0
            has = nonzero.any(axis=-1)
            deg = np.where(has, (b + 1) - 1 - np.argmax(nonzero[..., ::-1], axis=-1), -1)
            on_shell = deg.max(axis=1) == b
            first = np.argmax(has, axis=1)
            rows = np.arange(len(idx))
            fdeg = deg[rows, first]
            lead = coeffs[rows, first, np.maximum(fdeg, 0)]
            keep = on_shell & (lead == 1)
            if keep.any():
                yield np.ascontiguousarray(coeffs[keep])


class _FpBatch:
    """Vectorized arithmetic on batches of polynomials over F_p."""

    def __init__(self, p):
        self.p = p

    def const(self, x, batch):
        c = np.array(x.c if x.c else (0,), dtype=np.int64)
        return np.broadcast_to(c, (batch, len(c)))

    def add(self, a, b):
        if a.shape[1] < b.shape[1]:
            a, b = b, a
        out = a.copy()
        out[:, : b.shape[1]] += b
        return out % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        if a.shape[1] > b.shape[1]:
            a, b = b, a
        out = np.zeros((a.shape[0], a.shape[1] + b.shape[1] - 1), dtype=np.int64)
        width = b.shape[1]
        for i in range(a.shape[1]):
            col = a[:, i : i + 1]
            if col.any():
                out[:, i : i + width] += col * b
                out %= self.p
        return _trim(out)

    def scale(self, a, x):
        """Batch times a single polynomial ``x``."""
        if not x:
            return np.zeros((a.shape[0], 1), dtype=np.int64)
        return self.mul(a, self.const(x, a.shape[0]))


def _trim(a):
    nz = np.nonzero(a.any(axis=0))[0]
    width = int(nz[-1]) + 1 if len(nz) else 1
    return a[:, :width]


def _perm_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def batch_norms(ctx, Y, cands):
    """Exact norms ``N(c Y)`` for every row ``c`` of ``cands``.

    ``Y`` is an integral basis (rows are coordinates).  Returns an object
    array of ints over ``Z`` and a ``(m, D)`` coefficient array over
    ``F_p[t]``.
    """
    ring, n = ctx.ring, ctx.n
    Tk = ctx.theta_powers
    perms = [(p, _perm_sign(p)) for p in permutations(range(n))]
    if isinstance(ring, IntegerRing):
        Yo = np.array([[int(x) for x in row] for row in Y], dtype=object)
        E = cands.dot(Yo)
        T = [[sum((E[:, k] * Tk[k][i][j] for k in range(n) if Tk[k][i][j]), np.zeros(len(E), dtype=object))
              for j in range(n)] for i in range(n)]
        total = np.zeros(len(E), dtype=object)
        for perm, sgn in perms:
            term = T[0][perm[0]]
            for i in range(1, n):
                term = term * T[i][perm[i]]
            total = total + term if sgn > 0 else total - term
        return total
    B = _FpBatch(ring.p)
    m = cands.shape[0]
    E = []
    for k in range(n):
        acc = np.zeros((m, 1), dtype=np.int64)
        for j in range(n):
            if Y[j][k]:
                acc = B.add(acc, B.scale(cands[:, j, :], Y[j][k]))
        E.append(_trim(acc))
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = np.zeros((m, 1), dtype=np.int64)
            for k in range(n):
                if Tk[k][i][j]:
                    acc = B.add(acc, B.scale(E[k], Tk[k][i][j]))
            T[i][j] = _trim(acc)
    total = np.zeros((m, 1), dtype=np.int64)
    for perm, sgn in perms:
        term = T[0][perm[0]]
        for i in range(1, n):
            term = B.mul(term, T[i][perm[i]])
        total = B.add(total, term if sgn > 0 else B.neg(term))
    return _trim(total)


def norm_matches(ctx, norms, target):
    """Mask of norms equal to ``target`` up to a unit of A."""
    ring = ctx.ring
    if isinstance(ring, IntegerRing):
        t = int(target)
        return np.array([x == t or x == -t for x in norms], dtype=bool)
    p = ring.p
    tc = np.array(target.c, dtype=np.int64)
    D = len(tc)
    m = norms.shape[0]
    if norms.shape[1] < D:
        return np.zeros(m, dtype=bool)
    high = norms[:, D:]
    ok = ~high.any(axis=1) if high.shape[1] else np.ones(m, dtype=bool)
    low = norms[:, :D]
    lc = low[:, D - 1]
    ok &= lc != 0
    # low * lc(target) == target * lc(low) coefficientwise mod p
    lhs = (low * tc[-1]) % p
    rhs = (tc[None, :] * lc[:, None]) % p
    ok &= (lhs == rhs).all(axis=1)
    return ok


def candidate_rows(ring, cands, idx):
    """Convert selected candidate rows back to ring elements."""
    if isinstance(ring, IntegerRing):
        return [[int(x) for x in cands[i]] for i in idx]
    p = ring.p
    return [[FpPoly(p, [int(v) for v in cands[i, j]]) for j in range(cands.shape[1])] for i in idx]
