"""Exact matrix algebra over a Euclidean base ring and its fraction field.

Matrices are lists of row lists.  Every routine takes the ring object first
so the same code serves ``Z`` and ``F_p[t]``.
"""

from __future__ import annotations

from .poly import Poly
from .ring import Frac, exact_div, gcd_ext


def identity(ring, n):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def zeros(ring, m, n):
    return [[ring.zero] * n for _ in range(m)]


def mat_mul(A, B):
    inner = len(B)
    cols = len(B[0])
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = row[0] * B[0][j]
            for k in range(1, inner):
                acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    return [[a * s for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def freeze(A):
    return tuple(tuple(row) for row in A)


def mat_equal(A, B):
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def det(ring, M):
    """Fraction-free Bareiss elimination; every division is exact in A."""
    n = len(M)
    if n == 0:
        return ring.one
    A = [list(row) for row in M]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = exact_div(ring, A[i][j] * pivot - A[i][k] * A[k][j], prev)
        prev = pivot
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def det_leibniz(ring, M):
    """Permutation expansion; only for tiny matrices and test oracles."""
    from itertools import permutations

    n = len(M)
    total = ring.zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total


def charpoly(ring, M):
    """Characteristic polynomial ``det(xI - M)`` by Berkowitz's algorithm.

    Division-free, hence valid in every characteristic.
    """
    n = len(M)
    p = [ring.one]  # coefficients, highest degree first
    for r in range(n):
        a = M[r][r]
        row = M[r][:r]
        col = [M[i][r] for i in range(r)]
        column = [ring.one, -a]
        vec = col
        for _ in range(r):
            s = ring.zero
            for x, y in zip(row, vec):
                s = s + x * y
            column.append(-s)
            vec = [sum((M[i][k] * vec[k] for k in range(r)), ring.zero) for i in range(r)]
        newp = []
        for i in range(r + 2):
            acc = ring.zero
            for j in range(min(i, r) + 1):
                if i - j < len(column):
                    acc = acc + column[i - j] * p[j]
            newp.append(acc)
        p = newp
    return Poly(list(reversed(p)))


def to_frac(ring, M):
    return [[x if isinstance(x, Frac) else Frac(ring, x) for x in row] for row in M]


def from_frac(M):
    """Convert a fraction matrix with trivial denominators back to A."""
    out = []
    for row in M:
        new = []
        for x in row:
            if not x.is_integral():
                raise ArithmeticError("matrix is not integral")
            new.append(x.num)
        out.append(new)
    return out


def is_integral(M):
    return all(x.is_integral() for row in M for x in row)


def mat_inverse(ring, M):
    """Inverse over the fraction field by Gauss-Jordan elimination."""
    n = len(M)
    A = to_frac(ring, M)
    one, zero = Frac(ring, ring.one), Frac(ring, ring.zero)
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[k], A[piv] = A[piv], A[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        s = A[k][k].inverse()
        A[k] = [x * s for x in A[k]]
        inv[k] = [x * s for x in inv[k]]
        for i in range(n):
            if i != k and A[i][k]:
                c = A[i][k]
                A[i] = [x - c * y for x, y in zip(A[i], A[k])]
                inv[i] = [x - c * y for x, y in zip(inv[i], inv[k])]
    return inv


def conjugate(ring, P, M):
    """``P M P^-1`` over the fraction field."""
    return mat_mul(mat_mul(to_frac(ring, P), to_frac(ring, M)), mat_inverse(ring, P))


def _combine(ring, rows, r, s, j):
    """Unimodular 2x2 row operation putting gcd(rows[r][j], rows[s][j]) in row r."""
    a, b = rows[r][j], rows[s][j]
    g, x, y = gcd_ext(ring, a, b)
    ag, bg = exact_div(ring, a, g), exact_div(ring, b, g)
    ra, rb = rows[r], rows[s]
    rows[r] = [x * u + y * v for u, v in zip(ra, rb)]
    rows[s] = [bg * u - ag * v for u, v in zip(ra, rb)]


def hnf_rows(ring, M):
    """Lower-triangular Hermite normal form of the row span of ``M``.

    Diagonal entries are normalized associates and ``H[i][j]`` for ``j < i``
    is reduced modulo ``H[j][j]``.  The row span must have full rank.
    """
    if not M:
        raise ValueError("lattice not full rank")
    n = len(M[0])
    active = [list(row) for row in M if any(row)]
    H = [None] * n
    for j in range(n - 1, -1, -1):
        nz = [i for i, row in enumerate(active) if row[j]]
        if not nz:
            raise ValueError("lattice not full rank")
        r = nz[0]
        for s in nz[1:]:
            _combine(ring, active, r, s, j)
        u, _ = ring.normalize_unit(active[r][j])
        if u != ring.one:
            ui = ring.unit_inverse(u)
            active[r] = [x * ui for x in active[r]]
        H[j] = active.pop(r)
        active = [row for row in active if any(row)]
    if active:
        raise ArithmeticError("leftover rows after triangularization")
    for j in range(n - 1, -1, -1):
        d = H[j][j]
        for i in range(j + 1, n):
            q, _ = ring.divmod(H[i][j], d)
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[j])]
    return H


def left_kernel(ring, M):
    """A-basis of ``{c : c M = 0}`` via echelon form of ``[M | I]``."""
    m = len(M)
    ncols = len(M[0]) if M else 0
    rows = [list(M[i]) + [ring.one if k == i else ring.zero for k in range(m)] for i in range(m)]
    r = 0
    for j in range(ncols):
        if r >= m:
            break
        nz = [i for i in range(r, m) if rows[i][j]]
        if not nz:
            continue
        if nz[0] != r:
            rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
            nz = [i for i in range(r, m) if rows[i][j]]
        for s in nz[1:]:
            _combine(ring, rows, r, s, j)
        r += 1
    return [row[ncols:] for row in rows[r:]]


def solve_triangular_row(ring, H, v):
    """Solve ``x H = v`` for lower-triangular ``H``; None if no solution over A."""
    n = len(H)
    v = list(v)
    x = [ring.zero] * n
    for j in range(n - 1, -1, -1):
        q, r = ring.divmod(v[j], H[j][j])
        if r:
            return None
        x[j] = q
        if q:
            for k in range(j + 1):
                v[k] = v[k] - q * H[j][k]
    return x


def matrix_to_json(ring, M):
    return {
        "ring": ring.describe(),
        "entries": [[_fmt(ring, x) for x in row] for row in M],
    }


def _fmt(ring, x):
    if isinstance(x, Frac):
        return str(x)
    return ring.format(x)


def matrix_from_json(obj, ring=None):
    """Parse ``{"ring": ..., "entries": [[...]]}``; returns ``(ring, rows)``."""
    from .poly import parse_element
    from .ring import ring_from_string

    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError("matrix JSON needs an 'entries' field")
    if ring is None:
        ring = ring_from_string(obj.get("ring", "Z"))
    rows = obj["entries"]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square and nonempty")
    return ring, [[parse_element(str(x), ring) for x in row] for row in rows]
