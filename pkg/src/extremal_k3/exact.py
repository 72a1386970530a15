"""Exact linear algebra over the integers and rationals.

Everything here works on plain lists of Python ints / Fractions, so all
results are exact.  This is the substrate for Gram-matrix manipulation:
Smith normal form, dual bases, overlattice construction and counting
vectors of norm -2 in a negative definite lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm


class DegenerateLatticeError(ValueError):
    pass


class NotNegativeDefiniteError(ValueError):
    pass


class NotIsotropicError(ValueError):
    """The glue vectors do not generate an even integral overlattice."""


# ---------------------------------------------------------------------------
# small matrix helpers


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                row = out[i]
                for j in range(m):
                    row[j] += x * bt[j]
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def frac_inverse(g):
    """Exact inverse of a square integer/rational matrix (Gauss-Jordan)."""
    n = len(g)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(g)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise DegenerateLatticeError("degenerate lattice")
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def det_int(g):
    """Determinant of a square integer matrix (fraction-free would do; this
    uses rational elimination, exact either way)."""
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithDecomposition:
    """u @ g @ v == diag(d), with u, v unimodular and d_i | d_{i+1}."""

    d: list
    u: list
    v: list


def smith_normal_form(g) -> SmithDecomposition:
    n = len(g)
    m = len(g[0]) if n else 0
    a = [[int(x) for x in row] for row in g]
    u = identity(n)
    v = identity(m)

    def row_op(i, j, f):  # row_i -= f * row_j
        a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        u[i] = [x - f * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, f):  # col_i -= f * col_j
        for row in a:
            row[i] -= f * row[j]
        for row in v:
            row[i] -= f * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(n, m)):
        while True:
            # move a minimal nonzero entry of the submatrix to (t, t)
            piv = None
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best, piv = x, (i, j)
            if piv is None:
                break
            if piv != (t, t):
                swap_rows(t, piv[0])
                swap_cols(t, piv[1])
            # clear row and column t
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    f = a[i][t] // a[t][t]
                    row_op(i, t, f)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, m):
                if a[t][j]:
                    f = a[t][j] // a[t][t]
                    col_op(j, t, f)
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                # pivot must divide the rest of the submatrix
                bad = None
                for i in range(t + 1, n):
                    for j in range(t + 1, m):
                        if a[i][j] % a[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                row_op(t, bad, -1)  # fold offending row in and loop again

    for t in range(min(n, m)):
        if a[t][t] < 0:
            for row in a:
                row[t] = -row[t]
            for row in v:
                row[t] = -row[t]
    d = [a[t][t] for t in range(min(n, m))]
    return SmithDecomposition(d=d, u=u, v=v)


def unimodular_inverse(u):
    """Exact integer inverse of a unimodular matrix."""
    inv = frac_inverse(u)
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return out


# ---------------------------------------------------------------------------
# integer row-space basis (Hermite-style)


def row_basis(rows, ncols):
    """Basis (as upper-echelon rows) of the integer row space of `rows`."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(ncols):
        if not work:
            break
        while True:
            cand = [r for r in work if r[col] != 0]
            if len(cand) <= 1:
                break
            cand.sort(key=lambda r: abs(r[col]))
            p = cand[0]
            for r in cand[1:]:
                f = r[col] // p[col]
                for j in range(ncols):
                    r[j] -= f * p[j]
            work = [r for r in work if any(r)]
        cand = [r for r in work if r[col] != 0]
        if not cand:
            continue
        p = cand[0]
        work.remove(p)
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
    return basis


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class IntegralLattice:
    """Even lattice given by a symmetric integer Gram matrix."""

    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for i in range(n):
            if len(g[i]) != n:
                raise ValueError("gram matrix must be square")
            if g[i][i] % 2:
                raise ValueError("lattice is not even")
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix must be symmetric")

    @property
    def rank(self):
        return len(self.gram)

    def det(self):
        return det_int([list(r) for r in self.gram])

    def pairing(self, v, w):
        """Exact pairing of two rational coordinate vectors."""
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))


def dual_basis(lat: IntegralLattice):
    """Rows of gram^-1: coordinates of the dual basis in the lattice basis."""
    return frac_inverse([list(r) for r in lat.gram])


def _cholesky_positive(g):
    """Rational Cholesky data for a positive definite integer matrix.

    Returns (diag, upper) with g(x) = sum_i diag[i] * (x_i + sum_{j>i}
    upper[i][j] x_j)^2.  Raises if g is not positive definite.
    """
    n = len(g)
    c = [[Fraction(g[i][j]) for j in range(n)] for i in range(n)]
    diag = [None] * n
    for i in range(n):
        if c[i][i] <= 0:
            raise NotNegativeDefiniteError("lattice not negative definite")
        diag[i] = c[i][i]
        for j in range(i + 1, n):
            c[i][j] /= diag[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                c[j][k] -= diag[i] * c[i][j] * c[i][k]
    upper = [[c[i][j] for j in range(n)] for i in range(n)]
    return diag, upper


def count_vectors_up_to(gram_neg, bound, limit=None):
    """Number of nonzero integer vectors x with -x^T G x <= bound.

    G must be negative definite; enumeration walks the projected ellipsoids
    coordinate by coordinate.  All arithmetic is scaled to integers: the
    rational Cholesky terms diag[i] * (x_i + shift_i)^2 have denominators
    dividing a fixed integer, so the remaining budget stays integral.

    With `limit` set, returns early with some count > limit once that many
    vectors have been found.
    """
    g = [[-x for x in row] for row in gram_neg]
    n = len(g)
    diag, upper = _cholesky_positive(g)

    # per level: diag[i] = dn[i]/dd[i]; row denominators u_den[i] clear the
    # off-diagonal Cholesky entries; every level-i term then has denominator
    # dividing dd[i] * u_den[i]^2, hence dividing their lcm d_all
    dn = [x.numerator for x in diag]
    dd = [x.denominator for x in diag]
    u_den = [1] * n
    for i in range(n):
        for j in range(i + 1, n):
            u_den[i] = lcm(u_den[i], upper[i][j].denominator)
    u_num = [[int(upper[i][j] * u_den[i]) for j in range(n)]
             for i in range(n)]
    d_all = 1
    for i in range(n):
        d_all = lcm(d_all, dd[i] * u_den[i] * u_den[i])
    # scale[i] * (x_i * u_den[i] + shift_num[i])^2 is the level-i cost on
    # the d_all-scaled budget
    scale = [dn[i] * (d_all // (dd[i] * u_den[i] * u_den[i]))
             for i in range(n)]

    count = 0
    # shift_num[i] = u_den[i] * sum_{j>i} upper[i][j] x_j for fixed x_j
    shift_num = [0] * n

    def recurse(i, remaining):
        nonlocal count
        if i < 0:
            count += 1
            # the internal count includes the origin, the returned one not
            return count if limit is not None and count - 1 > limit else 0
        c = shift_num[i]
        u = u_den[i]
        s = isqrt(remaining // scale[i])
        lo = -((s + c) // u)
        hi = (s - c) // u
        for xi in range(lo, hi + 1):
            t = xi * u + c
            used = scale[i] * t * t
            if xi:
                for k in range(i):
                    shift_num[k] += u_num[k][i] * xi
            stop = recurse(i - 1, remaining - used)
            if xi:
                for k in range(i):
                    shift_num[k] -= u_num[k][i] * xi
            if stop:
                return stop
        return 0

    recurse(n - 1, int(bound) * d_all)
    return count - 1  # remove the origin


def count_roots(lat: IntegralLattice, limit=None):
    """Number of vectors of norm -2 in a negative definite even lattice."""
    return count_vectors_up_to([list(r) for r in lat.gram], 2, limit=limit)


def overlattice_gram(lat: IntegralLattice, generators):
    """Gram matrix of the lattice generated by `lat` and rational vectors.

    Each generator is a vector of Fractions in the basis of `lat`.  The
    result must be an even integral lattice; otherwise the glue subgroup
    was not isotropic and NotIsotropicError is raised.
    """
    n = lat.rank
    if not generators:
        return lat
    den = 1
    for v in generators:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    rows = [[den if i == j else 0 for j in range(n)] for i in range(n)]
    for v in generators:
        rows.append([int(Fraction(x) * den) for x in v])
    basis = row_basis(rows, n)
    if len(basis) != n:
        raise DegenerateLatticeError("degenerate lattice")
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            val = Fraction(
                sum(basis[i][a] * lat.gram[a][b] * basis[j][b]
                    for a in range(n) for b in range(n)),
                den * den)
            if val.denominator != 1:
                raise NotIsotropicError("subgroup not isotropic")
            gram[i][j] = gram[j][i] = int(val)
    for i in range(n):
        if gram[i][i] % 2:
            raise NotIsotropicError("subgroup not isotropic")
    return IntegralLattice(tuple(tuple(r) for r in gram))
