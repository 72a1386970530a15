"""Finite quadratic forms (D, q) attached to even lattices.

A form is presented by independent cyclic generators: their orders, the
Q/2Z-valued q on each generator and the Q/Z-valued pairing b on generator
pairs.  Values of q and b on arbitrary elements follow from bilinearity.
q values are stored reduced into [0, 2), b values into [0, 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import (IntegralLattice, smith_normal_form,
                    unimodular_inverse, row_basis, frac_inverse)


class NotPGroupError(ValueError):
    pass


class NotIsotropicSubgroupError(ValueError):
    pass


def _mod2(x):
    return Fraction(x) % 2


def _mod1(x):
    return Fraction(x) % 1


def prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class DiscriminantForm:
    orders: tuple            # cyclic generator orders, each >= 2
    q: tuple                 # Fraction mod 2 per generator
    b: tuple                 # symmetric tuple-of-tuples, Fraction mod 1
    carriers: tuple = None   # optional lift of each generator to L dual

    def __post_init__(self):
        k = len(self.orders)
        object.__setattr__(self, "orders", tuple(int(o) for o in self.orders))
        object.__setattr__(self, "q", tuple(_mod2(x) for x in self.q))
        object.__setattr__(
            self, "b",
            tuple(tuple(_mod1(x) for x in row) for row in self.b))
        assert len(self.q) == k and len(self.b) == k
        for row in self.b:
            assert len(row) == k

    @property
    def order(self):
        n = 1
        for o in self.orders:
            n *= o
        return n

    @property
    def is_trivial(self):
        return not self.orders

    def elements(self):
        return itertools.product(*[range(o) for o in self.orders])

    def zero(self):
        return (0,) * len(self.orders)

    def add(self, x, y):
        return tuple((a + c) % o for a, c, o in zip(x, y, self.orders))

    def scale(self, k, x):
        return tuple((k * a) % o for a, o in zip(x, self.orders))

    def element_order(self, x):
        n = 1
        for a, o in zip(x, self.orders):
            if a:
                n = n * (o // gcd(o, a)) // gcd(n, o // gcd(o, a))
        return n

    def q_of(self, x):
        total = Fraction(0)
        k = len(self.orders)
        for i in range(k):
            if x[i]:
                total += x[i] * x[i] * self.q[i]
                for j in range(i + 1, k):
                    total += 2 * x[i] * x[j] * self.b[i][j]
        return _mod2(total)

    def b_of(self, x, y):
        total = Fraction(0)
        k = len(self.orders)
        for i in range(k):
            if x[i]:
                for j in range(k):
                    if y[j]:
                        total += x[i] * y[j] * self.b[i][j]
        return _mod1(total)

    def carrier_of(self, x):
        """Lift of the element x to L-basis rational coordinates."""
        assert self.carriers is not None
        n = len(self.carriers[0])
        out = [Fraction(0)] * n
        for c, vec in zip(x, self.carriers):
            if c:
                for j in range(n):
                    out[j] += c * vec[j]
        return out

    def primes(self):
        ps = set()
        for o in self.orders:
            ps.update(prime_factors(o))
        return sorted(ps)


TRIVIAL_FORM = DiscriminantForm(orders=(), q=(), b=())


def discriminant_form(lat: IntegralLattice) -> DiscriminantForm:
    """(L_dual / L, q) of a nondegenerate even lattice, generators from the
    Smith normal form of the Gram matrix."""
    g = [list(r) for r in lat.gram]
    n = lat.rank
    snf = smith_normal_form(g)
    if any(d == 0 for d in snf.d):
        from .exact import DegenerateLatticeError
        raise DegenerateLatticeError("degenerate lattice")
    uinv = unimodular_inverse(snf.u)
    ginv = frac_inverse(g)
    orders, qs, carriers = [], [], []
    for i in range(n):
        if snf.d[i] > 1:
            w = [uinv[r][i] for r in range(n)]  # dual-basis coordinates
            carrier = [sum(Fraction(w[k]) * ginv[k][j] for k in range(n))
                       for j in range(n)]
            orders.append(snf.d[i])
            carriers.append(tuple(carrier))
    for c in carriers:
        qs.append(_mod2(lat.pairing(c, c)))
    b = [[_mod1(lat.pairing(ci, cj)) for cj in carriers] for ci in carriers]
    return DiscriminantForm(orders=tuple(orders), q=tuple(qs),
                            b=tuple(tuple(r) for r in b),
                            carriers=tuple(carriers))


def direct_sum(*forms):
    orders, qs, carriers = [], [], []
    have_carriers = all(f.carriers is not None for f in forms)
    for f in forms:
        orders.extend(f.orders)
        qs.extend(f.q)
    k = len(orders)
    b = [[Fraction(0)] * k for _ in range(k)]
    off = 0
    for f in forms:
        m = len(f.orders)
        for i in range(m):
            for j in range(m):
                b[off + i][off + j] = f.b[i][j]
        off += m
    return DiscriminantForm(orders=tuple(orders), q=tuple(qs),
                            b=tuple(tuple(r) for r in b),
                            carriers=None)


def p_part(df: DiscriminantForm, p: int) -> DiscriminantForm:
    """Restriction to the p-primary component.  Generator i of order
    o = p^a * m contributes the generator m * g_i of order p^a."""
    orders, qs, carriers, cof = [], [], [], []
    idx = []
    for i, o in enumerate(df.orders):
        pa = 1
        while o % p == 0:
            pa *= p
            o //= p
        if pa > 1:
            m = df.orders[i] // pa
            idx.append((i, m))
            orders.append(pa)
            qs.append(_mod2(m * m * df.q[i]))
            if df.carriers is not None:
                carriers.append(tuple(m * x for x in df.carriers[i]))
    k = len(idx)
    b = [[_mod1(idx[i][1] * idx[j][1] * df.b[idx[i][0]][idx[j][0]])
          for j in range(k)] for i in range(k)]
    return DiscriminantForm(orders=tuple(orders), q=tuple(qs),
                            b=tuple(tuple(r) for r in b),
                            carriers=tuple(carriers) if df.carriers is not None else None)


# ---------------------------------------------------------------------------
# isotropic subgroups


@dataclass(frozen=True)
class IsotropicSubgroup:
    generators: tuple     # at most 2 coordinate tuples
    elements: frozenset

    @property
    def order(self):
        return len(self.elements)


def _span(df, gens):
    elems = {df.zero()}
    for g in gens:
        new = set(elems)
        mult = g
        while mult != df.zero():
            new.update(df.add(e, mult) for e in elems)
            mult = df.add(mult, g)
        elems = new
    return frozenset(elems)


def _scaled_tables(df):
    """Integer tables (m, Q, B) with Q[i] = m*q_i mod 2m and
    B[i][j] = m*b_ij mod m, for fast element evaluation."""
    m = 1
    for x in df.q:
        m = m * x.denominator // gcd(m, x.denominator)
    for row in df.b:
        for x in row:
            m = m * x.denominator // gcd(m, x.denominator)
    q = [int(x * m) % (2 * m) for x in df.q]
    b = [[int(x * m) % m for x in row] for row in df.b]
    return m, q, b


def enumerate_isotropic(df: DiscriminantForm):
    """All (A, complement) with A generated by <= 2 isotropic elements of a
    homogeneous p-form; A listed once each, paired with the element list of
    its orthogonal complement."""
    ps = df.primes()
    if len(ps) > 1:
        raise NotPGroupError("not a p-group")
    zero = df.zero()
    k = len(df.orders)
    m, qi, bi = _scaled_tables(df)

    def q_int(x):
        t = 0
        for i in range(k):
            if x[i]:
                t += x[i] * x[i] * qi[i]
                for j in range(i + 1, k):
                    t += 2 * x[i] * x[j] * bi[i][j]
        return t % (2 * m)

    elements = list(df.elements())
    iso_nz = [x for x in elements if x != zero and q_int(x) == 0]
    # row x.B, for pairings by a short dot product
    brow = {x: [sum(x[i] * bi[i][j] for i in range(k)) for j in range(k)]
            for x in iso_nz}

    def pairs_int(bx, y):
        return sum(bx[j] * y[j] for j in range(k) if y[j]) % m

    # q(x) in 2Z makes every multiple isotropic; two isotropic generators
    # span an isotropic subgroup exactly when they pair integrally
    subs = {frozenset([zero]): IsotropicSubgroup((), frozenset([zero]))}
    singles = {}
    for x in iso_nz:
        el = _span(df, [x])
        singles[x] = el
        if el not in subs:
            subs[el] = IsotropicSubgroup((x,), el)
    for i, x in enumerate(iso_nz):
        bx = brow[x]
        for y in iso_nz[i + 1:]:
            if y in singles[x]:  # y already in <x>
                continue
            if pairs_int(bx, y):
                continue
            el = _span(df, [x, y])
            if el not in subs:
                subs[el] = IsotropicSubgroup((x, y), el)
    out = []
    for el, sub in subs.items():
        rows = [brow[g] if g in brow else
                [sum(g[i] * bi[i][j] for i in range(k)) for j in range(k)]
                for g in sub.generators]
        comp = [z for z in elements
                if all(pairs_int(r, z) == 0 for r in rows)]
        out.append((sub, comp))
    out.sort(key=lambda t: (t[0].order, sorted(t[0].elements)))
    return out


def subgroup_invariants(df: DiscriminantForm, sub: IsotropicSubgroup):
    """Invariant factors of the subgroup (a p-group of length <= 2)."""
    m = sub.order
    if m == 1:
        return []
    e = max(df.element_order(x) for x in sub.elements)
    out = [e]
    if m // e > 1:
        out.insert(0, m // e)
    return out


# ---------------------------------------------------------------------------
# quotient A_perp / A


def _generating_set(df, elements):
    """Small generating set of a subgroup given by its element list."""
    gens = []
    span = {df.zero()}
    for x in sorted(elements, key=df.element_order, reverse=True):
        if x not in span:
            gens.append(x)
            span = set(_span_from(df, span, x))
    return gens


def _span_from(df, base, x):
    out = set(base)
    frontier = set(base)
    k = x
    while k != df.zero():
        out.update(df.add(e, k) for e in base)
        k = df.add(k, x)
    return out


def quotient_form(df: DiscriminantForm, sub: IsotropicSubgroup,
                  complement=None) -> DiscriminantForm:
    """The induced form on (A_perp / A); well defined since A is isotropic."""
    if any(df.q_of(x) != 0 for x in sub.elements):
        raise NotIsotropicSubgroupError("subgroup is not isotropic")
    if complement is None:
        complement = [z for z in df.elements()
                      if all(df.b_of(z, g) == 0 for g in sub.generators)]
    k = len(df.orders)
    if k == 0:
        return TRIVIAL_FORM
    perp_gens = _generating_set(df, complement)
    # H = lattice spanned by lifts of A_perp generators and orders*e_i,
    # K = same for A; present H/K by the Smith form of K in an H-basis
    n_rows = []
    for i, o in enumerate(df.orders):
        row = [0] * k
        row[i] = o
        n_rows.append(row)
    h_basis = row_basis([list(g) for g in perp_gens] + n_rows, k)
    k_basis = row_basis([list(g) for g in sub.generators] + n_rows, k)
    # express K rows in H basis: solve X * H = K  (rows)
    hinv = frac_inverse(h_basis)
    c = []
    for row in k_basis:
        coeffs = [sum(Fraction(row[t]) * hinv[t][j] for t in range(k))
                  for j in range(k)]
        assert all(x.denominator == 1 for x in coeffs)
        c.append([int(x) for x in coeffs])
    snf = smith_normal_form(c)
    vinv = unimodular_inverse(snf.v)
    # quotient ~ Z^k / diag(d) in coordinates z = x V^{-1}? derive:
    # rows of K-basis = C * H; U C V = D  =>  (U C) rows generate same K in
    # H-coords; group = Z^k (H-coords, rows) / row-span(C)
    # row-span(C) = row-span(D V^{-1}) => coords w = z * V give Z^k/DZ^k
    # generator of factor i: w = e_i  => z = e_i * V^{-1} (row i of V^{-1})
    gens = []
    orders = []
    for i in range(k):
        d = snf.d[i] if i < len(snf.d) else 0
        assert d != 0  # finite quotient
        if d == 1:
            continue
        z = vinv[i]  # H-coordinates (row)
        elem = [0] * k
        for t in range(k):
            if z[t]:
                for j in range(k):
                    elem[j] += z[t] * h_basis[t][j]
        elem = tuple(e % o for e, o in zip(elem, df.orders))
        gens.append(elem)
        orders.append(d)
    qs = [df.q_of(g) for g in gens]
    b = [[df.b_of(gi, gj) for gj in gens] for gi in gens]
    return DiscriminantForm(orders=tuple(orders), q=tuple(qs),
                            b=tuple(tuple(r) for r in b))


# ---------------------------------------------------------------------------
# isomorphism of finite quadratic forms


def invariant_factors(orders):
    """Invariant factors (ascending, with divisibility) of a product of
    cyclic groups of the given orders."""
    by_p = {}
    for o in orders:
        for p in prime_factors(o):
            a = 0
            while o % p == 0:
                a += 1
                o //= p
            by_p.setdefault(p, []).append(a)
    length = max((len(v) for v in by_p.values()), default=0)
    factors = []
    for i in range(length):
        f = 1
        for p, exps in by_p.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                f *= p ** exps_sorted[i]
        factors.append(f)
    factors = [f for f in factors if f > 1]
    return sorted(factors)


def form_length(df: DiscriminantForm):
    inv = invariant_factors(df.orders)
    return len(inv)


def forms_isomorphic(df1: DiscriminantForm, df2: DiscriminantForm,
                     negate_second: bool = False) -> bool:
    """True when some group isomorphism gamma has gamma* q2 == q1 (or -q1
    with negate_second).  Requires every p-part to have length <= 2."""
    if invariant_factors(df1.orders) != invariant_factors(df2.orders):
        return False
    sign = -1 if negate_second else 1
    for p in df1.primes():
        pp1 = p_part(df1, p)
        pp2 = p_part(df2, p)
        if form_length(pp1) > 2 or form_length(pp2) > 2:
            raise ValueError("length exceeds 2")
        if not _p_forms_isomorphic(pp1, pp2, sign):
            return False
    return True


def _p_forms_isomorphic(pp1, pp2, sign):
    gens1 = sorted(range(len(pp1.orders)), key=lambda i: -pp1.orders[i])
    # drop redundant presentation is not needed: orders are independent
    targets_q = [_mod2(sign * pp1.q[i]) for i in gens1]
    orders1 = [pp1.orders[i] for i in gens1]
    if not gens1:
        return pp2.is_trivial or pp2.order == 1
    elems2 = list(pp2.elements())
    cand = []
    for o, tq in zip(orders1, targets_q):
        cand.append([x for x in elems2
                     if pp2.element_order(x) == o and pp2.q_of(x) == tq])
    if len(gens1) == 1:
        return bool(cand[0])
    tb = _mod1(sign * pp1.b[gens1[0]][gens1[1]])
    total = pp2.order
    for x in cand[0]:
        for y in cand[1]:
            if pp2.b_of(x, y) != tb:
                continue
            if len(_span(pp2, [x, y])) == total:
                return True
    return False
