"""Positive definite even binary quadratic forms [a, b, c] meaning
a x^2 + 2 b x y + c y^2 with a, c even, and their reduction theory.

Discriminant convention: disc = a c - b^2 > 0 (the Gram determinant).

SL2-reduced: -a < 2b <= a <= c, with b >= 0 when a == c.
GL2-reduced: 0 <= 2b <= a <= c.  A GL2 class splits into two SL2 classes
exactly when 0 < 2b < a < c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import IntegralLattice


@dataclass(frozen=True)
class BinaryEvenForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a % 2 or self.c % 2:
            raise ValueError("outer coefficients must be even")
        if self.a <= 0 or self.c <= 0 or self.disc <= 0:
            raise ValueError("form must be positive definite")

    @property
    def disc(self):
        return self.a * self.c - self.b * self.b

    def value(self, x, y):
        return self.a * x * x + 2 * self.b * x * y + self.c * y * y

    def gram(self):
        return ((self.a, self.b), (self.b, self.c))

    def lattice(self):
        """The rank-2 negative definite even lattice with this intersection
        form negated."""
        return IntegralLattice(((-self.a, -self.b), (-self.b, -self.c)))

    def transformed(self, m):
        """Action of the matrix m = ((p, q), (r, s)) on the form."""
        (p, q), (r, s) = m
        a2 = self.value(p, r)
        c2 = self.value(q, s)
        b2 = self.a * p * q + self.b * (p * s + q * r) + self.c * r * s
        return BinaryEvenForm(a2, b2, c2)


def reduce_sl2(f: BinaryEvenForm) -> BinaryEvenForm:
    """Gauss reduction to the unique SL2-reduced representative."""
    a, b, c = f.a, f.b, f.c
    while True:
        # translate b into (-a/2, a/2]
        if not (-a < 2 * b <= a):
            # b - t a in (-a/2, a/2]: t = round(b / a) with ties going down
            t = (2 * b + a - 1) // (2 * a) if a else 0
            c = c - 2 * t * b + t * t * a
            b = b - t * a
            continue
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if a == c and b < 0:
        b = -b
    if 2 * b == -a:  # boundary: normalize to b = a/2
        b = -b
    return BinaryEvenForm(a, b, c)


def reduce_gl2(f: BinaryEvenForm) -> BinaryEvenForm:
    """Unique representative with 0 <= 2b <= a <= c."""
    g = reduce_sl2(f)
    if g.b < 0:
        g = BinaryEvenForm(g.a, -g.b, g.c)
    return g


def class_fiber_count(f: BinaryEvenForm) -> int:
    """Number of SL2 classes inside the GL2 class: 2 when the reduced form
    has 0 < 2b < a < c, else 1."""
    g = reduce_gl2(f)
    if 0 < 2 * g.b < g.a < g.c:
        return 2
    return 1


def sl2_representatives(f: BinaryEvenForm):
    """The SL2-reduced forms in the GL2 class of f."""
    g = reduce_gl2(f)
    if class_fiber_count(g) == 2:
        return [g, BinaryEvenForm(g.a, -g.b, g.c)]
    return [g]


def enumerate_even_forms(d: int):
    """All GL2-reduced positive definite even forms of discriminant d."""
    out = []
    b = 0
    while 3 * b * b <= d:
        a = max(2, 2 * b)
        while a * a <= d + b * b:
            num = d + b * b
            if num % a == 0:
                c = num // a
                if c % 2 == 0 and c >= a:
                    out.append(BinaryEvenForm(a, b, c))
            a += 2
        b += 1
    out.sort(key=lambda f: (f.a, f.b, f.c))
    return out
