"""Per-field context for the family g_s(y) = y^n + (1-y)^n - s with n = (q+1)/2.

Everything here depends only on the field, not on s: the degree E of g_s,
the normalizing constant tau, the two parameter sets used by the closed-form
factorizations, and the auxiliary polynomial f whose square recovers the
family via f^2 = 2 y^n + 2 (1-y)^n + 2.
"""

from __future__ import annotations

from .errors import DomainError, InvariantError
from .ffield import FieldCtx, FieldElement, elements, quad_char
from .polyring import Poly, elem_json


def _binomial_row_mod_p(n: int, p: int) -> list:
    """C(n, j) mod p for j = 0..n, tracking the power of p separately so the
    running product never divides by a multiple of p."""
    row = [1]
    unit = 1
    carried = 0
    for j in range(1, n + 1):
        a, b = n - j + 1, j
        while a % p == 0:
            a //= p
            carried += 1
        while b % p == 0:
            b //= p
            carried -= 1
        unit = unit * (a % p) % p
        unit = unit * pow(b % p, p - 2, p) % p
        row.append(unit if carried == 0 else 0)
    return row


class DicksonCtx:
    """Field plus the s-independent data of the family."""

    __slots__ = ("field", "n", "E", "chi_minus_one", "tau", "C", "W", "f", "_g_base")

    def __init__(self, field: FieldCtx):
        q = field.q
        self.field = field
        self.n = (q + 1) // 2
        self.chi_minus_one = quad_char(field.elem(-1))
        self.E = (q - self.chi_minus_one) // 2
        self.tau = field.elem(1 if q % 4 == 1 else 2)

        half = field.one / 2
        cs, ws = [], []
        for a in elements(field):
            if quad_char(a) == 1 and quad_char(1 - a) == 1:
                cs.append(a)
            if quad_char((1 + a) * half) == -1 and quad_char((1 - a) * half) == -1:
                ws.append(a)
        self.C = tuple(sorted(cs, key=lambda x: x.key()))
        self.W = tuple(sorted(ws, key=lambda x: x.key()))
        if len(self.C) != self.E // 2 - 1:
            raise InvariantError("square-square parameter count is off")
        if len(self.W) != (q - self.chi_minus_one) // 4:
            raise InvariantError("nonsquare-nonsquare parameter count is off")

        row = _binomial_row_mod_p(self.n, field.p)
        # even part of (1+u)^n + (1-u)^n evaluated at u^2 = y, i.e. the
        # polynomial with coefficient 2*C(n, 2j) at y^j
        self.f = Poly(field, [2 * row[2 * j] for j in range(self.n // 2 + 1)])
        if self.f.degree != self.n // 2 or self.f.lead != self.tau:
            raise InvariantError("auxiliary polynomial has wrong shape")

        # y^n + (1-y)^n expanded once; g_s is this minus s
        base = [field.elem((-1) ** j * row[j]) for j in range(self.n + 1)]
        base[self.n] = base[self.n] + 1
        g = Poly(field, base)
        if g.degree != self.E or g.lead != self.tau * self.tau / 2:
            raise InvariantError("family polynomial has wrong degree or lead")
        self._g_base = g

    def to_json(self) -> dict:
        return {
            "q": self.field.q,
            "n": self.n,
            "E": self.E,
            "tau": elem_json(self.tau),
            "C": [elem_json(a) for a in self.C],
            "W_size": len(self.W),
        }

    def __repr__(self):
        return f"DicksonCtx(q={self.field.q}, E={self.E})"


def build_ctx(field: FieldCtx) -> DicksonCtx:
    return DicksonCtx(field)


def build_f(ctx: DicksonCtx) -> Poly:
    return ctx.f


def build_g(ctx: DicksonCtx, s) -> Poly:
    """g_s(y) = y^n + (1-y)^n - s as a degree-E polynomial."""
    s = ctx.field.elem(s)
    return ctx._g_base - s
