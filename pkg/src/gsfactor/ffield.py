"""Finite fields of odd order with deterministic canonical choices.

Three context classes share one interface:

* ``PrimeField`` -- F_p, elements represented by integers in ``[0, p)``.
* ``ExtensionField`` -- F_{p^k} with ``k > 1``, elements represented by
  length-``k`` tuples of base-p digits, low degree first, reduced modulo a
  deterministic modulus: the lexicographically smallest monic irreducible of
  degree ``k`` (coefficient vectors compared low-to-high).
* ``QuadraticExtension`` -- F_q[t]/(t^2 - nu) over a base field, elements
  represented by pairs of base representatives.  When -1 is a nonsquare the
  modulus is t^2 + 1 and ``i`` is t itself; otherwise nu is the canonically
  smallest nonsquare and ``i`` is the embedded square root of -1.

Everything that involves a choice (square roots, nonsquare witnesses, the
extension modulus) is resolved by the canonical total order on elements:
integer order for prime fields, lexicographic on coefficient vectors
otherwise.  Identical inputs therefore always produce identical outputs.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction

from .errors import DomainError

ENUM_LIMIT = 10**7            # largest field we will fully enumerate
PRIME_Q_LIMIT = 2**63         # guard for k = 1
EXT_Q_LIMIT = 10**6           # guard for k > 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense int-list polynomial helpers mod p, used only for modulus selection

def _pl_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pl_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pl_trim(out)


def _pl_mod(f: list[int], m: list[int], p: int) -> list[int]:
    f = f[:]
    inv_lead = pow(m[-1], p - 2, p)
    while len(f) >= len(m):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(m)
        if c:
            for j, b in enumerate(m):
                f[shift + j] = (f[shift + j] - c * b) % p
        f.pop()
        _pl_trim(f)
        if not f:
            break
    return f


def _pl_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    while g:
        f, g = g, _pl_mod(f, g, p)
    return f


def _pl_powmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    base = _pl_mod(f, m, p)
    while e:
        if e & 1:
            out = _pl_mod(_pl_mul(out, base, p), m, p)
        base = _pl_mod(_pl_mul(base, base, p), m, p)
        e >>= 1
    return out


def _pl_irreducible(m: list[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    k = len(m) - 1
    x = [0, 1]
    h = x[:]
    powers = {}
    for j in range(1, k + 1):
        h = _pl_powmod(h, p, m, p)
        powers[j] = h
    if h != _pl_mod(x, m, p):
        return False
    for ell in _factor_int(k):
        diff = powers[k // ell][:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pl_gcd(m, _pl_trim(diff), p)
        if len(g) != 1:
            return False
    return True


def _smallest_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    for tail in itertools.product(range(p), repeat=k):
        if tail[0] == 0:
            continue  # divisible by t
        cand = list(tail) + [1]
        if _pl_irreducible(cand, p):
            return tuple(cand)
    raise DomainError(f"no irreducible of degree {k} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------


class FieldCtx:
    """Shared behaviour for the three field context classes.

    Subclasses provide representation-level arithmetic (``radd`` .. ``rpow``)
    plus the canonical order hooks; everything built on top of those (square
    roots, multiplicative order, the lazy quadratic extension) lives here.
    """

    p: int
    k: int
    q: int

    def __init__(self) -> None:
        self._ext: QuadraticExtension | None = None
        self._ext_lock = threading.Lock()

    # -- construction ------------------------------------------------------

    def elem(self, x) -> "FieldElement":
        return FieldElement(self, self.rep_of(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_rep)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_rep)

    def rep_of(self, x):
        raise NotImplementedError

    def _coerce_fraction(self, x: Fraction):
        num = self.rep_of(x.numerator)
        den = self.rep_of(x.denominator)
        return self.rmul(num, self.rinv(den))

    # -- rep-level arithmetic hooks -----------------------------------------

    def radd(self, a, b):
        raise NotImplementedError

    def rsub(self, a, b):
        raise NotImplementedError

    def rmul(self, a, b):
        raise NotImplementedError

    def rneg(self, a):
        raise NotImplementedError

    def rinv(self, a):
        raise NotImplementedError

    def rpow(self, a, e: int):
        if e < 0:
            a = self.rinv(a)
            e = -e
        out = self.one_rep
        while e:
            if e & 1:
                out = self.rmul(out, a)
            a = self.rmul(a, a)
            e >>= 1
        return out

    def rep_key(self, a):
        """Sort key realizing the canonical total order."""
        raise NotImplementedError

    def rep_at(self, i: int):
        """Representative at position ``i`` of the canonical order."""
        raise NotImplementedError

    def index_of(self, a) -> int:
        raise NotImplementedError

    # -- character, roots, orders -------------------------------------------

    def quad_char_rep(self, a) -> int:
        if a == self.zero_rep:
            return 0
        r = self.rpow(a, (self.q - 1) // 2)
        return 1 if r == self.one_rep else -1

    def nonsquare_rep(self):
        """Canonically first nonsquare; deterministic witness for sqrt."""
        i = 2
        while True:
            a = self.rep_at(i)
            if self.quad_char_rep(a) == -1:
                return a
            i += 1

    def sqrt_rep(self, a):
        """Tonelli-Shanks; returns the root with the smaller canonical key,
        or None when ``a`` is a nonsquare."""
        if a == self.zero_rep:
            return a
        if self.quad_char_rep(a) == -1:
            return None
        n = self.q - 1
        s = (n & -n).bit_length() - 1
        m = n >> s
        x = self.rpow(a, (m + 1) // 2)
        t = self.rpow(a, m)
        if t != self.one_rep:
            c = self.rpow(self.nonsquare_rep(), m)
            ss = s
            while t != self.one_rep:
                i = 0
                t2 = t
                while t2 != self.one_rep:
                    t2 = self.rmul(t2, t2)
                    i += 1
                b = self.rpow(c, 1 << (ss - i - 1))
                x = self.rmul(x, b)
                c = self.rmul(b, b)
                t = self.rmul(t, c)
                ss = i
        neg = self.rneg(x)
        return x if self.rep_key(x) <= self.rep_key(neg) else neg

    def mult_order_rep(self, a) -> int:
        if a == self.zero_rep:
            raise DomainError("multiplicative order of zero is undefined")
        n = self.q - 1
        t = n
        for ell in _factor_int(n):
            while t % ell == 0 and self.rpow(a, t // ell) == self.one_rep:
                t //= ell
        return t

    # -- quadratic extension -------------------------------------------------

    @property
    def ext(self) -> "QuadraticExtension":
        """The canonical quadratic extension, built once."""
        if self._ext is None:
            with self._ext_lock:
                if self._ext is None:
                    self._ext = QuadraticExtension(self)
        return self._ext

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GF({self.q})"


class PrimeField(FieldCtx):
    def __init__(self, p: int):
        super().__init__()
        self.p = p
        self.k = 1
        self.q = p
        self.modulus = None

    def rep_of(self, x):
        if isinstance(x, FieldElement):
            if x.ctx != self:
                raise DomainError("element belongs to a different field")
            return x.rep
        if isinstance(x, bool):
            raise DomainError(f"cannot coerce {x!r} into GF({self.q})")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self._coerce_fraction(x)
        raise DomainError(f"cannot coerce {x!r} into GF({self.q})")

    zero_rep = property(lambda self: 0)
    one_rep = property(lambda self: 1)

    def radd(self, a, b):
        return (a + b) % self.p

    def rsub(self, a, b):
        return (a - b) % self.p

    def rmul(self, a, b):
        return a * b % self.p

    def rneg(self, a):
        return -a % self.p

    def rinv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def rpow(self, a, e: int):
        if e < 0 and a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, e, self.p)

    def rep_key(self, a):
        return a

    def rep_at(self, i: int):
        return i

    def index_of(self, a) -> int:
        return a

    def str_rep(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class ExtensionField(FieldCtx):
    def __init__(self, p: int, k: int):
        super().__init__()
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus: tuple[int, ...] = _smallest_modulus(p, k)
        # reduction table: _red[j] = representative of t^(k+j)
        red = []
        row = [(-c) % p for c in self.modulus[:k]]
        red.append(tuple(row))
        for _ in range(k - 2):
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                row = [(row[i] - top * self.modulus[i]) % p for i in range(k)]
            red.append(tuple(row))
        self._red = red

    def rep_of(self, x):
        if isinstance(x, FieldElement):
            if x.ctx != self:
                raise DomainError("element belongs to a different field")
            return x.rep
        if isinstance(x, bool):
            raise DomainError(f"cannot coerce {x!r} into GF({self.q})")
        if isinstance(x, int):
            return (x % self.p,) + (0,) * (self.k - 1)
        if isinstance(x, Fraction):
            return self._coerce_fraction(x)
        if isinstance(x, (tuple, list)):
            if len(x) > self.k:
                raise DomainError("digit vector longer than the field degree")
            digits = [int(c) % self.p for c in x]
            digits += [0] * (self.k - len(digits))
            return tuple(digits)
        raise DomainError(f"cannot coerce {x!r} into GF({self.q})")

    @property
    def zero_rep(self):
        return (0,) * self.k

    @property
    def one_rep(self):
        return (1,) + (0,) * (self.k - 1)

    def radd(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def rsub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def rneg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def rmul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = prod[:k]
        for j in range(k - 2, -1, -1):
            c = prod[k + j]
            if c:
                row = self._red[j]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def rinv(self, a):
        if a == self.zero_rep:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in F_p[t] against the modulus
        p = self.p
        r0, r1 = list(self.modulus), _pl_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            inv_lead = pow(r1[-1], p - 2, p)
            quo = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            r = r0[:]
            while len(r) >= len(r1) and r:
                c = r[-1] * inv_lead % p
                shift = len(r) - len(r1)
                quo[shift] = c
                for j, b in enumerate(r1):
                    r[shift + j] = (r[shift + j] - c * b) % p
                r.pop()
                _pl_trim(r)
            new_s = [x % p for x in _pl_trim(_sub_poly(s0, _pl_mul(quo, s1, p), p))]
            r0, r1, s0, s1 = r1, r, s1, new_s
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        inv = [x * c_inv % p for x in s0]
        inv += [0] * (self.k - len(inv))
        return tuple(inv[: self.k])

    def rep_key(self, a):
        return a

    def rep_at(self, i: int):
        digits = []
        for _ in range(self.k):
            i, r = divmod(i, self.p)
            digits.append(r)
        return tuple(reversed(digits))

    def index_of(self, a) -> int:
        i = 0
        for d in a:
            i = i * self.p + d
        return i

    def str_rep(self, a) -> str:
        return ",".join(str(c) for c in a)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.k == self.k
        )

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.k))

    def __repr__(self) -> str:  # pragma: no cover
        return f"GF({self.p}^{self.k})"


def _sub_poly(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a - b) % p
    return _pl_trim(out)


class QuadraticExtension(FieldCtx):
    """F_q[t]/(t^2 - nu) with a distinguished square root of -1."""

    def __init__(self, base: FieldCtx):
        if isinstance(base, QuadraticExtension):
            raise DomainError("iterated quadratic extensions are not supported")
        super().__init__()
        self.base = base
        self.p = base.p
        self.k = 2 * base.k
        self.q = base.q * base.q
        minus_one = base.rneg(base.one_rep)
        if base.quad_char_rep(minus_one) == -1:
            self.nu = minus_one  # modulus t^2 + 1
            self._i_rep = (base.zero_rep, base.one_rep)
        else:
            self.nu = base.nonsquare_rep()
            self._i_rep = (base.sqrt_rep(minus_one), base.zero_rep)

    @property
    def i(self) -> "FieldElement":
        """An element whose square is -1."""
        return FieldElement(self, self._i_rep)

    def embed(self, a: "FieldElement") -> "FieldElement":
        if a.ctx != self.base:
            raise DomainError("embed expects an element of the base field")
        return FieldElement(self, (a.rep, self.base.zero_rep))

    def project(self, x: "FieldElement") -> "FieldElement":
        """Inverse of embed; defined only when the t-coordinate is zero."""
        if x.ctx != self:
            raise DomainError("project expects an element of the extension")
        if x.rep[1] != self.base.zero_rep:
            raise DomainError(f"{x} has a nonzero t-coordinate")
        return FieldElement(self.base, x.rep[0])

    def conj(self, x: "FieldElement") -> "FieldElement":
        if x.ctx != self:
            raise DomainError("conj expects an element of the extension")
        return FieldElement(self, (x.rep[0], self.base.rneg(x.rep[1])))

    def rep_of(self, x):
        if isinstance(x, FieldElement):
            if x.ctx == self:
                return x.rep
            if x.ctx == self.base:
                return (x.rep, self.base.zero_rep)
            raise DomainError("element belongs to a different field")
        if isinstance(x, bool):
            raise DomainError(f"cannot coerce {x!r} into GF({self.q})")
        if isinstance(x, int):
            return (self.base.rep_of(x), self.base.zero_rep)
        if isinstance(x, Fraction):
            return self._coerce_fraction(x)
        if isinstance(x, tuple) and len(x) == 2:
            return (self.base.rep_of(x[0]), self.base.rep_of(x[1]))
        raise DomainError(f"cannot coerce {x!r} into GF({self.q})")

    @property
    def zero_rep(self):
        return (self.base.zero_rep, self.base.zero_rep)

    @property
    def one_rep(self):
        return (self.base.one_rep, self.base.zero_rep)

    def radd(self, a, b):
        br = self.base
        return (br.radd(a[0], b[0]), br.radd(a[1], b[1]))

    def rsub(self, a, b):
        br = self.base
        return (br.rsub(a[0], b[0]), br.rsub(a[1], b[1]))

    def rneg(self, a):
        br = self.base
        return (br.rneg(a[0]), br.rneg(a[1]))

    def rmul(self, a, b):
        br = self.base
        a0, a1 = a
        b0, b1 = b
        re = br.radd(br.rmul(a0, b0), br.rmul(self.nu, br.rmul(a1, b1)))
        im = br.radd(br.rmul(a0, b1), br.rmul(a1, b0))
        return (re, im)

    def rnorm(self, a):
        """Norm to the base field: a0^2 - nu * a1^2."""
        br = self.base
        return br.rsub(br.rmul(a[0], a[0]), br.rmul(self.nu, br.rmul(a[1], a[1])))

    def rinv(self, a):
        if a == self.zero_rep:
            raise ZeroDivisionError("inverse of zero")
        br = self.base
        n_inv = br.rinv(self.rnorm(a))
        return (br.rmul(a[0], n_inv), br.rmul(br.rneg(a[1]), n_inv))

    def quad_char_rep(self, a) -> int:
        if a == self.zero_rep:
            return 0
        return self.base.quad_char_rep(self.rnorm(a))

    def nonsquare_rep(self):
        # elements of the base field are always squares here, so scan t,
        # then a + t for a in canonical base order
        br = self.base
        cand = (br.zero_rep, br.one_rep)
        i = 0
        while self.quad_char_rep(cand) != -1:
            cand = (br.rep_at(i), br.one_rep)
            i += 1
        return cand

    def rep_key(self, a):
        return (self.base.rep_key(a[0]), self.base.rep_key(a[1]))

    def rep_at(self, i: int):
        hi, lo = divmod(i, self.base.q)
        return (self.base.rep_at(hi), self.base.rep_at(lo))

    def index_of(self, a) -> int:
        return self.base.index_of(a[0]) * self.base.q + self.base.index_of(a[1])

    def str_rep(self, a) -> str:
        return f"{self.base.str_rep(a[0])}+{self.base.str_rep(a[1])}*t"

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.base == self.base

    def __hash__(self):
        return hash(("QuadraticExtension", self.base))

    def __repr__(self) -> str:  # pragma: no cover
        return f"GF({self.base.q})[t]"


class FieldElement:
    """An element of one of the field contexts; immutable value object."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: FieldCtx, rep):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is self.ctx or other.ctx == self.ctx:
                return other.rep
            raise DomainError("elements belong to different fields")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.rep_of(other)
        return None

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.radd(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(rep, self.rep))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.rep, self.ctx.rinv(rep)))

    def __rtruediv__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(rep, self.ctx.rinv(self.rep)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.rneg(self.rep))

    def __pow__(self, e: int):
        if not isinstance(e, int) or isinstance(e, bool):
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rpow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.rinv(self.rep))

    def __eq__(self, other):
        try:
            rep = self._coerce(other)
        except DomainError:
            return False
        if rep is None:
            return NotImplemented
        return self.rep == rep

    def __hash__(self):
        return hash((self.ctx, self.rep))

    def __bool__(self):
        return self.rep != self.ctx.zero_rep

    def key(self):
        """Canonical sort key (total order within one field)."""
        return self.ctx.rep_key(self.rep)

    def __str__(self):
        return self.ctx.str_rep(self.rep)

    def __repr__(self):
        return f"{self.ctx!r}({self})"


# ---------------------------------------------------------------------------
# module-level operations


def make_field(p: int, k: int = 1) -> FieldCtx:
    """Construct F_{p^k} for an odd prime p; k = 1 gives the prime field."""
    if not isinstance(p, int) or not isinstance(k, int):
        raise DomainError("p and k must be integers")
    if p == 2:
        raise DomainError("q must be an odd prime power")
    if not _is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if k < 1:
        raise DomainError("k must be at least 1")
    if k == 1:
        if p > PRIME_Q_LIMIT:
            raise DomainError(f"prime fields are limited to q <= 2^63, got {p}")
        return PrimeField(p)
    if p**k > EXT_Q_LIMIT:
        raise DomainError(f"extension fields are limited to q <= 10^6, got {p}^{k}")
    return ExtensionField(p, k)


def make_field_q(q: int) -> FieldCtx:
    """Construct F_q from the prime power q itself."""
    if not isinstance(q, int) or q < 3:
        raise DomainError("q must be an odd prime power >= 3")
    fac = _factor_int(q)
    if len(fac) != 1:
        raise DomainError(f"q = {q} is not a prime power")
    (p, k), = fac.items()
    return make_field(p, k)


def quad_char(a: FieldElement) -> int:
    """Quadratic character: 1 for nonzero squares, -1 for nonsquares, 0 at 0."""
    return a.ctx.quad_char_rep(a.rep)


def sqrt(a: FieldElement) -> FieldElement | None:
    """Deterministic square root, or None when ``a`` is a nonsquare."""
    rep = a.ctx.sqrt_rep(a.rep)
    return None if rep is None else FieldElement(a.ctx, rep)


def mult_order(a: FieldElement) -> int:
    """Order of ``a`` in the multiplicative group."""
    return a.ctx.mult_order_rep(a.rep)


def quadratic_extension(ctx: FieldCtx) -> QuadraticExtension:
    """The canonical quadratic extension of a base field (built once)."""
    return ctx.ext


def elements(ctx: FieldCtx):
    """Yield every element once, in canonical order.  Guarded at 10^7."""
    if ctx.q > ENUM_LIMIT:
        raise DomainError(f"refusing to enumerate a field of size {ctx.q}")
    if isinstance(ctx, PrimeField):
        for i in range(ctx.p):
            yield FieldElement(ctx, i)
    elif isinstance(ctx, ExtensionField):
        for digits in itertools.product(range(ctx.p), repeat=ctx.k):
            yield FieldElement(ctx, digits)
    else:
        for a in elements(ctx.base):
            for b in elements(ctx.base):
                yield FieldElement(ctx, (a.rep, b.rep))
