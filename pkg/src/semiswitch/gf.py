"""Exact arithmetic in the tower F_p < F_q < F_{q^n}, table driven.

An element of F_{q^n} (q = p^m) is a plain int in ``range(p**(m*n))``:
the base-p digits of the int are the element's coefficient vector over
F_p, least significant digit first.  0 is the zero element and 1 the
multiplicative identity.  A :class:`FieldCtx` holds discrete-log tables
built from a deterministic primitive element ``gamma``, plus q-power
Frobenius, relative trace and relative norm tables, so that hot loops
reduce to list lookups.

Subfields need no separate machinery: F_{q^d} (d | n) is the set of
codes fixed by ``x -> x**(q**d)`` and its arithmetic is the ambient one.

Construction is deterministic.  When no modulus is supplied the
lexicographically smallest monic irreducible of degree m*n over F_p is
used (smallest integer code, constant digit first), and ``gamma`` is
always the smallest element code of full multiplicative order.
"""

from __future__ import annotations

import json
import os
from itertools import product
from math import gcd

from .errors import BudgetExceeded, ConsistencyError

DEFAULT_FIELD_CAP = 1 << 22


def _env_int(name, default):
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


def field_cap():
    return _env_int("SEMISWITCH_FIELD_CAP", DEFAULT_FIELD_CAP)


def _is_prime(v):
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def _prime_factors(v):
    """Distinct prime factors by trial division (desk-scale inputs)."""
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


def _decode(code, p, width):
    digits = []
    for _ in range(width):
        code, r = divmod(code, p)
        digits.append(r)
    return digits


def _encode(digits, p):
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


# ---- dense polynomial arithmetic over F_p (construction time only) ----


def _poly_mul_mod(a, b, mod, p):
    """a*b mod the monic polynomial ``mod``; all little-endian lists."""
    d = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for k in range(len(res) - 1, d - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for t in range(d):
                res[k - d + t] = (res[k - d + t] - c * mod[t]) % p
    res = res[:d]
    res += [0] * (d - len(res))
    return res


def _poly_pow_mod(base, e, mod, p):
    d = len(mod) - 1
    result = [0] * d
    result[0] = 1
    acc = list(base[:d]) + [0] * (d - len(base[:d]))
    while e:
        if e & 1:
            result = _poly_mul_mod(result, acc, mod, p)
        acc = _poly_mul_mod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)

    def deg(f):
        for i in range(len(f) - 1, -1, -1):
            if f[i]:
                return i
        return -1

    while deg(b) >= 0:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db], p - 2, p)
        while deg(a) >= db:
            da = deg(a)
            c = (a[da] * inv) % p
            for t in range(db + 1):
                a[da - db + t] = (a[da - db + t] - c * b[t]) % p
        a, b = b, a
    return a


def _is_irreducible(mod, p):
    """Rabin test for a monic polynomial over F_p."""
    d = len(mod) - 1
    if d < 1 or mod[d] != 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    # x^(p^d) == x mod f
    top = _poly_pow_mod(x, p**d, mod, p)
    if top[1] != 1 or any(c for i, c in enumerate(top) if i != 1):
        return False
    for r in _prime_factors(d):
        g = _poly_pow_mod(x, p ** (d // r), mod, p)
        g[1] = (g[1] - 1) % p
        rem = _poly_gcd(mod, g, p)
        nz = [i for i, c in enumerate(rem) if c]
        if nz != [0] and nz != []:
            return False
    return True


def _find_modulus(p, d):
    """Smallest-code monic irreducible of degree d over F_p."""
    for code in range(p**d, 2 * p**d):
        digits = _decode(code, p, d + 1)
        if _is_irreducible(digits, p):
            return tuple(digits)
    raise ConsistencyError("no irreducible polynomial found, impossible")


class FieldCtx:
    """Immutable arithmetic context for F_{q^n} over F_q = F_{p^m}.

    All tables are built once at construction; instances are safe to
    share (nothing mutates after ``__init__``).  Elements are ints; the
    context never wraps them.
    """

    def __init__(self, p, m, n, modulus=None, cap=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1 or n < 1:
            raise ValueError("m and n must be positive")
        cap = field_cap() if cap is None else cap
        order = p ** (m * n)
        if order > cap:
            raise BudgetExceeded(f"p^(m*n) = {order} exceeds cap {cap}")
        self.p = p
        self.m = m
        self.n = n
        self.q = p**m
        self.order = order
        self.mult_order = order - 1
        deg = m * n
        if modulus is None:
            modulus = _find_modulus(p, deg)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != deg + 1 or modulus[deg] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {deg} (got {len(modulus) - 1})"
                )
            if not _is_irreducible(list(modulus), p):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.generator = self._find_generator()
        self._build_tables()
        # q^i - 1 for i in 0..n-1, used all over for x -> x^(q^i - 1)
        self.qpow_minus1 = tuple(self.q**i - 1 for i in range(n))
        self._subfields = {}
        self._coords = None

    # ---- construction helpers ----

    def _code_digits(self, code):
        return _decode(code, self.p, self.m * self.n)

    def _find_generator(self):
        N = self.mult_order
        if N == 1:
            return 1
        factors = _prime_factors(N)
        mod = list(self.modulus)
        for cand in range(2, self.order):
            digits = self._code_digits(cand)
            ok = True
            for r in factors:
                powed = _poly_pow_mod(digits, N // r, mod, self.p)
                if _encode(powed, self.p) == 1:
                    ok = False
                    break
            if ok:
                return cand
        raise ConsistencyError("no primitive element found, impossible for a field")

    def _build_tables(self):
        p, N = self.p, self.mult_order
        mod = list(self.modulus)
        gdigits = self._code_digits(self.generator)
        exp = [0] * N
        log = [None] * self.order
        cur = [0] * (self.m * self.n)
        cur[0] = 1
        for k in range(N):
            code = _encode(cur, p)
            if log[code] is not None:
                raise ConsistencyError("generator order too small", witness=code)
            exp[k] = code
            log[code] = k
            cur = _poly_mul_mod(cur, gdigits, mod, p)
        if _encode(cur, p) != 1:
            raise ConsistencyError("generator does not close its cycle")
        self.exp = exp
        self.log = log
        # q-power Frobenius as a table, then trace/norm from it
        frob = [0] * self.order
        for k in range(N):
            frob[exp[k]] = exp[(k * self.q) % N]
        self.frob_q = frob
        tr = [0] * self.order
        for x in range(self.order):
            acc, y = x, x
            for _ in range(self.n - 1):
                y = frob[y]
                acc = self.add(acc, y)
            tr[x] = acc
        self.tr = tr
        M = N // (self.q - 1) if self.q > 1 else 0
        nm = [0] * self.order
        for k in range(N):
            nm[exp[k]] = exp[(k * M) % N]
        self.nm = nm
        self.trace_step = M
        for x in range(self.order):
            if frob[tr[x]] != tr[x]:
                raise ConsistencyError("trace image not fixed by Frobenius", witness=x)

    # ---- basic arithmetic ----

    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        s, mult = 0, 1
        while a or b:
            s += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg(self, a):
        p = self.p
        if p == 2:
            return a
        s, mult = 0, 1
        while a:
            s += (-a % p) * mult
            a //= p
            mult *= p
        return s

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.mult_order]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % self.mult_order]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a**e with integer e; negative e needs a != 0."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp[(self.log[a] * e) % self.mult_order]

    def frobenius(self, x, k=1):
        """k-fold q-power Frobenius x -> x^(q^k)."""
        for _ in range(k % self.n):
            x = self.frob_q[x]
        return x

    def rel_trace(self, x):
        """Trace of F_{q^n} onto F_q."""
        return self.tr[x]

    def rel_norm(self, x):
        """Norm of F_{q^n} onto F_q."""
        return self.nm[x]

    def in_subfield(self, x, d=1):
        """Whether x lies in F_{q^d}; d must divide n."""
        if d < 1 or self.n % d:
            raise ValueError(f"d = {d} does not divide n = {self.n}")
        if x == 0:
            return True
        return (self.log[x] * (self.q**d - 1)) % self.mult_order == 0

    # ---- enumeration ----

    def elements(self):
        return range(self.order)

    def units(self):
        """Nonzero codes in code order."""
        return range(1, self.order)

    def star_units(self):
        """Nonzero elements in gamma-power order: gamma^0, gamma^1, ..."""
        return self.exp

    def subfield(self, d=1):
        """Elements of F_{q^d}, zero first then powers of a generator."""
        if d < 1 or self.n % d:
            raise ValueError(f"d = {d} does not divide n = {self.n}")
        if d not in self._subfields:
            sub_order = self.q**d
            step = self.mult_order // (sub_order - 1)
            elems = [0] + [self.exp[k * step] for k in range(sub_order - 1)]
            self._subfields[d] = tuple(elems)
        return self._subfields[d]

    def coords(self, x):
        """Coordinates of x over F_q w.r.t. the basis 1, gamma, ..., gamma^(n-1)."""
        if self._coords is None:
            basis = [self.exp[i] for i in range(self.n)]
            table = {}
            for cs in product(self.subfield(1), repeat=self.n):
                v = 0
                for c, e in zip(cs, basis):
                    v = self.add(v, self.mul(c, e))
                table[v] = cs
            if len(table) != self.order:
                raise ConsistencyError("gamma powers do not form a basis")
            self._coords = table
        return self._coords[x]

    # ---- dual element views ----

    def index_of(self, x):
        """Discrete log of x base gamma, None for zero."""
        return self.log[x]

    def from_index(self, k):
        if k is None:
            return 0
        return self.exp[k % self.mult_order]

    def vector_of(self, x):
        """Coefficient vector of x over F_p, length m*n, low digit first."""
        return tuple(self._code_digits(x))

    def from_vector(self, digits):
        digits = list(digits)
        if len(digits) != self.m * self.n:
            raise ValueError(f"vector must have length {self.m * self.n}")
        return _encode([d % self.p for d in digits], self.p)

    # ---- serialization ----

    def to_spec(self):
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "modulus": list(self.modulus),
            "generator_index": self.generator,
        }

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, n={self.n}, order={self.order})"


def build_field(p, m, n, modulus=None, cap=None):
    """Build a FieldCtx; the one public constructor."""
    return FieldCtx(p, m, n, modulus=modulus, cap=cap)


def field_from_spec(spec, cap=None):
    """Rebuild a context from :meth:`FieldCtx.to_spec` output (dict or JSON)."""
    if isinstance(spec, str):
        spec = json.loads(spec)
    ctx = build_field(spec["p"], spec["m"], spec["n"], modulus=spec["modulus"], cap=cap)
    want = spec.get("generator_index")
    if want is not None and want != ctx.generator:
        raise ValueError(
            f"generator mismatch: spec says {want}, deterministic choice is {ctx.generator}"
        )
    return ctx


def arith(ctx, op, *operands):
    """Dispatch helper: op in add/sub/neg/mul/div/inv/pow."""
    table = {
        "add": ctx.add,
        "sub": ctx.sub,
        "neg": ctx.neg,
        "mul": ctx.mul,
        "div": ctx.div,
        "inv": ctx.inv,
        "pow": ctx.pow,
    }
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return table[op](*operands)


__all__ = [
    "FieldCtx",
    "build_field",
    "field_from_spec",
    "arith",
    "field_cap",
    "DEFAULT_FIELD_CAP",
    "gcd",
]
