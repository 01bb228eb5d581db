"""Exact arithmetic in F_{q^n} with q = p^h.

One tower F_p < F_q < F_{q^n} is realised as F_p[X]/(modulus) with a single
modulus of degree h*n; F_q is the fixed field of the h-fold p-power map.
Elements are plain ints encoding the coefficient vector in base p (for p = 2
this is the usual bit-vector encoding), so addition in characteristic 2 is
XOR and everything vectorises with numpy lookup tables.

Scalar operations live on FieldContext; FqnElement is a thin operator-sugar
wrapper used in formula-heavy code.  The hot enumeration loops work on raw
int arrays through the *_vec methods.
"""

import math

import numpy as np

from .errors import (
    DegreeMismatch,
    NoCompatibleEmbedding,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

# log/antilog tables are built for fields up to this size
TABLE_LIMIT = 1 << 20


def is_prime(x):
    if x < 2:
        return False
    i = 2
    while i * i <= x:
        if x % i == 0:
            return False
        i += 1
    return True


def prime_factors(x):
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


def euler_phi(x):
    r = x
    for d in prime_factors(x):
        r -= r // d
    return r


# --- polynomials over F_p as base-p integers (coefficient of X^i = digit i) ---

def poly_digits(a, p, length=None):
    d = []
    while a:
        d.append(a % p)
        a //= p
    if length is not None:
        d += [0] * (length - len(d))
    return d


def poly_from_digits(d, p):
    v = 0
    for c in reversed(d):
        v = v * p + c
    return v


def poly_deg(a, p):
    d = -1
    while a:
        a //= p
        d += 1
    return d


def poly_mul(a, b, p):
    if p == 2:
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        return r
    da, db = poly_digits(a, p), poly_digits(b, p)
    res = [0] * (len(da) + len(db))
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                res[i + j] = (res[i + j] + x * y) % p
    return poly_from_digits(res, p)


def poly_mod(a, m, p):
    dm = poly_deg(m, p)
    if p == 2:
        da = a.bit_length() - 1
        while da >= dm:
            a ^= m << (da - dm)
            da = a.bit_length() - 1
        return a
    md = poly_digits(m, p)
    lead_inv = pow(md[dm], p - 2, p)
    ad = poly_digits(a, p)
    for i in range(len(ad) - 1, dm - 1, -1):
        c = ad[i]
        if c:
            f = (c * lead_inv) % p
            for j in range(dm + 1):
                ad[i - dm + j] = (ad[i - dm + j] - f * md[j]) % p
    return poly_from_digits(ad[:dm], p)


def poly_mulmod(a, b, m, p):
    return poly_mod(poly_mul(a, b, p), m, p)


def poly_powmod(a, e, m, p):
    r = 1
    a = poly_mod(a, m, p)
    while e:
        if e & 1:
            r = poly_mulmod(r, a, m, p)
        a = poly_mulmod(a, a, m, p)
        e >>= 1
    return r


def poly_gcd(a, b, p):
    while b:
        a, b = b, poly_mod(a, b, p)
    # normalise to monic
    if a:
        d = poly_deg(a, p)
        lead = poly_digits(a, p)[d]
        a = poly_mul(a, pow(lead, p - 2, p), p) if lead != 1 else a
    return a


def is_irreducible(f, p):
    """Rabin's test: f | X^{p^d} - X and gcd(X^{p^{d/r}} - X, f) = 1 for primes r | d."""
    d = poly_deg(f, p)
    if d <= 0:
        return False
    if d == 1:
        return True
    x = p  # the polynomial X
    for r in set(prime_factors(d)):
        t = poly_powmod(x, p ** (d // r), f, p)
        # gcd(X^{p^{d/r}} - X, f) must be 1
        diff = poly_sub(t, poly_mod(x, f, p), p)
        if poly_gcd(diff, f, p) != 1:
            return False
    t = poly_powmod(x, p ** d, f, p)
    return t == poly_mod(x, f, p)


def poly_sub(a, b, p):
    if p == 2:
        return a ^ b
    la = poly_digits(a, p)
    lb = poly_digits(b, p)
    n = max(len(la), len(lb))
    la += [0] * (n - len(la))
    lb += [0] * (n - len(lb))
    return poly_from_digits([(x - y) % p for x, y in zip(la, lb)], p)


def least_irreducible(p, deg):
    """Least monic irreducible of given degree by integer encoding.

    The constant term is required nonzero so the degenerate degree-1 case
    picks X + 1 rather than X (either quotient is the prime field, but this
    keeps 0 from being the generator of the power basis).
    """
    lead = p ** deg
    for tail in range(1, lead):
        if tail % p == 0:
            continue
        f = lead + tail
        if is_irreducible(f, p):
            return f
    raise ReducibleModulus(f"no irreducible of degree {deg} found over F_{p}")


class FieldContext:
    """The tower F_p < F_q < F_{q^n}, q = p^h, with a fixed modulus of degree h*n."""

    def __init__(self, p, h, n, modulus=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p} is not prime")
        if h < 1 or n < 1:
            raise ValueError("h and n must be positive")
        self.p = p
        self.h = h
        self.n = n
        self.deg = h * n
        self.q = p ** h
        self.order = p ** self.deg
        if modulus is None:
            modulus = least_irreducible(p, self.deg)
        else:
            if poly_deg(modulus, p) != self.deg:
                raise DegreeMismatch(
                    f"modulus degree {poly_deg(modulus, p)} != h*n = {self.deg}"
                )
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._exp2 = None
        self._neg_tab = None
        self._frob_tabs = {}
        self._generator = None
        self._fq = None
        self._moore_inv = None

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        da = poly_digits(a, self.p, self.deg)
        db = poly_digits(b, self.p, self.deg)
        return poly_from_digits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.p == 2:
            return a
        return poly_from_digits([(-x) % self.p for x in poly_digits(a, self.p)], self.p)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return poly_mulmod(a, b, self.modulus, self.p)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("field inverse of 0")
        return self.pow_int(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_int(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        e %= self.order - 1
        if self._log is not None:
            return int(self._exp[(self._log[a] * e) % (self.order - 1)])
        return poly_powmod(a, e, self.modulus, self.p)

    def frobenius(self, x, e=1):
        """x^(q^e); e is reduced mod n."""
        e %= self.n
        if x == 0 or e == 0:
            return x
        return self.pow_int(x, pow(self.q, e, self.order - 1))

    def frob_p(self, x):
        return self.pow_int(x, self.p)

    def trace(self, x):
        acc = 0
        for e in range(self.n):
            acc = self.add(acc, self.frobenius(x, e))
        return acc

    def norm(self, x):
        return self.pow_int(x, (self.order - 1) // (self.q - 1)) if x else 0

    def in_subfield(self, x, d):
        e = math.gcd(d, self.n)
        return self.frobenius(x, e) == x

    def element_order(self, x):
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        o = self.order - 1
        for r in prime_factors(o):
            while o % r == 0 and self.pow_int(x, o // r) == 1:
                o //= r
        return o

    @property
    def generator(self):
        """Least element generating the multiplicative group."""
        if self._generator is None:
            target = self.order - 1
            g = 2 if self.order > 2 else 1
            while self.element_order(g) != target:
                g += 1
            self._generator = g
        return self._generator

    def fq_elements(self):
        """All elements of the F_q subfield, ascending."""
        if self._fq is None:
            if self.h == 1:
                self._fq = tuple(range(self.p))
            elif self.order <= TABLE_LIMIT:
                self._ensure_tables()
                arr = np.arange(self.order, dtype=np.int64)
                self._fq = tuple(int(x) for x in arr[self.frob_vec(arr, 1) == arr])
            else:
                # fixed space of the q-power map, via its F_p matrix
                from . import modmat

                cols = []
                for s in range(self.deg):
                    cols.append(poly_digits(self.frobenius(self.p ** s, 1), self.p, self.deg))
                m = np.array(cols, dtype=np.int64).T
                m = (m - np.eye(self.deg, dtype=np.int64)) % self.p
                basis = modmat.nullspace(m, self.p)
                elems = set()
                for combo in range(self.p ** len(basis)):
                    digs = poly_digits(combo, self.p, len(basis))
                    v = np.zeros(self.deg, dtype=np.int64)
                    for c, row in zip(digs, basis):
                        v = (v + c * row) % self.p
                    elems.add(poly_from_digits([int(t) for t in v], self.p))
                self._fq = tuple(sorted(elems))
        return self._fq

    def coords(self, x):
        """F_p coordinate vector w.r.t. the power basis of the modulus."""
        return poly_digits(x, self.p, self.deg)

    def from_coords(self, digits):
        return poly_from_digits(list(digits), self.p)

    # -- tables and vector ops ---------------------------------------------

    def _ensure_tables(self):
        if self._log is not None:
            return
        if self.order > TABLE_LIMIT:
            raise ValueError(f"field of order {self.order} exceeds table limit")
        g = self.generator
        qm1 = self.order - 1
        exp = np.zeros(2 * qm1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        acc = 1
        for i in range(qm1):
            exp[i] = acc
            log[acc] = i
            acc = poly_mulmod(acc, g, self.modulus, self.p)
        exp[qm1:] = exp[:qm1]
        zsent = 2 * qm1
        log[0] = zsent
        exp2 = np.zeros(2 * zsent + 1, dtype=np.int64)
        exp2[: 2 * qm1] = exp
        self._exp = exp
        self._log = log
        self._exp2 = exp2
        self._zsent = zsent

    def mul_vec(self, a, b):
        """Elementwise product of int arrays (zeros handled)."""
        self._ensure_tables()
        return self._exp2[self._log[a] + self._log[b]]

    def add_vec(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros_like(np.broadcast_arrays(a, b)[0])
        pw = 1
        for _ in range(self.deg):
            out += ((a // pw + b // pw) % self.p) * pw
            pw *= self.p
        return out

    def neg_vec(self, a):
        if self.p == 2:
            return np.asarray(a)
        if self._neg_tab is None:
            self._neg_tab = np.array(
                [self.neg(x) for x in range(self.order)], dtype=np.int64
            )
        return self._neg_tab[a]

    def frob_vec(self, a, e=1):
        e %= self.n
        if e == 0:
            return np.asarray(a)
        tab = self._frob_tabs.get(e)
        if tab is None:
            self._ensure_tables()
            qe = pow(self.q, e, self.order - 1)
            tab = np.zeros(self.order, dtype=np.int64)
            nz = np.arange(1, self.order, dtype=np.int64)
            tab[nz] = self._exp2[(self._log[nz] * qe) % (self.order - 1)]
            self._frob_tabs[e] = tab
        return tab[a]

    def all_elements(self):
        return np.arange(self.order, dtype=np.int64)

    # -- element wrapper and formatting -------------------------------------

    def element(self, x):
        if isinstance(x, FqnElement):
            if x.ctx is not self:
                raise ValueError("element from a different field context")
            return x
        v = int(x)
        if not 0 <= v < self.order:
            raise ValueError(f"{v} is not an element index of a field of order {self.order}")
        return FqnElement(self, v)

    def zero(self):
        return FqnElement(self, 0)

    def one(self):
        return FqnElement(self, 1)

    def descriptor(self):
        return f"{self.p}^{self.h}^{self.n}:{self.modulus:x}"

    def format_element(self, x):
        return format(x, "x")

    def parse_element(self, s):
        """'gK' = K-th power of the canonical generator; otherwise hex coordinates."""
        s = s.strip()
        if s.startswith("g"):
            return self.pow_int(self.generator, int(s[1:] or "1"))
        v = int(s, 16)
        if not 0 <= v < self.order:
            raise ValueError(f"element {s!r} out of range for field of order {self.order}")
        return v

    def moore_inverse(self):
        """Inverse of the Moore matrix of the F_q-basis 1, t, ..., t^(n-1).

        Used to read a linearized polynomial off its values on that basis.
        """
        if self._moore_inv is None:
            n = self.n
            theta = self.p if self.deg > 1 else 1
            basis = [self.pow_int(theta, l) for l in range(n)]
            m = [[self.frobenius(basis[l], j) for j in range(n)] for l in range(n)]
            self._moore_inv = _invert_field_matrix(self, m)
        return self._moore_inv

    def fq_basis(self):
        """F_p-basis of the F_q subfield."""
        if self.h == 1:
            return (1,)
        zeta = self.pow_int(self.generator, (self.order - 1) // (self.q - 1))
        return tuple(self.pow_int(zeta, i) for i in range(self.h))

    def __repr__(self):
        return f"FieldContext(p={self.p}, h={self.h}, n={self.n}, modulus={self.modulus:#x})"


def _invert_field_matrix(ctx, m):
    """Inverse of a square matrix over F_{q^n} by Gauss-Jordan."""
    n = len(m)
    a = [row[:] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[r], a[piv] = a[piv], a[r]
        inv = ctx.inv(a[r][c])
        a[r] = [ctx.mul(inv, t) for t in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
    return [row[n:] for row in a]


class FqnElement:
    """Operator sugar over a raw int element of a FieldContext."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FqnElement):
            if other.ctx is not self.ctx:
                raise ValueError("mixed field contexts")
            return other.val
        return int(other)

    def __add__(self, other):
        return FqnElement(self.ctx, self.ctx.add(self.val, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FqnElement(self.ctx, self.ctx.sub(self.val, self._coerce(other)))

    def __rsub__(self, other):
        return FqnElement(self.ctx, self.ctx.sub(self._coerce(other), self.val))

    def __mul__(self, other):
        return FqnElement(self.ctx, self.ctx.mul(self.val, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FqnElement(self.ctx, self.ctx.div(self.val, self._coerce(other)))

    def __rtruediv__(self, other):
        return FqnElement(self.ctx, self.ctx.div(self._coerce(other), self.val))

    def __neg__(self):
        return FqnElement(self.ctx, self.ctx.neg(self.val))

    def __pow__(self, e):
        return FqnElement(self.ctx, self.ctx.pow_int(self.val, e))

    def frob(self, e=1):
        return FqnElement(self.ctx, self.ctx.frobenius(self.val, e))

    def trace(self):
        return FqnElement(self.ctx, self.ctx.trace(self.val))

    def __eq__(self, other):
        if isinstance(other, FqnElement):
            return self.ctx is other.ctx and self.val == other.val
        return self.val == other

    def __hash__(self):
        return hash((id(self.ctx), self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"<{self.ctx.format_element(self.val)}>"


def make_field(p, h, n, modulus=None):
    """Build the ambient tower; deterministic modulus when none is given."""
    return FieldContext(p, h, n, modulus)


def frobenius_q(x: FqnElement, e: int) -> FqnElement:
    return x.frob(e)


def trace_qn_over_q(x: FqnElement) -> FqnElement:
    return x.trace()


def in_subfield(x: FqnElement, d: int) -> bool:
    return x.ctx.in_subfield(x.val, d)


# --- subfield embeddings -------------------------------------------------------

def embed_root(src: FieldContext, dst: FieldContext):
    """Embedding F_{src} -> F_{dst} sending the power-basis generator of src to
    the least root of src.modulus in dst.  Returns a callable on raw ints."""
    if src.p != dst.p or dst.deg % src.deg != 0:
        raise NoCompatibleEmbedding(
            f"no embedding of degree-{src.deg} field into degree-{dst.deg} field"
        )
    mod_digits = poly_digits(src.modulus, src.p)
    root = None
    if dst.order <= TABLE_LIMIT:
        xs = dst.all_elements()
        acc = np.zeros(dst.order, dtype=np.int64)
        for c in reversed(mod_digits):
            acc = dst.add_vec(dst.mul_vec(acc, xs), np.int64(c % dst.p))
        hits = np.nonzero(acc == 0)[0]
        if hits.size:
            root = int(hits[0])
    else:
        for x in range(dst.order):
            acc = 0
            for c in reversed(mod_digits):
                acc = dst.add(dst.mul(acc, x), c % dst.p)
            if acc == 0:
                root = x
                break
    if root is None:
        raise NoCompatibleEmbedding("src modulus has no root in dst")
    powers = [1]
    for _ in range(src.deg - 1):
        powers.append(dst.mul(powers[-1], root))

    def emb(x):
        acc = 0
        for c, pw in zip(poly_digits(x, src.p, src.deg), powers):
            if c:
                acc = dst.add(acc, dst.mul(c, pw))
        return acc

    return emb


def fq_isomorphism(src: FieldContext, dst: FieldContext):
    """Isomorphism of the F_q subfield of src onto the F_q subfield of dst.

    Matches a generator of F_q* by its minimal polynomial over F_p; for h = 1
    both subfields are the canonical prime field and the map is the identity.
    """
    if src.p != dst.p or src.h != dst.h:
        raise NoCompatibleEmbedding("subfields have different orders")
    if src.h == 1:
        return lambda x: x
    from . import modmat

    zeta = src.pow_int(src.generator, (src.order - 1) // (src.q - 1))
    # minimal polynomial of zeta over F_p: kernel of the (h+1) power-coordinate matrix
    pows = [src.pow_int(zeta, i) for i in range(src.h + 1)]
    m = np.array([src.coords(x) for x in pows], dtype=np.int64).T
    ker = modmat.nullspace(m, src.p)
    coeffs = [int(t) for t in ker[0]]
    # least root of that polynomial in dst
    root = None
    for x in sorted(dst.fq_elements()):
        acc = 0
        for c in reversed(coeffs):
            acc = dst.add(dst.mul(acc, x), c % dst.p)
        if acc == 0:
            root = x
            break
    if root is None:
        raise NoCompatibleEmbedding("no matching root for subfield generator")
    # change of basis: coordinates of x in the zeta-power basis of F_q
    basis_mat = np.array(
        [src.coords(src.pow_int(zeta, i)) for i in range(src.h)], dtype=np.int64
    ).T
    dst_powers = [1]
    for _ in range(src.h - 1):
        dst_powers.append(dst.mul(dst_powers[-1], root))

    def iso(x):
        c = modmat.solve_particular(basis_mat, np.array(src.coords(x)), src.p)
        if c is None:
            raise ValueError("element not in the F_q subfield")
        acc = 0
        for ci, pw in zip(c, dst_powers):
            if ci:
                acc = dst.add(acc, dst.mul(int(ci), pw))
        return acc

    return iso


def primitive_quadratics(ctx: FieldContext):
    """All pairs (gamma, c) in F_q* x F_q* with X^2 + gamma*X - c primitive over F_q.

    Primitive: irreducible with roots generating the multiplicative group of
    the quadratic extension.  There are euler_phi(q^2 - 1) / 2 such pairs.
    """
    scratch = FieldContext(ctx.p, ctx.h, 2)
    iso = fq_isomorphism(ctx, scratch)
    full_order = scratch.order - 1
    out = []
    for gamma in ctx.fq_elements():
        if gamma == 0:
            continue
        for c in ctx.fq_elements():
            if c == 0:
                continue
            g2, c2 = iso(gamma), iso(c)
            # roots of X^2 + g2*X - c2 in the quadratic extension
            for x in range(scratch.order):
                v = scratch.sub(
                    scratch.add(scratch.mul(x, x), scratch.mul(g2, x)), c2
                )
                if v == 0:
                    if x != 0 and scratch.element_order(x) == full_order:
                        out.append((gamma, c))
                    break
    return out
