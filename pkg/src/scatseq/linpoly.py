"""Multivariate linearized polynomials: m x n coefficient grids over F_{q^n}.

A grid (c[i][j]) stands for the map v -> sum_{i,j} c[i][j] * v_i^(q^j),
reduced mod X_i^(q^n) - X_i, i.e. an F_q-linear map (F_{q^n})^m -> F_{q^n}.
"""

import numpy as np

from . import modmat
from .errors import ArityMismatch


class LinPoly:
    __slots__ = ("ctx", "m", "coeffs")

    def __init__(self, ctx, m, coeffs):
        self.ctx = ctx
        self.m = m
        grid = tuple(tuple(int(c) for c in row) for row in coeffs)
        if len(grid) != m or any(len(row) != ctx.n for row in grid):
            raise ArityMismatch(f"coefficient grid must be {m} x {ctx.n}")
        self.coeffs = grid

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx, m):
        return cls(ctx, m, [[0] * ctx.n for _ in range(m)])

    @classmethod
    def monomial(cls, ctx, m, var, exp, coeff=1):
        """coeff * X_var^(q^exp) with 0-based var index."""
        grid = [[0] * ctx.n for _ in range(m)]
        grid[var][exp % ctx.n] = int(coeff)
        return cls(ctx, m, grid)

    @classmethod
    def univariate(cls, ctx, coeffs):
        """From a list a_0..a_(n-1) standing for sum a_j X^(q^j)."""
        row = list(coeffs) + [0] * (ctx.n - len(coeffs))
        return cls(ctx, 1, [row])

    @classmethod
    def trace_form(cls, ctx, m, alpha, v):
        """alpha * Tr(v_1 X_1 + ... + v_m X_m)."""
        grid = [
            [ctx.mul(alpha, ctx.frobenius(v[i], j)) for j in range(ctx.n)]
            for i in range(m)
        ]
        return cls(ctx, m, grid)

    # -- ring / module structure ---------------------------------------------

    def is_zero(self):
        return all(c == 0 for row in self.coeffs for c in row)

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        return LinPoly(
            ctx,
            self.m,
            [
                [ctx.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeffs, other.coeffs)
            ],
        )

    def __sub__(self, other):
        self._check(other)
        ctx = self.ctx
        return LinPoly(
            ctx,
            self.m,
            [
                [ctx.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeffs, other.coeffs)
            ],
        )

    def __neg__(self):
        ctx = self.ctx
        return LinPoly(ctx, self.m, [[ctx.neg(c) for c in row] for row in self.coeffs])

    def scale(self, a):
        ctx = self.ctx
        a = int(a)
        return LinPoly(ctx, self.m, [[ctx.mul(a, c) for c in row] for row in self.coeffs])

    def _check(self, other):
        if not isinstance(other, LinPoly) or other.m != self.m or other.ctx is not self.ctx:
            raise ArityMismatch("operands must share variable count and field context")

    def __eq__(self, other):
        return (
            isinstance(other, LinPoly)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, vals):
        if len(vals) != self.m:
            raise ArityMismatch(f"expected {self.m} arguments, got {len(vals)}")
        ctx = self.ctx
        acc = 0
        for i in range(self.m):
            v = int(vals[i])
            if v == 0:
                continue
            for j in range(ctx.n):
                c = self.coeffs[i][j]
                if c:
                    acc = ctx.add(acc, ctx.mul(c, ctx.frobenius(v, j)))
        return acc

    def values_on_points(self, points):
        """Vectorised evaluation; points is a list of m int arrays."""
        ctx = self.ctx
        acc = np.zeros(np.broadcast(*points).shape, dtype=np.int64)
        for i in range(self.m):
            for j in range(ctx.n):
                c = self.coeffs[i][j]
                if c:
                    acc = ctx.add_vec(acc, ctx.mul_vec(np.int64(c), ctx.frob_vec(points[i], j)))
        return acc

    # -- matrix form, rank, rank-one recognition -------------------------------

    def to_matrix(self):
        """F_p matrix of the induced map, (h*n) x (h*n*m), power-basis coordinates."""
        ctx = self.ctx
        deg = ctx.deg
        cols = []
        for i in range(self.m):
            for s in range(deg):
                pt = [0] * self.m
                pt[i] = ctx.p ** s if deg > 1 else 1
                cols.append(ctx.coords(self.evaluate(pt)))
        return np.array(cols, dtype=np.int64).T

    def rank(self):
        r = modmat.rank(self.to_matrix(), self.ctx.p)
        assert r % self.ctx.h == 0
        return r // self.ctx.h

    def kernel_points(self, points):
        """Indices of evaluation points annihilated by the map (vectorised)."""
        vals = self.values_on_points(points)
        return np.nonzero(vals == 0)[0]

    def is_rank_one_trace_form(self):
        """(alpha, v) with self = alpha*Tr(v . X) when rank is 1, else None."""
        if self.rank() != 1:
            return None
        ctx = self.ctx
        alpha = 0
        for i in range(self.m):
            for s in range(ctx.deg):
                pt = [0] * self.m
                pt[i] = ctx.p ** s if ctx.deg > 1 else 1
                val = self.evaluate(pt)
                if val:
                    alpha = val
                    break
            if alpha:
                break
        v = tuple(ctx.div(self.coeffs[i][0], alpha) for i in range(self.m))
        for i in range(self.m):
            for j in range(ctx.n):
                if self.coeffs[i][j] != ctx.mul(alpha, ctx.frobenius(v[i], j)):
                    return None
        return alpha, v

    # -- star form, adjoint, composition ---------------------------------------

    def star(self, other):
        self._check(other)
        ctx = self.ctx
        acc = 0
        for ra, rb in zip(self.coeffs, other.coeffs):
            for a, b in zip(ra, rb):
                acc = ctx.add(acc, ctx.mul(a, b))
        return acc

    def adjoint(self):
        """Transpose w.r.t. the trace form: Tr(x f(y)) = Tr(y f^T(x)).  Univariate only."""
        if self.m != 1:
            raise ArityMismatch("adjoint is defined for univariate polynomials")
        ctx = self.ctx
        n = ctx.n
        out = [0] * n
        for j in range(n):
            a = self.coeffs[0][j]
            if a:
                k = (n - j) % n
                out[k] = ctx.add(out[k], ctx.frobenius(a, k))
        return LinPoly(ctx, 1, [out])

    def compose(self, other):
        """self o other, univariate, reduced mod X^(q^n) - X."""
        if self.m != 1 or other.m != 1:
            raise ArityMismatch("composition is defined for univariate polynomials")
        if other.ctx is not self.ctx:
            raise ArityMismatch("operands must share a field context")
        ctx = self.ctx
        n = ctx.n
        out = [0] * n
        for i in range(n):
            a = self.coeffs[0][i]
            if not a:
                continue
            for j in range(n):
                b = other.coeffs[0][j]
                if b:
                    k = (i + j) % n
                    out[k] = ctx.add(out[k], ctx.mul(a, ctx.frobenius(b, i)))
        return LinPoly(ctx, 1, [out])

    # -- serialisation -----------------------------------------------------------

    def to_json(self):
        return {
            "m": self.m,
            "n": self.ctx.n,
            "coeffs": [[self.ctx.format_element(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, ctx, data):
        if data["n"] != ctx.n:
            raise ArityMismatch("grid width does not match the field context")
        grid = [[int(c, 16) for c in row] for row in data["coeffs"]]
        return cls(ctx, data["m"], grid)

    def __repr__(self):
        terms = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    terms.append(f"{self.ctx.format_element(c)}*X{i + 1}^q{j}")
        return "LinPoly(" + (" + ".join(terms) if terms else "0") + ")"


def evaluate(f: LinPoly, v) -> int:
    return f.evaluate([x.val if hasattr(x, "val") else x for x in v])


def star(f: LinPoly, g: LinPoly) -> int:
    return f.star(g)
