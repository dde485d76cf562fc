"""Exact dense linear algebra over prime fields F_p.

Matrices hold small nonnegative residues in int64 numpy arrays; every
operation reduces mod p, so results are exact.  Elimination uses
first-nonzero pivoting, which makes rref/kernel/solve deterministic for a
given input.  Intended scale is a few thousand rows/columns at most.
"""

from __future__ import annotations

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7)


def _check_prime(p: int) -> None:
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"unsupported prime {p}; supported: {SUPPORTED_PRIMES}")


class FpMatrix:
    """A rows x cols matrix over F_p."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, data):
        _check_prime(p)
        self.p = p
        a = np.array(data, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError(f"expected 2-d data, got ndim={a.ndim}")
        self.a = a % p

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        _check_prime(p)
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        _check_prime(p)
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, p: int, rows: list, cols: int | None = None) -> "FpMatrix":
        if not rows:
            return cls.zeros(p, 0, cols or 0)
        return cls(p, np.array(rows, dtype=np.int64))

    # -- basic structure ----------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def copy(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(
            np.array_equal(self.a, other.a)
        )

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.a.tolist()!r})"

    def is_zero(self) -> bool:
        return not self.a.any()

    # -- arithmetic ----------------------------------------------------

    def _check_same_field(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def add(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FpMatrix(self.p, self.a + other.a)

    def sub(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FpMatrix(self.p, self.a - other.a)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.p, self.a * (c % self.p))

    def mul(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch for mul: {self.shape} x {other.shape}")
        return FpMatrix(self.p, (self.a @ other.a) % self.p)

    def apply(self, vec) -> np.ndarray:
        """Matrix times column vector (1-d array)."""
        v = np.asarray(vec, dtype=np.int64) % self.p
        if v.shape != (self.cols,):
            raise ValueError(f"vector length {v.shape} incompatible with {self.shape}")
        return (self.a @ v) % self.p

    # -- elimination ----------------------------------------------------

    def rref(self) -> tuple["FpMatrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        p = self.p
        a = self.a.copy()
        m, n = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(n):
            pivot = -1
            for i in range(r, m):
                if a[i, c]:
                    pivot = i
                    break
            if pivot < 0:
                continue
            if pivot != r:
                a[[r, pivot], :] = a[[pivot, r], :]
            inv = pow(int(a[r, c]), -1, p)
            a[r, :] = (a[r, :] * inv) % p
            nz = np.nonzero(a[:, c])[0]
            for i in nz:
                if i != r:
                    a[i, :] = (a[i, :] - a[i, c] * a[r, :]) % p
            pivots.append(c)
            r += 1
            if r == m:
                break
        return FpMatrix(p, a), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "FpMatrix":
        """Rows form the canonical basis of the right null space.

        For each non-pivot column j there is one basis vector with a 1 in
        position j; rank + number of rows equals cols.
        """
        red, pivots = self.rref()
        n = self.cols
        free = [j for j in range(n) if j not in pivots]
        if not free:
            return FpMatrix.zeros(self.p, 0, n)
        basis = np.zeros((len(free), n), dtype=np.int64)
        for k, j in enumerate(free):
            basis[k, j] = 1
            for r, c in enumerate(pivots):
                basis[k, c] = (-red.a[r, j]) % self.p
        return FpMatrix(self.p, basis)

    def solve(self, rhs) -> np.ndarray | None:
        """One particular solution x of A x = rhs, or None if inconsistent."""
        b = np.asarray(rhs, dtype=np.int64).reshape(-1) % self.p
        if b.shape != (self.rows,):
            raise ValueError(f"rhs length {b.shape} incompatible with {self.shape}")
        aug = FpMatrix(self.p, np.hstack([self.a, b.reshape(-1, 1)]))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        for r, c in enumerate(pivots):
            x[c] = red.a[r, self.cols]
        return x

    def row_space_basis(self) -> "FpMatrix":
        """Rows form a basis of the row space (nonzero rows of rref)."""
        red, pivots = self.rref()
        return FpMatrix(self.p, red.a[: len(pivots), :].copy())

    def in_row_space(self, vec) -> np.ndarray | None:
        """Coordinates of vec in terms of this matrix's rows, or None."""
        sol = FpMatrix(self.p, self.a.T).solve(vec)
        return sol
