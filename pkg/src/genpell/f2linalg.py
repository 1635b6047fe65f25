"""Exact linear algebra over F2 with bit-packed rows.

Rows are Python ints used as bitsets (bit j = column j), so row operations
are single XORs and everything stays exact.  Also hosts the closed-form
random-matrix probabilities P(m,n,j) and g(n,m), their brute-force
enumeration oracle, the surjection/pairing Markov-model identity, and a
Monte-Carlo sampler for the conditional law 1/(2^(i+1)-1).

No floating point anywhere in this module; probabilities are Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


class F2Matrix:
    """Dense matrix over F2, rows stored as int bitsets."""

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows: int, cols: int, bits: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if bits is None:
            self.bits = [0] * rows
        else:
            if len(bits) != rows:
                raise ValueError("bits length must equal row count")
            mask = (1 << cols) - 1
            self.bits = [b & mask for b in bits]

    @classmethod
    def from_rows(cls, data: Iterable[Iterable[int]], cols: int | None = None) -> "F2Matrix":
        packed = []
        width = cols
        for row in data:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            packed.append(sum((int(v) & 1) << j for j, v in enumerate(row)))
        if width is None:
            width = 0
        return cls(len(packed), width, packed)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols} matrix")

    def get(self, i: int, j: int) -> int:
        self._check(i, j)
        return (self.bits[i] >> j) & 1

    def set(self, i: int, j: int, value: int) -> None:
        self._check(i, j)
        if value & 1:
            self.bits[i] |= 1 << j
        else:
            self.bits[i] &= ~(1 << j)

    def row(self, i: int) -> Tuple[int, ...]:
        if not (0 <= i < self.rows):
            raise IndexError("row index out of range")
        b = self.bits[i]
        return tuple((b >> j) & 1 for j in range(self.cols))

    def to_rows(self) -> List[Tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "F2Matrix":
        out = [0] * self.cols
        for i, b in enumerate(self.bits):
            while b:
                low = b & -b
                out[low.bit_length() - 1] |= 1 << i
                b ^= low
        return F2Matrix(self.cols, self.rows, out)

    def copy(self) -> "F2Matrix":
        return F2Matrix(self.rows, self.cols, list(self.bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.bits) == (other.rows, other.cols, other.bits)

    def __repr__(self) -> str:
        body = ";".join("".join(str((b >> j) & 1) for j in range(self.cols)) for b in self.bits)
        return f"F2Matrix({self.rows}x{self.cols}: {body})"


def _rank_bits(bits: Sequence[int]) -> int:
    """Rank of a list of bitset rows by elimination on the lowest set bit."""
    pivots: List[int] = []
    for b in bits:
        for p in pivots:
            low = p & -p
            if b & low:
                b ^= p
        if b:
            pivots.append(b)
    return len(pivots)


def _rref_bits(bits: Sequence[int], cols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    work = [b for b in bits]
    pivot_cols: List[int] = []
    r = 0
    for c in range(cols):
        sel = None
        for i in range(r, len(work)):
            if (work[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> c) & 1):
                work[i] ^= work[r]
        pivot_cols.append(c)
        r += 1
    return work[:r], pivot_cols


def _right_kernel_bits(bits: Sequence[int], cols: int) -> List[int]:
    """Basis (as bitmask vectors) of {v : M v = 0}."""
    rref, pivot_cols = _rref_bits(bits, cols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, pc in enumerate(pivot_cols):
            if (rref[i] >> free) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


def _unpack(vec: int, n: int) -> Tuple[int, ...]:
    return tuple((vec >> j) & 1 for j in range(n))


def rank(m: F2Matrix) -> int:
    """Row rank over F2."""
    return _rank_bits(m.bits)


def right_kernel_basis(m: F2Matrix) -> List[Tuple[int, ...]]:
    """Basis of the right kernel {v : Mv = 0}, vectors of length cols."""
    return [_unpack(v, m.cols) for v in _right_kernel_bits(m.bits, m.cols)]


def left_kernel_basis(m: F2Matrix) -> List[Tuple[int, ...]]:
    """Basis of the left kernel {v : v^T M = 0}, vectors of length rows."""
    t = m.transpose()
    return [_unpack(v, m.rows) for v in _right_kernel_bits(t.bits, t.cols)]


def kernel_intersection(m: F2Matrix) -> List[Tuple[int, ...]]:
    """Basis of LKer(M) ∩ RKer(M) for square M."""
    if m.rows != m.cols:
        raise ValueError("kernel_intersection requires a square matrix")
    stacked = list(m.bits) + list(m.transpose().bits)
    return [_unpack(v, m.cols) for v in _right_kernel_bits(stacked, m.cols)]


def prob_kernel_rank(m: int, n: int, j: int) -> Fraction:
    """P(m,n,j): probability a uniform m x n matrix over F2 has right kernel of rank j.

    Closed form: 2^(-nm) * prod_{i=0}^{n-j-1} (2^m - 2^i)(2^n - 2^i) / (2^(n-j) - 2^i).
    Zero when j is out of range or structurally impossible.
    """
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    if j < 0 or j > n:
        return Fraction(0)
    num = 1
    for i in range(n - j):
        a = (1 << m) - (1 << i)
        if a <= 0:
            return Fraction(0)
        num *= a * ((1 << n) - (1 << i))
    den = 1 << (n * m)
    for i in range(n - j):
        den *= (1 << (n - j)) - (1 << i)
    return Fraction(num, den)


def g_exact(n: int, m: int) -> Fraction:
    """g(n,m): probability the left and right kernels of a uniform n x n matrix
    intersect trivially, conditioned on kernel dimension m.

    Closed form: P(n-m, m, 0) * prod_{j=0}^{n-2m-1} (1 - 2^(j-n+m)) / P(n, n-m, 0).
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    if m == 0:
        return Fraction(1)
    num = prob_kernel_rank(n - m, m, 0)
    for j in range(n - 2 * m):
        num *= 1 - Fraction(1, 1 << (n - m - j))
    den = prob_kernel_rank(n, n - m, 0)
    return num / den


@dataclass
class MatrixStats:
    """Exhaustive enumeration result for m x n matrices over F2."""

    m: int
    n: int
    kernel_rank_freq: dict
    # Only populated for square matrices: kernel dim -> fraction of matrices
    # with that kernel dim whose left and right kernels intersect trivially.
    trivial_intersection_freq: dict


def enumerate_matrix_stats(m: int, n: int) -> MatrixStats:
    """Brute-force oracle over all 2^(mn) matrices (cap mn <= 24)."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    if m * n > 24:
        raise ValueError("enumeration capped at m*n <= 24")
    total = 1 << (m * n)
    mask = (1 << n) - 1
    rank_count = [0] * (n + 1)
    dim_count = [0] * (n + 1)
    trivial_count = [0] * (n + 1)
    square = m == n
    for code in range(total):
        bits = [(code >> (i * n)) & mask for i in range(m)]
        r = _rank_bits(bits)
        j = n - r
        rank_count[j] += 1
        if square:
            dim_count[j] += 1
            rk = _right_kernel_bits(bits, n)
            tbits = [0] * n
            for i, b in enumerate(bits):
                while b:
                    low = b & -b
                    tbits[low.bit_length() - 1] |= 1 << i
                    b ^= low
            lk = _right_kernel_bits(tbits, n)
            inter = _rank_bits(rk) + _rank_bits(lk) - _rank_bits(rk + lk)
            if inter == 0:
                trivial_count[j] += 1
    freq = {j: Fraction(c, total) for j, c in enumerate(rank_count) if c}
    trivial = {}
    if square:
        for j in range(n + 1):
            if dim_count[j]:
                trivial[j] = Fraction(trivial_count[j], dim_count[j])
    return MatrixStats(m, n, freq, trivial)


def markov_identity_check(n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of 1/(2^(n+1)-1) = sum_i P(n,n,i)/2^n * 1/(2^(i+1)-1), exactly."""
    if n < 0 or n > 64:
        raise ValueError("need 0 <= n <= 64")
    lhs = Fraction(1, (1 << (n + 1)) - 1)
    rhs = Fraction(0)
    for i in range(n + 1):
        rhs += prob_kernel_rank(n, n, i) / (1 << n) * Fraction(1, (1 << (i + 1)) - 1)
    return lhs, rhs


def _as_rng(rng: "random.Random | int") -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def sample_matrix(m: int, n: int, rng: "random.Random | int") -> F2Matrix:
    """Uniform m x n matrix over F2; reproducible for a fixed seed."""
    r = _as_rng(rng)
    if n == 0:
        return F2Matrix(m, 0)
    return F2Matrix(m, n, [r.getrandbits(n) for _ in range(m)])


@dataclass
class TUReport:
    """Counts from the surjection/pairing simulation.

    hits[i] / occurrences[i] estimates Pr(x in ker T | A_i) where A_i is the
    event that x lies in the left kernel of the pairing U, that kernel has
    dimension i+1, and ker T is contained in it (the compatibility under
    which the model's conditional law 1/(2^(i+1)-1) holds).  Counts are
    reported raw so callers compute their own sigma.
    """

    n: int
    trials: int
    seed: int
    hits: Tuple[int, ...]
    occurrences: Tuple[int, ...]

    def frequency(self, i: int) -> float | None:
        if self.occurrences[i] == 0:
            return None
        return self.hits[i] / self.occurrences[i]


def simulate_TU(n: int, trials: int, seed: int) -> TUReport:
    """Sample pairs (T, U): T uniform surjective F2^(n+1) -> F2^n by rejection,
    U a uniform pairing F2^(n+1) x F2^n -> F2.  x is fixed to e_1."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    if n < 0 or n > 12:
        raise ValueError("need 0 <= n <= 12")
    rng = random.Random(seed)
    hits = [0] * (n + 1)
    occurrences = [0] * (n + 1)
    if n == 0:
        # T maps onto the zero space, U is the empty pairing: A_0 always
        # holds and x is always in ker T.
        return TUReport(0, trials, seed, (trials,), (trials,))
    umask = (1 << n) - 1
    ubits_total = (n + 1) * n
    tmask = (1 << (n + 1)) - 1
    tbits_total = n * (n + 1)
    getrandbits = rng.getrandbits
    for _ in range(trials):
        u = getrandbits(ubits_total)
        if u & umask:
            # x = e_1 is not in the left kernel of U: no A_i event.
            continue
        urows = [(u >> (k * n)) & umask for k in range(n + 1)]
        i = n - _rank_bits(urows)
        while True:
            t = getrandbits(tbits_total)
            trows = [(t >> (k * (n + 1))) & tmask for k in range(n)]
            if _rank_bits(trows) == n:
                break
        kvecs = _right_kernel_bits(trows, n + 1)
        k = kvecs[0]
        # ker T (spanned by k) must sit inside leftker U for the conditional law.
        acc = 0
        kk = k
        while kk:
            low = kk & -kk
            acc ^= urows[low.bit_length() - 1]
            kk ^= low
        if acc:
            continue
        occurrences[i] += 1
        if k == 1:
            hits[i] += 1
    return TUReport(n, trials, seed, tuple(hits), tuple(occurrences))
