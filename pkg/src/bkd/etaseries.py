"""Exact power-series expansion of eta quotients.

A finite eta quotient is a product prod_m prod_{n>=1} (1 - q^{m n})^{e_m}
with distinct positive moduli m and nonzero integer exponents e_m.  The
broken k-diamond counting function delta_k(n) is the coefficient sequence
of one such quotient:

    sum_n delta_k(n) q^n
        = prod_{n>=1} (1-q^{2n}) (1-q^{(2k+1)n})
          / ((1-q^n)^3 (1-q^{(4k+2)n})).

Two independent algorithms are provided:

* :func:`expand_eta_quotient` applies each binomial factor (1 - q^t) as a
  sparse O(N) array pass (backward difference for a multiplication,
  cumulative sums with stride t for a division).
* :func:`delta_oracle_logderiv` runs the logarithmic-derivative recurrence
  n f_n = sum_j w_j f_{n-j} driven by divisor sums.

They share no code and must agree coefficient-for-coefficient, which is
the correctness oracle for everything built on top.  All arithmetic is
over Python's arbitrary-precision integers; no floating point is used.
"""

from __future__ import annotations

import csv
import functools
import hashlib
import io
import json
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from operator import add, sub
from typing import Iterable, Sequence, TextIO

__all__ = [
    "EtaQuotientSpec",
    "PartitionTable",
    "broken_diamond_spec",
    "expand_eta_quotient",
    "delta_table",
    "delta_oracle_logderiv",
]


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite list of (modulus, exponent) factors of an eta quotient.

    Moduli must be distinct positive integers in ascending order and
    exponents nonzero.  Use :meth:`from_factors` to normalize arbitrary
    input (merging repeated moduli, dropping zero exponents).
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("eta quotient spec must contain at least one factor")
        moduli = [m for m, _ in self.factors]
        if any(m <= 0 for m in moduli):
            raise ValueError("moduli must be positive integers")
        if any(e == 0 for _, e in self.factors):
            raise ValueError("exponents must be nonzero")
        if len(set(moduli)) != len(moduli):
            raise ValueError("duplicate moduli: %r" % (moduli,))
        if moduli != sorted(moduli):
            raise ValueError("moduli must be sorted ascending")

    @classmethod
    def from_factors(cls, factors: Iterable[tuple[int, int]]) -> "EtaQuotientSpec":
        merged: Counter[int] = Counter()
        for m, e in factors:
            merged[int(m)] += int(e)
        normalized = tuple(sorted((m, e) for m, e in merged.items() if e != 0))
        return cls(normalized)


def broken_diamond_spec(k: int) -> EtaQuotientSpec:
    """Eta-quotient spec of the broken k-diamond generating function.

    For k >= 1 this is literally [(1, -3), (2, +1), (2k+1, +1), (4k+2, -1)].
    For k = 0 the moduli collide (2k+1 = 1, 4k+2 = 2) and the normalized
    form [(1, -2)] results, i.e. two-colored partitions.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer, got %r" % (k,))
    return EtaQuotientSpec.from_factors(
        [(1, -3), (2, 1), (2 * k + 1, 1), (4 * k + 2, -1)]
    )


# ---------------------------------------------------------------------------
# Sparse binomial passes
# ---------------------------------------------------------------------------

def _apply_multiply(c: list[int], t: int) -> None:
    """In place c := c * (1 - q^t), truncated to len(c) terms."""
    n = len(c)
    if t < n:
        # snapshot semantics: every read sees pre-pass values
        c[t:] = list(map(sub, c[t:], c[: n - t]))


def _apply_divide(c: list[int], t: int) -> None:
    """In place c := c / (1 - q^t), i.e. stride-t cumulative sums."""
    n = len(c)
    if t >= n:
        return
    if t < 32:
        for r in range(t):
            c[r::t] = accumulate(c[r::t])
    else:
        # ascending blocks of width t; each block adds the previous,
        # already-updated block, realizing c[i] += c[i - t]
        for s in range(t, n, t):
            e = min(s + t, n)
            c[s:e] = list(map(add, c[s:e], c[s - t : e - t]))


def expand_eta_quotient(spec: EtaQuotientSpec, N: int) -> list[int]:
    """First N+1 coefficients of the eta quotient described by ``spec``.

    Multiplications (positive exponents) are applied first and divisions
    last, so every intermediate array is the integer coefficient array of
    a genuine truncated product.  Cost is O(N^2 * sum |e_m| / m) integer
    operations.
    """
    if N < 0:
        raise ValueError("truncation order must be >= 0, got %r" % (N,))
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec.from_factors(spec)
    c = [0] * (N + 1)
    c[0] = 1
    for m, e in spec.factors:
        if e > 0:
            for _ in range(e):
                for j in range(1, N // m + 1):
                    _apply_multiply(c, m * j)
    for m, e in spec.factors:
        if e < 0:
            for _ in range(-e):
                for j in range(1, N // m + 1):
                    _apply_divide(c, m * j)
    return c


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionTable:
    """Immutable table of exact values delta_k(0..N).

    ``coeffs[n]`` is delta_k(n) as a Python int.  Completed tables are
    safe to share across threads.
    """

    k: int
    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.N + 1:
            raise ValueError("coefficient array length != N + 1")

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def check_invariants(self) -> None:
        """Positivity and monotonicity of the stored values."""
        if self.coeffs[0] != 1:
            raise AssertionError("delta_k(0) != 1")
        for n, v in enumerate(self.coeffs):
            if v <= 0:
                raise AssertionError("nonpositive coefficient at n=%d" % n)
        for n in range(self.N):
            if self.coeffs[n + 1] < self.coeffs[n]:
                raise AssertionError("coefficients decrease at n=%d" % n)

    # -- serialization ------------------------------------------------------

    def write_csv(self, fp: TextIO) -> None:
        w = csv.writer(fp, lineterminator="\n")
        w.writerow(["n", "delta"])
        for n, v in enumerate(self.coeffs):
            w.writerow([n, str(v)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        # decimal strings, never floats: values overflow doubles fast
        return {"k": self.k, "N": self.N, "coeffs": [str(v) for v in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PartitionTable":
        coeffs = tuple(int(s) for s in obj["coeffs"])
        return cls(k=int(obj["k"]), N=int(obj["N"]), coeffs=coeffs)

    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(("%d:%d:" % (self.k, self.N)).encode())
        h.update(",".join(str(v) for v in self.coeffs).encode())
        return h.hexdigest()


@functools.lru_cache(maxsize=32)
def delta_table(k: int, N: int) -> PartitionTable:
    """Exact table of delta_k(0..N) by eta-quotient expansion.

    Positivity is asserted before returning; a nonpositive coefficient
    would signal an implementation bug, never expected input.
    Tables are memoized, so repeated requests are cheap.
    """
    if k < 0:
        raise ValueError("k must be >= 0, got %r" % (k,))
    if N < 0:
        raise ValueError("N must be >= 0, got %r" % (N,))
    coeffs = expand_eta_quotient(broken_diamond_spec(k), N)
    for n, v in enumerate(coeffs):
        if v <= 0:
            raise AssertionError(
                "expansion produced nonpositive delta_%d(%d) = %d" % (k, n, v)
            )
    return PartitionTable(k=k, N=N, coeffs=tuple(coeffs))


# ---------------------------------------------------------------------------
# Independent oracle
# ---------------------------------------------------------------------------

def _divisor_sums(N: int) -> list[int]:
    """sigma(1..N) by sieving; sigma[j] = sum of divisors of j."""
    sigma = [0] * (N + 1)
    for d in range(1, N + 1):
        for j in range(d, N + 1, d):
            sigma[j] += d
    return sigma


def logderiv_weights(spec: EtaQuotientSpec, N: int) -> list[int]:
    """Weights w_1..w_N of the recurrence n f_n = sum_j w_j f_{n-j}.

    For F = prod_m prod_{n>=1} (1-q^{mn})^{e_m} the logarithmic
    derivative gives w_j = -sum_{m | j} e_m * m * sigma(j / m), where
    sigma is the sum-of-divisors function.
    """
    sigma = _divisor_sums(N)
    w = [0] * (N + 1)
    for m, e in spec.factors:
        for j in range(m, N + 1, m):
            w[j] -= e * m * sigma[j // m]
    return w


def eta_oracle_coeffs(spec: EtaQuotientSpec, N: int) -> list[int]:
    """Coefficients of an eta quotient via the log-derivative recurrence.

    Shares no code path with :func:`expand_eta_quotient`.  The division
    by n in the recurrence must be exact; a nonzero remainder means the
    weight formula is wrong and raises immediately.
    """
    if N < 0:
        raise ValueError("truncation order must be >= 0, got %r" % (N,))
    w = logderiv_weights(spec, N)
    f = [0] * (N + 1)
    f[0] = 1
    for n in range(1, N + 1):
        s = 0
        for j in range(1, n + 1):
            wj = w[j]
            if wj:
                s += wj * f[n - j]
        q, r = divmod(s, n)
        if r:
            raise AssertionError(
                "inexact division at n=%d: the recurrence weights are wrong" % n
            )
        f[n] = q
    return f


def delta_oracle_logderiv(k: int, N: int) -> list[int]:
    """delta_k(0..N) by the recurrence oracle (cross-validation path)."""
    if k < 0:
        raise ValueError("k must be >= 0, got %r" % (k,))
    return eta_oracle_coeffs(broken_diamond_spec(k), N)


def table_prefix_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when the shorter sequence is an exact prefix of the longer."""
    n = min(len(a), len(b))
    return list(a[:n]) == list(b[:n])
