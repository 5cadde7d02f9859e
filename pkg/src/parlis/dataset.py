"""Deterministic input generators and the shared dataset file format.

Two generators are provided: ``gen_range`` draws values uniformly from
``[1, k_prime]`` (which upper-bounds the LIS length by the number of
distinct values), and ``gen_line`` draws ``t*i + s_i`` with uniform
noise ``s_i`` in ``[0, sigma]`` (long LIS for small noise).  Weights
come from ``gen_weights``.

All randomness is SplitMix64 used as a counter-based generator: output
``i`` of a stream is ``splitmix64(seed + i * GOLDEN_GAMMA)``, so any
index block can be generated independently and the result never
depends on worker count.  Bounded draws use fixed-point scaling
``(x * span) >> 64`` (one draw per index; bias is at most span / 2^64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INT64_MAX = np.iinfo(np.int64).max

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MASK64 = 0xFFFFFFFFFFFFFFFF


def splitmix64(x: int) -> int:
    """Reference SplitMix64 mix of a 64-bit counter (scalar, exact)."""
    z = (x + GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _splitmix64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized SplitMix64 outputs ``start .. start+count-1`` of a stream."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + idx * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _mulhi64(x: np.ndarray, k: int) -> np.ndarray:
    """High 64 bits of ``x * k`` for uint64 arrays, via 32-bit limbs."""
    m32 = np.uint64(0xFFFFFFFF)
    a = x >> np.uint64(32)
    b = x & m32
    c = np.uint64(k >> 32)
    d = np.uint64(k & 0xFFFFFFFF)
    lo = b * d
    mid1 = a * d + (lo >> np.uint64(32))
    mid2 = b * c + (mid1 & m32)
    return a * c + (mid1 >> np.uint64(32)) + (mid2 >> np.uint64(32))


def _bounded(seed: int, n: int, span: int) -> np.ndarray:
    """``n`` draws uniform in ``[0, span)``, one SplitMix64 output each."""
    if span <= 0 or span > 1 << 63:
        raise ValueError(f"span out of range: {span}")
    z = _splitmix64_block(seed, 0, n)
    return _mulhi64(z, span).astype(np.int64)


@dataclass
class Dataset:
    """An input instance: values plus optional per-object weights."""

    n: int
    values: np.ndarray
    weights: np.ndarray | None
    seed: int
    pattern: str  # "range", "line" or "file"

    def __post_init__(self):
        if self.n != len(self.values):
            raise ValueError("n does not match number of values")
        if self.weights is not None and len(self.weights) != self.n:
            raise ValueError("weights length does not match n")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        if self.n != other.n or (self.weights is None) != (other.weights is None):
            return False
        if not np.array_equal(self.values, other.values):
            return False
        if self.weights is not None and not np.array_equal(self.weights, other.weights):
            return False
        return True


def gen_range(n: int, k_prime: int, seed: int) -> Dataset:
    """Values i.i.d. uniform in ``[1, k_prime]``; LIS length <= k_prime."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k_prime < 1:
        raise ValueError(f"k_prime must be >= 1, got {k_prime}")
    if k_prime > INT64_MAX - 1:
        raise ValueError("k_prime overflows the value type")
    values = _bounded(seed, n, k_prime) + 1
    return Dataset(n, values, None, seed, "range")


def gen_line(n: int, t: int, sigma: int, seed: int) -> Dataset:
    """Values ``t*i + s_i`` (1-based i) with ``s_i`` uniform in ``[0, sigma]``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if t < 0 or sigma < 0:
        raise ValueError("t and sigma must be nonnegative")
    if t * n + sigma >= INT64_MAX:
        raise ValueError("t*n + sigma overflows the value type")
    noise = _bounded(seed, n, sigma + 1)
    values = np.arange(1, n + 1, dtype=np.int64) * t + noise
    return Dataset(n, values, None, seed, "line")


def gen_weights(n: int, lo: int, hi: int, seed: int) -> np.ndarray:
    """``n`` i.i.d. uniform signed integers in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty weight range [{lo}, {hi}]")
    span = hi - lo + 1
    return _bounded(seed, n, span) + lo


def with_weights(ds: Dataset, lo: int, hi: int, seed: int | None = None) -> Dataset:
    """Attach generated weights to a dataset (weight stream seed = seed+1)."""
    wseed = (ds.seed + 1) & _MASK64 if seed is None else seed
    w = gen_weights(ds.n, lo, hi, wseed)
    return Dataset(ds.n, ds.values, w, ds.seed, ds.pattern)


def write_dataset(ds: Dataset, path) -> None:
    """Text format: header ``n=<count> weighted=<0|1>``, then one row per object."""
    with open(path, "w") as fh:
        weighted = 1 if ds.weights is not None else 0
        fh.write(f"n={ds.n} weighted={weighted}\n")
        if weighted:
            for v, w in zip(ds.values.tolist(), ds.weights.tolist()):
                fh.write(f"{v}\t{w}\n")
        else:
            for v in ds.values.tolist():
                fh.write(f"{v}\n")


class DatasetFormatError(ValueError):
    pass


def read_dataset(path) -> Dataset:
    with open(path) as fh:
        header = fh.readline().strip()
        parts = header.split()
        if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("weighted="):
            raise DatasetFormatError(f"bad header: {header!r}")
        try:
            n = int(parts[0][2:])
            weighted = int(parts[1][9:])
        except ValueError as exc:
            raise DatasetFormatError(f"bad header: {header!r}") from exc
        if n < 1:
            raise DatasetFormatError(f"header declares n={n}")
        if weighted not in (0, 1):
            raise DatasetFormatError(f"weighted must be 0 or 1, got {weighted}")
        values = np.empty(n, dtype=np.int64)
        weights = np.empty(n, dtype=np.int64) if weighted else None
        for i in range(n):
            line = fh.readline()
            if not line:
                raise DatasetFormatError(f"expected {n} rows, file ended after {i}")
            cols = line.split()
            if weighted:
                if len(cols) != 2:
                    raise DatasetFormatError(f"row {i + 1}: expected value<TAB>weight, got {line!r}")
                values[i] = int(cols[0])
                weights[i] = int(cols[1])
            else:
                if len(cols) != 1:
                    raise DatasetFormatError(f"row {i + 1}: expected a single value, got {line!r}")
                values[i] = int(cols[0])
        if fh.readline().strip():
            raise DatasetFormatError("trailing rows beyond declared count")
    return Dataset(n, values, weights, 0, "file")


def calibrate_line_rank(n: int, t: int, sigma: int, seed: int) -> int:
    """Measured LIS length of a line-pattern instance (via the sequential
    binary-search baseline).  There is no closed-form (t, sigma) -> rank
    mapping; pick parameters by probing with this helper."""
    from .baselines import seq_bs

    ds = gen_line(n, t, sigma, seed)
    _, k = seq_bs(ds.values)
    return k


def line_params_for_rank(n: int, target_k: int, seed: int = 0) -> tuple[int, int]:
    """Search a (t, sigma) pair whose measured rank is close to ``target_k``.

    Uses the empirical shape k ~ 2n/sqrt(sigma) for t=1 as a starting
    point, then refines by probing.  Returns (t, sigma).
    """
    if target_k <= 1:
        return (0, 0)
    if target_k >= n:
        return (1, 0)
    sigma = max(1, int((2 * n / target_k) ** 2))
    best = (1, sigma)
    best_err = abs(calibrate_line_rank(n, 1, sigma, seed) - target_k)
    for _ in range(8):
        if best_err <= max(1, target_k // 20):
            break
        k = calibrate_line_rank(n, 1, sigma, seed)
        if k == target_k:
            return (1, sigma)
        ratio = k / target_k
        sigma = max(1, int(sigma * ratio * ratio))
        err = abs(calibrate_line_rank(n, 1, sigma, seed) - target_k)
        if err < best_err:
            best, best_err = (1, sigma), err
    return best
