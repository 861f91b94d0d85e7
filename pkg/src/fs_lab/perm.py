"""Bijections ``V(X) -> V(Y)`` as permutation tuples, with Lehmer ranking.

A bijection ``b`` is a tuple where ``b[x] = y`` means position ``x`` of X holds
person ``y`` of Y.  Ranks are factorial-base Lehmer codes, so rank order is
lexicographic order and ``0`` is the identity.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

import numpy as np

MAX_N = 20

Bijection = tuple[int, ...]
SwapSequence = list[tuple[int, int]]


class PermError(ValueError):
    pass


def check_bijection(b: Sequence[int]) -> Bijection:
    b = tuple(int(v) for v in b)
    if sorted(b) != list(range(len(b))):
        raise PermError(f"not a permutation of 0..{len(b) - 1}: {list(b)}")
    return b


def identity(n: int) -> Bijection:
    return tuple(range(n))


def inverse(b: Sequence[int]) -> Bijection:
    inv = [0] * len(b)
    for x, y in enumerate(b):
        inv[y] = x
    return tuple(inv)


def rank(b: Sequence[int]) -> int:
    n = len(b)
    if n > MAX_N:
        raise PermError(f"rank arithmetic is capped at n={MAX_N}")
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if b[j] < b[i])
        r = r * (n - i) + smaller
    return r


def unrank(index: int, n: int) -> Bijection:
    if n > MAX_N:
        raise PermError(f"rank arithmetic is capped at n={MAX_N}")
    if not 0 <= index < factorial(n):
        raise PermError(f"rank {index} outside [0, {n}!)")
    digits = []
    for radix in range(1, n + 1):
        index, d = divmod(index, radix)
        digits.append(d)
    pool = list(range(n))
    return tuple(pool.pop(d) for d in reversed(digits))


def sign(b: Sequence[int]) -> int:
    """Parity bit: ``n - #cycles (mod 2)``."""
    seen = [False] * len(b)
    cycles = 0
    for start in range(len(b)):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = True
            v = b[v]
    return (len(b) - cycles) % 2


def apply_value_swap(b: Sequence[int], u: int, v: int) -> Bijection:
    """``(u, v) o b``: the positions holding ``u`` and ``v`` trade occupants."""
    if u == v:
        raise PermError("a swap needs two distinct values")
    out = list(b)
    i, j = out.index(u), out.index(v)
    out[i], out[j] = v, u
    return tuple(out)


def apply_swaps(b: Sequence[int], seq: Iterable[tuple[int, int]]) -> Bijection:
    """Apply value swaps with no legality check (see ``engine.apply_sequence``)."""
    out = tuple(b)
    for u, v in seq:
        out = apply_value_swap(out, u, v)
    return out


def reverse_sequence(seq: Sequence[tuple[int, int]]) -> SwapSequence:
    return [tuple(p) for p in reversed(seq)]


# Vectorized helpers used by the census engine.

def factorials(n: int) -> np.ndarray:
    return np.array([factorial(i) for i in range(n + 1)], dtype=np.int64)


def all_perms(n: int) -> np.ndarray:
    """All permutations of ``0..n-1`` as an ``(n!, n)`` uint8 array, row ``r`` = ``unrank(r)``."""
    block = np.zeros((1, 0), dtype=np.uint8)
    for m in range(1, n + 1):
        # prepend each leading value f and shift the (m-1)-perms above it
        parts = []
        for f in range(m):
            tail = block + (block >= f)
            head = np.full((block.shape[0], 1), f, dtype=np.uint8)
            parts.append(np.hstack([head, tail.astype(np.uint8)]))
        block = np.vstack(parts)
    return block


def lehmer_digits(perms: np.ndarray) -> np.ndarray:
    """Per-row Lehmer digits: ``d[i] = #{j > i : p[j] < p[i]}``."""
    m, n = perms.shape
    digits = np.zeros((m, n), dtype=np.uint8)
    for i in range(n - 1):
        digits[:, i] = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
    return digits


def rank_array(perms: np.ndarray) -> np.ndarray:
    m, n = perms.shape
    fact = factorials(n)
    digits = lehmer_digits(perms).astype(np.int64)
    return digits @ fact[n - 1::-1]
