"""Hot scan kernels for exhaustive symmetric-group sweeps.

Two interchangeable backends implement the same operations:

- ``numba``: @njit loops that unrank, test and count rank by rank without
  materialising the group (default whenever numba imports cleanly);
- ``numpy``: pure-numpy slab processing built on itertools, kept as a
  fallback and as a cross-check of the jitted code.

Selection is by the environment variable ``SNTWIST_KERNELS`` ("numba" or
"numpy"); unset picks numba when available.  Both backends must return
identical values — the test suite asserts it and
``benchmarks/bench_kernels.py`` times them side by side.

Words here are 0-based one-line arrays, dtype uint8 (degree <= 12), in
lexicographic rank order.  All reductions are exact integer sums, so the
chunked runner gives results independent of chunking and worker count.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import islice, permutations as _lex_permutations
from typing import Callable

import numpy as np

ENV_VAR = "SNTWIST_KERNELS"
CHUNK = 1 << 16
MAX_SCAN_N = 12

_FACT = np.array([math.factorial(i) for i in range(MAX_SCAN_N + 1)], dtype=np.int64)


# --------------------------------------------------------------------------
# numpy implementations

def _perm_block_np(n: int, start: int, stop: int) -> np.ndarray:
    rows = list(islice(_lex_permutations(range(n)), start, stop))
    block = np.array(rows, dtype=np.uint8)
    return block.reshape(len(rows), n)


def _count_twisted_inner_np(n: int, x: np.ndarray, start: int, stop: int) -> int:
    x = np.asarray(x, dtype=np.uint8)
    xinv = np.argsort(x)
    count = 0
    for s in range(start, stop, CHUNK):
        block = _perm_block_np(n, s, min(s + CHUNK, stop))
        conj = x[block[:, xinv]]           # rows x*g*x^-1
        inv = np.argsort(block, axis=1)    # rows g^-1
        count += int(np.all(conj == inv, axis=1).sum())
    return count


def _cycle_type_ids_np(words: np.ndarray, type_table: np.ndarray) -> np.ndarray:
    table = [tuple(int(v) for v in row) for row in type_table]
    index = {row: i for i, row in enumerate(table)}
    n = words.shape[1]
    out = np.empty(len(words), dtype=np.int64)
    for r, row in enumerate(words):
        lengths = []
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            ln = 0
            p = i
            while not seen[p]:
                seen[p] = True
                p = int(row[p])
                ln += 1
            lengths.append(ln)
        lengths.sort(reverse=True)
        lengths += [0] * (n - len(lengths))
        out[r] = index[tuple(lengths)]
    return out


def _element_orders_np(words: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    out = np.empty(len(words), dtype=np.int64)
    for r, row in enumerate(words):
        seen = [False] * n
        o = 1
        for i in range(n):
            if seen[i]:
                continue
            ln = 0
            p = i
            while not seen[p]:
                seen[p] = True
                p = int(row[p])
                ln += 1
            o = math.lcm(o, ln)
        out[r] = o
    return out


_NUMPY_IMPL = {
    "perm_block": _perm_block_np,
    "count_twisted_inner": _count_twisted_inner_np,
    "cycle_type_ids": _cycle_type_ids_np,
    "element_orders": _element_orders_np,
}

IMPLS: dict[str, dict[str, Callable]] = {"numpy": _NUMPY_IMPL}


# --------------------------------------------------------------------------
# numba implementations (compiled lazily on first call)

def _build_numba_impl():
    from numba import njit

    @njit(cache=True, nogil=True)
    def _unrank_into(n, r, fact, pool, out):
        for i in range(n):
            pool[i] = i
        m = n
        for i in range(n):
            f = fact[n - 1 - i]
            d = r // f
            r -= d * f
            out[i] = pool[d]
            for j in range(d, m - 1):
                pool[j] = pool[j + 1]
            m -= 1

    @njit(cache=True, nogil=True)
    def _perm_block_nb(n, start, stop, fact):
        m = stop - start
        out = np.empty((m, n), dtype=np.uint8)
        pool = np.empty(n, dtype=np.int64)
        row = np.empty(n, dtype=np.int64)
        for t in range(m):
            _unrank_into(n, start + t, fact, pool, row)
            for i in range(n):
                out[t, i] = row[i]
        return out

    @njit(cache=True, nogil=True)
    def _count_twisted_inner_nb(n, x, xinv, fact, start, stop):
        g = np.empty(n, dtype=np.int64)
        ginv = np.empty(n, dtype=np.int64)
        pool = np.empty(n, dtype=np.int64)
        count = 0
        for r in range(start, stop):
            _unrank_into(n, r, fact, pool, g)
            for i in range(n):
                ginv[g[i]] = i
            ok = True
            for i in range(n):
                if x[g[xinv[i]]] != ginv[i]:
                    ok = False
                    break
            if ok:
                count += 1
        return count

    @njit(cache=True, nogil=True)
    def _cycle_type_ids_nb(words, type_table):
        m, n = words.shape
        out = np.empty(m, dtype=np.int64)
        lengths = np.empty(n, dtype=np.int64)
        seen = np.empty(n, dtype=np.uint8)
        for r in range(m):
            for i in range(n):
                seen[i] = 0
            k = 0
            for i in range(n):
                if seen[i]:
                    continue
                ln = 0
                p = i
                while not seen[p]:
                    seen[p] = 1
                    p = words[r, p]
                    ln += 1
                lengths[k] = ln
                k += 1
            # insertion sort, descending
            for a in range(1, k):
                v = lengths[a]
                b = a - 1
                while b >= 0 and lengths[b] < v:
                    lengths[b + 1] = lengths[b]
                    b -= 1
                lengths[b + 1] = v
            for a in range(k, n):
                lengths[a] = 0
            hit = -1
            for t in range(type_table.shape[0]):
                match = True
                for i in range(n):
                    if type_table[t, i] != lengths[i]:
                        match = False
                        break
                if match:
                    hit = t
                    break
            out[r] = hit
        return out

    @njit(cache=True, nogil=True)
    def _element_orders_nb(words):
        m, n = words.shape
        out = np.empty(m, dtype=np.int64)
        seen = np.empty(n, dtype=np.uint8)
        for r in range(m):
            for i in range(n):
                seen[i] = 0
            o = 1
            for i in range(n):
                if seen[i]:
                    continue
                ln = 0
                p = i
                while not seen[p]:
                    seen[p] = 1
                    p = words[r, p]
                    ln += 1
                a, b = o, ln
                while b:
                    a, b = b, a % b
                o = o * ln // a
            out[r] = o
        return out

    def perm_block_nb(n, start, stop):
        return _perm_block_nb(n, start, stop, _FACT)

    def count_twisted_inner_nb(n, x, start, stop):
        x = np.asarray(x, dtype=np.int64)
        xinv = np.argsort(x).astype(np.int64)
        return int(_count_twisted_inner_nb(n, x, xinv, _FACT, start, stop))

    def cycle_type_ids_nb(words, type_table):
        return _cycle_type_ids_nb(
            np.ascontiguousarray(words), np.asarray(type_table, dtype=np.int64)
        )

    def element_orders_nb(words):
        return _element_orders_nb(np.ascontiguousarray(words))

    return {
        "perm_block": perm_block_nb,
        "count_twisted_inner": count_twisted_inner_nb,
        "cycle_type_ids": cycle_type_ids_nb,
        "element_orders": element_orders_nb,
    }


def _pick_backend() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        IMPLS["numba"] = _build_numba_impl()
        return "numba"
    if choice:
        raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', not {choice!r}")
    try:
        IMPLS["numba"] = _build_numba_impl()
        return "numba"
    except ImportError:
        return "numpy"


_BACKEND = _pick_backend()


def backend_name() -> str:
    return _BACKEND


def _active() -> dict[str, Callable]:
    return IMPLS[_BACKEND]


# --------------------------------------------------------------------------
# public API (dispatches to the selected backend)

def perm_block(n: int, start: int, stop: int) -> np.ndarray:
    """One-line words of lexicographic ranks [start, stop), shape (m, n)."""
    if not 1 <= n <= MAX_SCAN_N:
        raise ValueError(f"degree {n} outside 1..{MAX_SCAN_N}")
    total = math.factorial(n)
    if not 0 <= start <= stop <= total:
        raise ValueError(f"rank range [{start}, {stop}) outside [0, {total}]")
    return _active()["perm_block"](n, start, stop)


def count_twisted_inner(n: int, x_word, start: int, stop: int) -> int:
    """#{g of rank in [start, stop) : x g x^-1 == g^-1}, exact."""
    return int(_active()["count_twisted_inner"](n, np.asarray(x_word), start, stop))


def cycle_type_ids(words: np.ndarray, type_table: np.ndarray) -> np.ndarray:
    """Row index into type_table (descending cycle lengths, zero padded)
    of each word's cycle type."""
    return _active()["cycle_type_ids"](words, type_table)


def element_orders(words: np.ndarray) -> np.ndarray:
    """Element order (lcm of cycle lengths) of each word."""
    return _active()["element_orders"](words)


@lru_cache(maxsize=None)
def group_table(n: int) -> np.ndarray:
    """The whole of S_n as a read-only (n!, n) uint8 array in rank order.

    Materialisation is capped at n <= 9 (3.3 MB); larger scans must go
    through the rank-chunked kernels instead.
    """
    if not 1 <= n <= 9:
        raise ValueError(f"group_table materialises only degrees 1..9, got {n}")
    table = perm_block(n, 0, math.factorial(n))
    table.setflags(write=False)
    return table


# --------------------------------------------------------------------------
# plain numpy helpers (cheap enough to need no backend switch)

def inverse_rows(words: np.ndarray) -> np.ndarray:
    """Row-wise inverse permutations (argsort of each row)."""
    return np.argsort(words, axis=1)


def conjugate_rows(x_word, words: np.ndarray) -> np.ndarray:
    """Row-wise x * g * x^-1 for every row g of words."""
    x = np.asarray(x_word, dtype=np.uint8)
    xinv = np.argsort(x)
    return x[words[:, xinv]]


def compose_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise compose(a_r, b_r): entry i is a_r[b_r[i]]."""
    return np.take_along_axis(a, b.astype(np.int64), axis=1)


def run_chunked(total: int, fn: Callable[[int, int], int], parallel: int = 1) -> int:
    """Sum fn(start, stop) over fixed CHUNK-sized rank chunks.

    Chunk boundaries depend only on ``total``, and the reduction is exact
    integer addition, so the result is identical for every worker count.
    """
    spans = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    if parallel <= 1 or len(spans) <= 1:
        return sum(fn(s, e) for s, e in spans)
    with ThreadPoolExecutor(max_workers=parallel) as pool:
        return sum(pool.map(lambda span: fn(*span), spans))
