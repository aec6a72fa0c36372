"""Bit-packed engines for exact binary weight distributions.

Codewords are packed into ceil(n/64) machine words and the whole
message space is walked in Gray-code order, so each codeword costs one
row XOR plus popcounts.  The message space is partitioned by the top
bits into chunks whose tallies merge by integer addition, which makes
the parallel result identical to the sequential one.

The JIT kernels (numba) cover the word counts used by every code in
this project (n <= 128); a pure-numpy partition engine with the same
contract serves as a slower fallback and as a cross-check in tests.
"""

from __future__ import annotations

import numpy as np

try:
    import numba
    from numba import int64, njit, prange, uint64

    HAVE_NUMBA = True
except Exception:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False


def pack_rows(G):
    """Pack a binary (k, n) matrix into (k, W) uint64 words.

    Bit j of word w holds column 64*w + j.
    """
    G = np.ascontiguousarray(G, dtype=np.uint8)
    k, n = G.shape
    W = max(1, (n + 63) // 64)
    words = np.zeros((k, W), dtype=np.uint64)
    for j in range(n):
        words[:, j // 64] |= G[:, j].astype(np.uint64) << np.uint64(j % 64)
    return words


def gf2_rank(G):
    """Rank of a binary matrix over GF(2)."""
    rows = []
    for word_row in pack_rows(G):
        v = 0
        for w, word in enumerate(word_row):
            v |= int(word) << (64 * w)
        rows.append(v)
    rank = 0
    for i in range(len(rows)):
        v = rows[i]
        if v == 0:
            continue
        rank += 1
        low = v & -v
        for j in range(i + 1, len(rows)):
            if rows[j] & low:
                rows[j] ^= v
    return rank


if HAVE_NUMBA:

    @njit(uint64(uint64), inline="always", cache=True)
    def _popcount(x):
        x = x - ((x >> uint64(1)) & uint64(0x5555555555555555))
        x = (x & uint64(0x3333333333333333)) + ((x >> uint64(2)) & uint64(0x3333333333333333))
        x = (x + (x >> uint64(4))) & uint64(0x0F0F0F0F0F0F0F0F)
        return (x * uint64(0x0101010101010101)) >> uint64(56)

    @njit(parallel=True, cache=True)
    def _hist_w1(rows, k, n, chunk_bits):
        nchunks = 1 << chunk_bits
        hists = np.zeros((nchunks, n + 1), dtype=np.int64)
        chunk = (int64(1) << k) >> chunk_bits
        for c in prange(nchunks):
            start = c * chunk
            g = uint64(start) ^ (uint64(start) >> uint64(1))
            acc = uint64(0)
            for j in range(k):
                if (g >> uint64(j)) & uint64(1):
                    acc ^= rows[j]
            h = hists[c]
            h[_popcount(acc)] += 1
            for i in range(start + 1, start + chunk):
                b = i & -i
                acc ^= rows[_popcount(uint64(b - 1))]
                h[_popcount(acc)] += 1
        return hists

    @njit(parallel=True, cache=True)
    def _hist_w2(rows0, rows1, k, n, chunk_bits):
        nchunks = 1 << chunk_bits
        hists = np.zeros((nchunks, n + 1), dtype=np.int64)
        chunk = (int64(1) << k) >> chunk_bits
        for c in prange(nchunks):
            start = c * chunk
            g = uint64(start) ^ (uint64(start) >> uint64(1))
            a0 = uint64(0)
            a1 = uint64(0)
            for j in range(k):
                if (g >> uint64(j)) & uint64(1):
                    a0 ^= rows0[j]
                    a1 ^= rows1[j]
            h = hists[c]
            h[_popcount(a0) + _popcount(a1)] += 1
            for i in range(start + 1, start + chunk):
                b = i & -i
                j = _popcount(uint64(b - 1))
                a0 ^= rows0[j]
                a1 ^= rows1[j]
                h[_popcount(a0) + _popcount(a1)] += 1
        return hists


def _numba_histogram(words, n, threads):
    k = words.shape[0]
    chunk_bits = 6 if k >= 20 else 0
    if threads is not None:
        threads = max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS))
        previous = numba.get_num_threads()
        numba.set_num_threads(threads)
    try:
        if words.shape[1] == 1:
            hists = _hist_w1(np.ascontiguousarray(words[:, 0]), k, n, chunk_bits)
        else:
            hists = _hist_w2(
                np.ascontiguousarray(words[:, 0]),
                np.ascontiguousarray(words[:, 1]),
                k,
                n,
                chunk_bits,
            )
    finally:
        if threads is not None:
            numba.set_num_threads(previous)
    return hists.sum(axis=0)


def _numpy_histogram(words, n):
    k, W = words.shape
    low = min(k, 18)
    span = np.zeros((1 << low, W), dtype=np.uint64)
    for j in range(low):
        L = 1 << j
        span[L : 2 * L] = span[:L] ^ words[j]
    hist = np.zeros(n + 1, dtype=np.int64)
    base = np.zeros(W, dtype=np.uint64)
    for h in range(1 << (k - low)):
        if h:
            # Gray step over the high rows: exactly one row toggles
            flip = (h & -h).bit_length() - 1
            base ^= words[low + flip]
        cur = span ^ base
        counts = np.bitwise_count(cur)
        wt = counts[:, 0]
        for w in range(1, W):
            wt = wt + counts[:, w]
        hist += np.bincount(wt, minlength=n + 1)[: n + 1]
    return hist


def weight_histogram(G, threads=None, engine="auto"):
    """Exact histogram of codeword weights of the binary code spanned by G.

    Enumerates all 2^k messages; entries are A_0..A_n with sum 2^k.
    `engine` is "auto", "numba" or "numpy".
    """
    G = np.ascontiguousarray(G, dtype=np.uint8)
    k, n = G.shape
    if k == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    words = pack_rows(G)
    if engine == "auto":
        engine = "numba" if (HAVE_NUMBA and words.shape[1] <= 2) else "numpy"
    if engine == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba engine requested but numba is unavailable")
        if words.shape[1] > 2:
            raise RuntimeError("numba engine supports n <= 128; use the numpy engine")
        return _numba_histogram(words, n, threads)
    if engine == "numpy":
        return _numpy_histogram(words, n)
    raise ValueError(f"unknown engine {engine!r}")
