"""Vectorized numpy fallback for the kernels in _kern_numba.

Same call surface and bit layout as the numba module, selected when numba is
unavailable or CURLNUM_BACKEND=numpy.  Batches run in lockstep over lanes of
three uint64 words; per-lane dynamic scan bounds are dropped in favour of
full scans over the block length, which keeps everything array-shaped.
"""

import numpy as np

U0 = np.uint64(0)
U1 = np.uint64(1)
_MASK = np.array([(1 << i) - 1 for i in range(64)], dtype=np.uint64)


def _ctz(x):
    # trailing zeros per lane; x == 0 lanes come back as 64
    low = x & (~x + U1)
    out = np.full(x.shape, 64, dtype=np.int64)
    nz = low != 0
    out[nz] = np.log2(low[nz].astype(np.float64)).astype(np.int64)
    return out


def _shr3(a0, a1, a2, p):
    if p < 64:
        up, dn = np.uint64(p), np.uint64(64 - p)
        return (a0 >> up) | (a1 << dn), (a1 >> up) | (a2 << dn), a2 >> up
    if p == 64:
        return a1, a2, np.zeros_like(a2)
    if p < 128:
        up, dn = np.uint64(p - 64), np.uint64(128 - p)
        return (a1 >> up) | (a2 << dn), a2 >> up, np.zeros_like(a2)
    if p == 128:
        return a2, np.zeros_like(a2), np.zeros_like(a2)
    return a2 >> np.uint64(p - 128), np.zeros_like(a2), np.zeros_like(a2)


def _run3(a0, a1, a2, L, p):
    # per-lane length of the p-periodic suffix, minus p (match run of s vs s>>p)
    b0, b1, b2 = _shr3(a0, a1, a2, p)
    x0, x1, x2 = a0 ^ b0, a1 ^ b1, a2 ^ b2
    m = L - p
    if m < 64:
        x0 = x0 & _MASK[m]
        x1 = np.zeros_like(x1)
        x2 = np.zeros_like(x2)
    elif m < 128:
        x1 = x1 & _MASK[m - 64]
        x2 = np.zeros_like(x2)
    elif m < 192:
        x2 = x2 & _MASK[m - 128]
    t0, t1, t2 = _ctz(x0), _ctz(x1), _ctz(x2)
    run = np.where(t0 < 64, t0, np.where(t1 < 64, 64 + t1, 128 + t2))
    return np.minimum(run, m)


def _cn3(a0, a1, a2, L):
    """(k, pi) per lane for equal-length L-bit lanes."""
    k = np.ones(a0.shape, dtype=np.int64)
    pi = np.ones(a0.shape, dtype=np.int64)
    for p in range(1, L // 2 + 1):
        kp = 1 + _run3(a0, a1, a2, L, p) // p
        better = kp > k
        k = np.where(better, kp, k)
        pi = np.where(better, p, pi)
    return k, pi


def _cn_flat(bits, L):
    z = np.zeros_like(bits)
    return _cn3(bits, z, z, L)


def build_codes_range(w, lo, hi, out):
    idx = np.arange(lo, hi, dtype=np.uint64)
    k, _ = _cn_flat(idx, w)
    out[lo:hi] = np.minimum(k, 4).astype(np.uint8)


def cn_all_range(n, lo, hi, codes, w, out_k, out_pi):
    idx = np.arange(lo, hi, dtype=np.uint64)
    k, pi = _cn_flat(idx, n)
    out_k[:] = k.astype(out_k.dtype)
    out_pi[:] = pi.astype(out_pi.dtype)


def _tail_batch(a0, n, limit):
    """Tail length per lane; -1 where the limit or the 192-bit cap is hit."""
    lanes = a0.shape[0]
    tau = np.full(lanes, -1, dtype=np.int64)
    live = np.arange(lanes)
    w0 = a0.astype(np.uint64)
    w1 = np.zeros(lanes, dtype=np.uint64)
    w2 = np.zeros(lanes, dtype=np.uint64)
    L = n
    steps = 0
    while live.size:
        k, _ = _cn3(w0, w1, w2, L)
        done = k == 1
        tau[live[done]] = steps
        big = k > 3
        tau[live[big]] = steps + 1
        keep = ~(done | big)
        live = live[keep]
        if not live.size:
            break
        if steps >= limit or L >= 192:
            tau[live] = -1
            break
        w0, w1, w2, k = w0[keep], w1[keep], w2[keep], k[keep]
        w2 = (w2 << U1) | (w1 >> np.uint64(63))
        w1 = (w1 << U1) | (w0 >> np.uint64(63))
        w0 = (w0 << U1) | (k - 2).astype(np.uint64)
        L += 1
        steps += 1
    return tau


_CHUNK = 1 << 18


def tail_tau_range(n, lo, hi, codes, w, limit, out):
    for base in range(lo, hi, _CHUNK):
        top = min(base + _CHUNK, hi)
        t = _tail_batch(np.arange(base, top, dtype=np.uint64), n, limit)
        out[base - lo:top - lo] = np.where((t < 0) | (t > 254), 255, t).astype(np.uint8)


def tail_reduce_range(n, lo, hi, codes, w, limit):
    best_tau, best_s, count = -1, np.uint64(0), 0
    for base in range(lo, hi, _CHUNK):
        top = min(base + _CHUNK, hi)
        t = _tail_batch(np.arange(base, top, dtype=np.uint64), n, limit)
        if (t < 0).any():
            return -1, np.uint64(0), 0
        m = int(t.max())
        if m > best_tau:
            best_tau = m
            hits = np.flatnonzero(t == m)
            best_s = np.uint64(base + hits[0])
            count = int(hits.size)
        elif m == best_tau:
            count += int((t == m).sum())
    return best_tau, best_s, count


def class_counts_range(n, lo, hi, codes, w, divs, out):
    for base in range(lo, hi, _CHUNK):
        top = min(base + _CHUNK, hi)
        s = np.arange(base, top, dtype=np.uint64)
        k, _ = _cn_flat(s, n)
        out[0] += np.bincount(k, minlength=n + 1)
        prim = np.ones(s.shape, dtype=bool)
        for d in divs:
            d = int(d)
            prim &= ((s ^ (s >> np.uint64(d))) & _MASK[n - d]) != 0
        out[1] += np.bincount(k[prim], minlength=n + 1)
        body = s & _MASK[n - 1]
        ww = (body << np.uint64(n)) | s
        if 2 * n - 1 <= 64:
            k2, _ = _cn_flat(ww, 2 * n - 1)
        else:
            k2, _ = _cn3(ww, body >> np.uint64(64 - n), np.zeros_like(ww), 2 * n - 1)
        rob = prim & (k2 <= k)
        out[2] += np.bincount(k[rob], minlength=n + 1)


def cn1_filter_range(n, lo, hi, codes, w, out):
    m = 0
    for base in range(lo, hi, _CHUNK):
        top = min(base + _CHUNK, hi)
        s = np.arange(base, top, dtype=np.uint64)
        k, _ = _cn_flat(s, n)
        hit = s[k == 1]
        out[m:m + hit.size] = hit
        m += hit.size
    return m


def count_a(seqs, n, i, codes, w):
    s = seqs.astype(np.uint64)
    suf = s & _MASK[i]
    a0 = s | (suf << np.uint64(n))
    if n + i <= 64:
        k, _ = _cn_flat(a0, n + i)
    else:
        k, _ = _cn3(a0, suf >> np.uint64(64 - n), np.zeros_like(s), n + i)
    return int((k == 1).sum())


def _splice(a0, a1, a2, piece, off, plen):
    # or an unsigned piece of plen bits into the 3-word lanes at bit offset off
    if off < 64:
        a0 |= piece << np.uint64(off)
        if off + plen > 64:
            a1 |= piece >> np.uint64(64 - off)
    elif off < 128:
        a1 |= piece << np.uint64(off - 64)
        if off - 64 + plen > 64:
            a2 |= piece >> np.uint64(128 - off)
    else:
        a2 |= piece << np.uint64(off - 128)
    return a0, a1, a2


def count_b(seqs, n, i, codes, w):
    s = seqs.astype(np.uint64)
    suf = s & _MASK[i]
    a0 = s | (suf << np.uint64(n))
    a1 = np.zeros_like(s)
    a2 = np.zeros_like(s)
    a0, a1, a2 = _splice(a0, a1, a2, s, n + i, n)
    k, _ = _cn3(a0, a1, a2, 2 * n + i)
    return int((k == 1).sum())


def count_e(seqs, n, i, j, codes, w):
    s = seqs.astype(np.uint64)
    m = n + i
    t = s | ((s & _MASK[i]) << np.uint64(n))
    tsuf = t & _MASK[j]
    a0 = t.copy()
    a1 = np.zeros_like(s)
    a2 = np.zeros_like(s)
    a0, a1, a2 = _splice(a0, a1, a2, tsuf, m, j)
    a0, a1, a2 = _splice(a0, a1, a2, t, m + j, m)
    k, _ = _cn3(a0, a1, a2, 2 * m + j)
    return int((k == 1).sum())


def essential_count_range(n, lo, hi, codes, w):
    cnt = 0
    for base in range(lo, hi, _CHUNK):
        top = min(base + _CHUNK, hi)
        s = np.arange(base, top, dtype=np.uint64)
        k, _ = _cn_flat(s, n)
        z = np.zeros_like(s)
        viol = np.zeros(s.shape, dtype=bool)
        for p in range(1, (n - 1) // 2 + 1):
            run = _run3(s, z, z, n, p)
            viol |= (run + p >= k * p) & (k * p <= n - 1)
        cnt += int(((k > 1) & ~viol).sum())
    return cnt


def tail_reduce_seqs(seqs, n, codes, w, limit):
    best_tau, best_s, count = -1, np.uint64(0), 0
    for base in range(0, seqs.size, _CHUNK):
        part = seqs[base:base + _CHUNK].astype(np.uint64)
        t = _tail_batch(part, n, limit)
        if (t < 0).any():
            return -1, np.uint64(0), 0
        m = int(t.max())
        if m > best_tau:
            best_tau = m
            hits = part[t == m]
            best_s = np.uint64(hits.min())
            count = int(hits.size)
        elif m == best_tau:
            hits = part[t == m]
            count += int(hits.size)
            if np.uint64(hits.min()) < best_s:
                best_s = np.uint64(hits.min())
    return best_tau, best_s, count
