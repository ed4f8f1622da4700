"""numba kernels for the bit-packed {2,3} paths.

Layout shared by all kernels: one bit per symbol (2->0, 3->1), LSB = last
symbol.  Long sequences use three uint64 words (a0 = low 64 bits = the end of
the sequence), which covers length 192 - more than any tail reachable within
the search caps.  `codes` is the suffix lookup table (values 1..4 = curl
capped at 4) indexed by the low w bits; w == 0 means no table, full scan.

All kernels are nogil so the drivers can shard ranges across threads.
"""

import numpy as np
from numba import njit

# MASK64[i] = 2^i - 1; index 64 intentionally absent (never masked at 64).
MASK64 = np.array([(1 << i) - 1 for i in range(64)], dtype=np.uint64)

U1 = np.uint64(1)
U63 = np.uint64(63)


@njit(cache=True, nogil=True)
def _ctz64(x):
    # trailing zeros of a nonzero uint64, branchy binary search
    n = 0
    if x & np.uint64(0xFFFFFFFF) == 0:
        n += 32
        x >>= np.uint64(32)
    if x & np.uint64(0xFFFF) == 0:
        n += 16
        x >>= np.uint64(16)
    if x & np.uint64(0xFF) == 0:
        n += 8
        x >>= np.uint64(8)
    if x & np.uint64(0xF) == 0:
        n += 4
        x >>= np.uint64(4)
    if x & np.uint64(0x3) == 0:
        n += 2
        x >>= np.uint64(2)
    if x & np.uint64(0x1) == 0:
        n += 1
    return n


@njit(cache=True, nogil=True)
def _window_block(wbits, t, w):
    # Minimal block length q whose t-fold repeat is visible at the end of the
    # length-w window.  Exists whenever the window's curl is exactly t.
    for q in range(1, w // t + 1):
        x = (wbits ^ (wbits >> np.uint64(q))) & MASK64[w - q]
        run = (w - q) if x == 0 else _ctz64(x)
        if 1 + run // q >= t:
            return q
    return 1  # unreachable for a sound table; keeps the kernel total


@njit(cache=True, nogil=True)
def cn_word(s, L, codes, w):
    """(curl, shortest block length) of an L-bit sequence, L <= 64."""
    k_best = 1
    pi_best = 1
    p = 1
    seeded = 0
    if w > 0 and L >= w:
        t = codes[s & MASK64[w]]
        if t == 1:
            # window already repeat-free: improvements need (k+1)*p > w
            p = w // 2 + 1
        elif t <= 3:
            k_best = t
            seeded = t
            p = w // (t + 1) + 1
        # t == 4 keeps the full scan; the window promises curl >= 4 but not
        # which p achieves the maximum.
    improved = False
    while p <= L // (k_best + 1):
        x = (s ^ (s >> np.uint64(p))) & MASK64[L - p]
        run = (L - p) if x == 0 else _ctz64(x)
        kp = 1 + run // p
        if kp > k_best:
            k_best = kp
            pi_best = p
            improved = True
        p += 1
    if seeded > 0 and not improved:
        pi_best = _window_block(s & MASK64[w], seeded, w)
    if k_best == 1:
        pi_best = 1
    return k_best, pi_best


@njit(cache=True, nogil=True)
def _shr3(a0, a1, a2, p):
    # logical right shift of a 192-bit value by p, 1 <= p <= 191
    if p < 64:
        up = np.uint64(p)
        dn = np.uint64(64 - p)
        return (a0 >> up) | (a1 << dn), (a1 >> up) | (a2 << dn), a2 >> up
    if p == 64:
        return a1, a2, np.uint64(0)
    if p < 128:
        up = np.uint64(p - 64)
        dn = np.uint64(128 - p)
        return (a1 >> up) | (a2 << dn), a2 >> up, np.uint64(0)
    if p == 128:
        return a2, np.uint64(0), np.uint64(0)
    return a2 >> np.uint64(p - 128), np.uint64(0), np.uint64(0)


@njit(cache=True, nogil=True)
def _ctz3(a0, a1, a2, cap):
    if a0 != 0:
        n = _ctz64(a0)
    elif a1 != 0:
        n = 64 + _ctz64(a1)
    elif a2 != 0:
        n = 128 + _ctz64(a2)
    else:
        n = 192
    return n if n < cap else cap


@njit(cache=True, nogil=True)
def cn_3w(a0, a1, a2, L, codes, w):
    """(curl, shortest block length) of an L-bit sequence, L <= 192."""
    k_best = 1
    pi_best = 1
    p = 1
    seeded = 0
    if w > 0 and L >= w:
        t = codes[a0 & MASK64[w]]
        if t == 1:
            p = w // 2 + 1
        elif t <= 3:
            k_best = t
            seeded = t
            p = w // (t + 1) + 1
    improved = False
    while p <= L // (k_best + 1):
        b0, b1, b2 = _shr3(a0, a1, a2, p)
        x0 = a0 ^ b0
        x1 = a1 ^ b1
        x2 = a2 ^ b2
        m = L - p
        # mask the xor down to m bits before finding the first mismatch
        if m < 64:
            x0 &= MASK64[m]
            x1 = np.uint64(0)
            x2 = np.uint64(0)
        elif m < 128:
            x1 &= MASK64[m - 64]
            x2 = np.uint64(0)
        elif m < 192:
            x2 &= MASK64[m - 128]
        run = _ctz3(x0, x1, x2, m)
        kp = 1 + run // p
        if kp > k_best:
            k_best = kp
            pi_best = p
            improved = True
        p += 1
    if seeded > 0 and not improved:
        pi_best = _window_block(a0 & MASK64[w], seeded, w)
    if k_best == 1:
        pi_best = 1
    return k_best, pi_best


@njit(cache=True, nogil=True)
def tail_len_3w(a0, a1, a2, L, codes, w, limit):
    """Number of appends until the curl drops to 1; -1 if limit/width hit."""
    tau = 0
    while True:
        if L <= 64:
            k, _ = cn_word(a0, L, codes, w)
        else:
            k, _ = cn_3w(a0, a1, a2, L, codes, w)
        if k == 1:
            return tau
        if k > 3:
            # the appended value appears nowhere else, so the next curl is 1
            return tau + 1
        if tau >= limit or L >= 192:
            return -1
        a2 = (a2 << U1) | (a1 >> U63)
        a1 = (a1 << U1) | (a0 >> U63)
        a0 = (a0 << U1) | np.uint64(k - 2)
        L += 1
        tau += 1


@njit(cache=True, nogil=True)
def build_codes_range(w, lo, hi, out):
    for s in range(lo, hi):
        k, _ = cn_word(np.uint64(s), w, out[:1], 0)
        out[s] = k if k < 4 else 4


@njit(cache=True, nogil=True)
def cn_all_range(n, lo, hi, codes, w, out_k, out_pi):
    for s in range(lo, hi):
        k, pi = cn_word(np.uint64(s), n, codes, w)
        out_k[s - lo] = k
        out_pi[s - lo] = pi


@njit(cache=True, nogil=True)
def tail_tau_range(n, lo, hi, codes, w, limit, out):
    # out[s - lo] = tail length of s; 255 flags limit/width overflow
    z = np.uint64(0)
    for s in range(lo, hi):
        t = tail_len_3w(np.uint64(s), z, z, n, codes, w, limit)
        out[s - lo] = 255 if t < 0 or t > 254 else t


@njit(cache=True, nogil=True)
def tail_reduce_range(n, lo, hi, codes, w, limit):
    """(max tail, smallest achiever, achiever count) over packed [lo, hi).

    Smallest packed value = lexicographically first sequence.  Returns
    (-1, 0, 0) if any tail hits the step limit or the width cap.
    """
    best_tau = -1
    best_s = np.uint64(0)
    count = 0
    z = np.uint64(0)
    for s in range(lo, hi):
        t = tail_len_3w(np.uint64(s), z, z, n, codes, w, limit)
        if t < 0:
            return -1, np.uint64(0), 0
        if t > best_tau:
            best_tau = t
            best_s = np.uint64(s)
            count = 1
        elif t == best_tau:
            count += 1
    return best_tau, best_s, count


@njit(cache=True, nogil=True)
def class_counts_range(n, lo, hi, codes, w, divs, out):
    """Histogram curl classes over packed [lo, hi).

    out rows: 0 = all sequences, 1 = primitive, 2 = primitive and robust,
    indexed by curl k.  divs holds the proper divisors of n; a sequence is
    imprimitive iff it is fully d-periodic for some proper divisor d.
    Robustness: prepending-closure test via the curl of (s minus its first
    symbol) concatenated with s, length 2n-1.
    """
    for s in range(lo, hi):
        u = np.uint64(s)
        k, _ = cn_word(u, n, codes, w)
        out[0, k] += 1
        primitive = True
        for di in range(divs.shape[0]):
            d = divs[di]
            if (u ^ (u >> np.uint64(d))) & MASK64[n - d] == 0:
                primitive = False
                break
        if not primitive:
            continue
        out[1, k] += 1
        body = u & MASK64[n - 1]
        a0 = (body << np.uint64(n)) | u
        if 2 * n - 1 <= 64:
            k2, _ = cn_word(a0, 2 * n - 1, codes, w)
        else:
            a1 = body >> np.uint64(64 - n)
            k2, _ = cn_3w(a0, a1, np.uint64(0), 2 * n - 1, codes, w)
        if k2 <= k:
            out[2, k] += 1


@njit(cache=True, nogil=True)
def cn1_filter_range(n, lo, hi, codes, w, out):
    m = 0
    for s in range(lo, hi):
        k, _ = cn_word(np.uint64(s), n, codes, w)
        if k == 1:
            out[m] = s
            m += 1
    return m


@njit(cache=True, nogil=True)
def count_a(seqs, n, i, codes, w):
    # members S with curl(S^[i] S) == 1, S running over seqs (curl-1, length n)
    cnt = 0
    for idx in range(seqs.shape[0]):
        s = seqs[idx]
        suf = s & MASK64[i]
        a0 = s
        a1 = np.uint64(0)
        if n + i <= 64:
            a0 |= suf << np.uint64(n)
        else:
            a0 |= suf << np.uint64(n)  # low part; n < 64 here
            a1 = suf >> np.uint64(64 - n)
        k, _ = cn_word(a0, n + i, codes, w) if n + i <= 64 else cn_3w(
            a0, a1, np.uint64(0), n + i, codes, w)
        if k == 1:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def count_b(seqs, n, i, codes, w):
    # members S with curl(S S^[i] S) == 1; length 2n+i can pass 64 bits
    cnt = 0
    for idx in range(seqs.shape[0]):
        s = seqs[idx]
        suf = s & MASK64[i]
        # assemble S . S^[i] . S into (a0, a1): low part first n+i bits
        L = 2 * n + i
        lo_bits = (suf << np.uint64(n)) | s  # S^[i] S, n+i bits
        ln = n + i
        a0 = lo_bits
        a1 = np.uint64(0)
        # place the leading S at bit offset ln
        if ln < 64:
            a0 |= s << np.uint64(ln)
            if ln + n > 64:
                a1 = s >> np.uint64(64 - ln)
        else:
            a1 = s << np.uint64(ln - 64)
        k, _ = cn_3w(a0, a1, np.uint64(0), L, codes, w)
        if k == 1:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def count_e(seqs, n, i, j, codes, w):
    # members S with T = S^[i] S belonging to the b-set at (n+i, j):
    # curl(T T^[j] T) == 1, total length 2(n+i)+j (fits 192 bits for n<=24)
    cnt = 0
    m = n + i
    for idx in range(seqs.shape[0]):
        s = seqs[idx]
        t = ((s & MASK64[i]) << np.uint64(n)) | s  # m bits
        tsuf = t & MASK64[j]
        # W = T . T^[j] . T over (a0, a1, a2)
        a0 = t
        a1 = np.uint64(0)
        a2 = np.uint64(0)
        # or-in tsuf at offset m, then t at offset m+j
        off = m
        if off < 64:
            a0 |= tsuf << np.uint64(off)
            if off + j > 64:
                a1 |= tsuf >> np.uint64(64 - off)
        else:
            a1 |= tsuf << np.uint64(off - 64)
        off = m + j
        if off < 64:
            a0 |= t << np.uint64(off)
            if off + m > 64:
                a1 |= t >> np.uint64(64 - off)
        elif off < 128:
            a1 |= t << np.uint64(off - 64)
            if off - 64 + m > 64:
                a2 |= t >> np.uint64(128 - off)
        else:
            a2 |= t << np.uint64(off - 128)
        k, _ = cn_3w(a0, a1, a2, 2 * m + j, codes, w)
        if k == 1:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def essential_count_range(n, lo, hi, codes, w):
    """Sequences whose curl strictly drops when the first symbol is removed.

    Equivalent test, avoiding a second full scan: the curl k must only be
    witnessed by blocks whose k-fold repeat spans the whole sequence, i.e.
    no p <= (n-1)//k has a p-periodic suffix of length >= k*p.
    """
    cnt = 0
    for s in range(lo, hi):
        u = np.uint64(s)
        k, _ = cn_word(u, n, codes, w)
        if k == 1:
            continue
        ok = True
        for p in range(1, (n - 1) // k + 1):
            x = (u ^ (u >> np.uint64(p))) & MASK64[n - p]
            run = (n - p) if x == 0 else _ctz64(x)
            if run + p >= k * p:
                ok = False
                break
        if ok:
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def tail_reduce_seqs(seqs, n, codes, w, limit):
    # tail_reduce_range over an explicit candidate array (any order)
    best_tau = -1
    best_s = np.uint64(0)
    count = 0
    z = np.uint64(0)
    for i in range(seqs.size):
        s = seqs[i]
        t = tail_len_3w(s, z, z, n, codes, w, limit)
        if t < 0:
            return -1, np.uint64(0), 0
        if t > best_tau:
            best_tau = t
            best_s = s
            count = 1
        elif t == best_tau:
            count += 1
            if s < best_s:
                best_s = s
    return best_tau, best_s, count
