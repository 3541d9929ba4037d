"""Pure-Python hot kernels. Same signatures as the compiled ``_ckernels`` module.

State sets are Python ints used as bitsets.
"""


def accepting_lengths(n, indptr, indices, initial, finals, upto):
    """Flag every length ``x <= upto`` at which a walk from ``initial`` sits on a final.

    ``indptr``/``indices`` hold the successor lists in CSR layout, ``finals``
    is a byte per state.  Returns a bytearray of ``upto + 1`` zero/one flags.
    """
    succ = []
    for u in range(n):
        mask = 0
        for k in range(indptr[u], indptr[u + 1]):
            mask |= 1 << indices[k]
        succ.append(mask)
    final_mask = 0
    for u in range(n):
        if finals[u]:
            final_mask |= 1 << u

    out = bytearray(upto + 1)
    cur = 1 << initial
    for x in range(upto + 1):
        if cur & final_mask:
            out[x] = 1
        if x == upto:
            break
        nxt = 0
        m = cur
        while m:
            low = m & -m
            nxt |= succ[low.bit_length() - 1]
            m ^= low
        if not nxt:
            break
        cur = nxt
    return out


def closed_walk_lengths(n, adj, maxlen):
    """Lengths ``j <= maxlen`` for which the j-th boolean power of ``adj`` has a true diagonal.

    ``adj`` is a row-major n*n sequence of zero/one bytes.
    """
    rows = []
    for i in range(n):
        mask = 0
        for j in range(n):
            if adj[i * n + j]:
                mask |= 1 << j
        rows.append(mask)

    found = []
    power = list(rows)
    for length in range(1, maxlen + 1):
        if any(power[i] >> i & 1 for i in range(n)):
            found.append(length)
        if length == maxlen:
            break
        nxt = []
        for i in range(n):
            acc = 0
            m = power[i]
            while m:
                low = m & -m
                acc |= rows[low.bit_length() - 1]
                m ^= low
            nxt.append(acc)
        power = nxt
    return found
