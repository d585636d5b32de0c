"""Pure-Python signature reduction; used when the compiled kernel is absent."""


def reduce_signature(classes, eps, phi, tail_plus):
    """Cancel (+, -) pairs in the i-signature of a wall.

    ``classes`` lists column classes left to right; ``eps[c]`` and ``phi[c]``
    are the minus and plus counts of class ``c``; the virtual tail left of
    every column contributes ``tail_plus`` pluses.  Returns
    ``(minus_count, plus_count, leftmost_plus_owner, rightmost_minus_owner)``
    with owner -1 for the tail and -2 for none.
    """
    owners = []
    counts = []
    if tail_plus:
        owners.append(-1)
        counts.append(tail_plus)
    n_minus = 0
    minus_owner = -2
    for k, c in enumerate(classes):
        m = eps[c]
        while m and counts:
            take = min(m, counts[-1])
            m -= take
            counts[-1] -= take
            if not counts[-1]:
                counts.pop()
                owners.pop()
        if m:
            n_minus += m
            minus_owner = k
        p = phi[c]
        if p:
            owners.append(k)
            counts.append(p)
    return n_minus, sum(counts), (owners[0] if owners else -2), minus_owner
