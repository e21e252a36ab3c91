"""Pure-Python twin of the compiled subset-enumeration kernel."""


def cut_counts(n, us, vs, lo, hi, prune=False):
    """Per-size counts of disconnecting edge subsets among masks ``lo..hi-1``."""
    m = len(us)
    if hi > (1 << m):
        raise ValueError("mask range exceeds 2**m")
    counts = [0] * (m + 1)
    edges = list(zip(us, vs))
    corank = m - n + 1
    for mask in range(lo, hi):
        k = bin(mask).count("1")
        if prune and k > corank:
            counts[k] += 1
            continue
        parent = list(range(n))
        comps = n
        for j, (a, b) in enumerate(edges):
            if comps == 1:
                break
            if (mask >> j) & 1:
                continue
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                comps -= 1
        if comps > 1:
            counts[k] += 1
    return counts


def _connected_without(n, edges, mask):
    parent = list(range(n))
    comps = n
    for j, (a, b) in enumerate(edges):
        if comps == 1:
            break
        if (mask >> j) & 1:
            continue
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            comps -= 1
    return comps <= 1


def noncut_sums(n, us, vs, weights, kmax):
    """Per-size sums of weight products over removal sets that keep the graph connected."""
    m = len(us)
    kmax = min(kmax, m)
    edges = list(zip(us, vs))
    sums = [0] * (kmax + 1)
    sums[0] = 1
    # (mask, product, next edge); supersets of a disconnecting set are skipped
    stack = [(0, 1, 0)]
    while stack:
        mask, p, start = stack.pop()
        depth = bin(mask).count("1")
        if depth == kmax:
            continue
        for j in range(start, m):
            nxt = mask | (1 << j)
            if _connected_without(n, edges, nxt):
                q = p * weights[j]
                sums[depth + 1] += q
                stack.append((nxt, q, j + 1))
    return sums
