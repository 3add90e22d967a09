"""Hot loops, each with a numba path and a numpy fallback.

The public names at the bottom dispatch on :data:`semiexp._jit.HAVE_NUMBA`.
Both variants stay importable (``*_nb`` / ``*_np``) so tests can compare them.
Tables passed in here are plain ``int64`` arrays; the adjoined identity of
S^I is the index ``n`` in an ``(n+1) x (n+1)`` extended table.
"""
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ._jit import HAVE_NUMBA, njit

CONTENT, KR, CONNECTED = 0, 1, 2


# ---------------------------------------------------------------- associativity

@njit
def assoc_witness_nb(T):
    n = T.shape[0]
    out = np.full(3, -1, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            ij = T[i, j]
            for k in range(n):
                if T[ij, k] != T[i, T[j, k]]:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return out
    return out


def assoc_witness_np(T):
    n = T.shape[0]
    # chunk over i so memory stays O(chunk * n^2)
    step = max(1, 2_000_000 // max(1, n * n))
    for lo in range(0, n, step):
        rows = T[lo:lo + step]
        left = T[rows]                      # (ij)k
        right = rows[:, T]                  # i(jk)
        bad = left != right
        if bad.any():
            i, j, k = np.unravel_index(np.argmax(bad), bad.shape)
            return np.array([lo + i, j, k], dtype=np.int64)
    return np.full(3, -1, dtype=np.int64)


@njit
def light_witness_nb(T, gens):
    # (x g) y == x (g y) for all x, y and every generator g
    n = T.shape[0]
    out = np.full(3, -1, dtype=np.int64)
    for x in range(n):
        for gi in range(gens.shape[0]):
            g = gens[gi]
            xg = T[x, g]
            for y in range(n):
                if T[xg, y] != T[x, T[g, y]]:
                    out[0] = x
                    out[1] = g
                    out[2] = y
                    return out
    return out


def light_witness_np(T, gens):
    for g in gens:
        bad = T[T[:, g]] != T[:, T[g]]
        if bad.any():
            x, y = np.unravel_index(np.argmax(bad), bad.shape)
            return np.array([x, g, y], dtype=np.int64)
    return np.full(3, -1, dtype=np.int64)


def batch_associative_np(tables):
    """Boolean mask over a stack of tables of shape (b, n, n)."""
    b, n, _ = tables.shape
    idx = np.arange(b)[:, None, None, None]
    i = np.arange(n)[None, :, None, None]
    k = np.arange(n)[None, None, None, :]
    ij = tables[:, :, :, None]
    jk = tables[:, None, :, :]
    left = tables[idx, ij, k]
    right = tables[idx, i, jk]
    return (left == right).reshape(b, -1).all(axis=1)


@njit
def batch_associative_nb(tables):
    b, n, _ = tables.shape
    out = np.ones(b, dtype=np.bool_)
    for t in range(b):
        T = tables[t]
        ok = True
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if T[T[i, j], k] != T[i, T[j, k]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        out[t] = ok
    return out


# ---------------------------------------------------------------- powers

@njit
def power_tables_nb(T):
    """Per element: index, period, s^omega and s^(omega-1)."""
    n = T.shape[0]
    index = np.empty(n, dtype=np.int64)
    period = np.empty(n, dtype=np.int64)
    omega = np.empty(n, dtype=np.int64)
    omega_m1 = np.empty(n, dtype=np.int64)
    seen = np.empty(n, dtype=np.int64)
    powers = np.empty(n + 2, dtype=np.int64)
    for s in range(n):
        seen[:] = 0
        x = s
        k = 1
        while seen[x] == 0:
            seen[x] = k
            powers[k] = x
            x = T[x, s]
            k += 1
        i = seen[x]
        p = k - i
        index[s] = i
        period[s] = p
        # the idempotent is s^m with m a multiple of p and m >= i
        m = ((i + p - 1) // p) * p
        omega[s] = powers[i + (m - i) % p]
        # s^(omega-1): exponent congruent to -1 mod p, at least max(i, 1)
        m1 = m - 1
        while m1 < i:
            m1 += p
        omega_m1[s] = powers[i + (m1 - i) % p]
    return index, period, omega, omega_m1


def power_tables_np(T):
    n = T.shape[0]
    # powers[k-1] = s^k for every s at once
    powers = np.empty((n + 1, n), dtype=np.int64)
    powers[0] = np.arange(n)
    for k in range(1, n + 1):
        powers[k] = T[powers[k - 1], np.arange(n)]
    index = np.empty(n, dtype=np.int64)
    period = np.empty(n, dtype=np.int64)
    for s in range(n):
        first = {}
        for k in range(n + 1):
            x = powers[k, s]
            if x in first:
                index[s] = first[x] + 1
                period[s] = k - first[x]
                break
            first[x] = k
    m = -(-index // period) * period
    m1 = m - 1
    m1 = np.where(m1 < index, m1 + period, m1)
    cols = np.arange(n)
    return index, period, powers[m - 1, cols], powers[m1 - 1, cols]


# ---------------------------------------------------------------- Cayley graph

@njit
def cayley_edges_nb(E, gens):
    """Edges of the two-sided Cayley graph, sorted by (src, label, dst).

    Vertex (s, t) has id s * m + t where m = n + 1.
    """
    m = E.shape[0]
    na = gens.shape[0]
    # each (s1, a, t2) yields exactly one edge, with t1 = g t2
    count = m * na * m
    src = np.empty(count, dtype=np.int64)
    lab = np.empty(count, dtype=np.int64)
    dst = np.empty(count, dtype=np.int64)
    c = 0
    for s1 in range(m):
        for t1 in range(m):
            for a in range(na):
                g = gens[a]
                s2 = E[s1, g]
                for t2 in range(m):
                    if E[g, t2] == t1:
                        src[c] = s1 * m + t1
                        lab[c] = a
                        dst[c] = s2 * m + t2
                        c += 1
    return src[:c], lab[:c], dst[:c]


def cayley_edges_np(E, gens):
    m = E.shape[0]
    s1 = np.arange(m)
    parts = []
    for a, g in enumerate(gens):
        t2 = np.arange(m)
        t1 = E[g, t2]
        S1, K = np.meshgrid(s1, np.arange(m), indexing="ij")
        src = S1 * m + t1[K]
        dst = E[S1, g] * m + t2[K]
        parts.append((src.ravel(), np.full(src.size, a), dst.ravel()))
    src = np.concatenate([p[0] for p in parts])
    lab = np.concatenate([p[1] for p in parts])
    dst = np.concatenate([p[2] for p in parts])
    order = np.lexsort((dst, lab, src))
    return src[order], lab[order], dst[order]


@njit
def tarjan_nb(nv, offsets, targets):
    """Iterative Tarjan; returns a raw component label per vertex."""
    index = np.full(nv, -1, dtype=np.int64)
    low = np.zeros(nv, dtype=np.int64)
    onstack = np.zeros(nv, dtype=np.bool_)
    comp = np.full(nv, -1, dtype=np.int64)
    stack = np.empty(nv, dtype=np.int64)
    sp = 0
    call_v = np.empty(nv, dtype=np.int64)
    call_e = np.empty(nv, dtype=np.int64)
    counter = 0
    ncomp = 0
    for root in range(nv):
        if index[root] != -1:
            continue
        depth = 0
        call_v[0] = root
        call_e[0] = offsets[root]
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = True
        while depth >= 0:
            v = call_v[depth]
            e = call_e[depth]
            if e < offsets[v + 1]:
                call_e[depth] = e + 1
                w = targets[e]
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = True
                    depth += 1
                    call_v[depth] = w
                    call_e[depth] = offsets[w]
                elif onstack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            else:
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                depth -= 1
                if depth >= 0:
                    u = call_v[depth]
                    if low[v] < low[u]:
                        low[u] = low[v]
    return comp


def scc_labels_np(nv, src, dst):
    adj = csr_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(nv, nv))
    _, labels = connected_components(adj, directed=True, connection="strong")
    return labels


def scc_labels_nb(nv, src, dst):
    order = np.argsort(src, kind="stable")
    targets = dst[order]
    offsets = np.zeros(nv + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=nv), out=offsets[1:])
    return tarjan_nb(nv, offsets, targets)


def canonical_labels(raw):
    """Renumber components by their smallest vertex id."""
    _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(first.size)
    return rank[inverse]


# ---------------------------------------------------------------- word paths

@njit
def path_vertices_nb(E, gens, word):
    m = E.shape[0]
    k = word.shape[0]
    ident = m - 1
    pre = np.empty(k + 1, dtype=np.int64)
    suf = np.empty(k + 1, dtype=np.int64)
    pre[0] = ident
    for i in range(k):
        pre[i + 1] = E[pre[i], gens[word[i]]]
    suf[k] = ident
    for i in range(k - 1, -1, -1):
        suf[i] = E[gens[word[i]], suf[i + 1]]
    return pre * m + suf


def path_vertices_np(E, gens, word):
    m = E.shape[0]
    k = word.shape[0]
    pre = np.empty(k + 1, dtype=np.int64)
    suf = np.empty(k + 1, dtype=np.int64)
    pre[0] = suf[k] = m - 1
    g = gens[word]
    for i in range(k):
        pre[i + 1] = E[pre[i], g[i]]
    for i in range(k - 1, -1, -1):
        suf[i] = E[g[i], suf[i + 1]]
    return pre * m + suf


@njit
def path_edge_ids_nb(E, gens, word, keys):
    m = E.shape[0]
    na = gens.shape[0]
    verts = path_vertices_nb(E, gens, word)
    k = word.shape[0]
    ids = np.empty(k, dtype=np.int64)
    for i in range(k):
        key = (verts[i] * na + word[i]) * m + verts[i + 1] % m
        ids[i] = np.searchsorted(keys, key)
    return verts, ids


def path_edge_ids_np(E, gens, word, keys):
    m = E.shape[0]
    na = gens.shape[0]
    verts = path_vertices_np(E, gens, word)
    q = (verts[:-1] * na + word) * m + verts[1:] % m
    return verts, np.searchsorted(keys, q)


@njit
def markers_nb(E, gens, word, keys, edge_transition, scc, kind):
    verts, ids = path_edge_ids_nb(E, gens, word, keys)
    if kind == 2:
        vals = scc[verts]
    elif kind == 1:
        vals = ids[edge_transition[ids]]
    else:
        vals = ids
    return np.unique(vals)


def markers_np(E, gens, word, keys, edge_transition, scc, kind):
    verts, ids = path_edge_ids_np(E, gens, word, keys)
    if kind == CONNECTED:
        return np.unique(scc[verts])
    if kind == KR:
        return np.unique(ids[edge_transition[ids]])
    return np.unique(ids)


# ---------------------------------------------------------------- equidivisibility

@njit
def equidiv_witness_nb(E, n, mode):
    """First (u, v, x, y) with uv == xy violating the condition.

    mode 0: plain equidivisibility (left OR right pattern).
    mode 1: both patterns with independent witnesses (McKnight-Storey).
    """
    m = E.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    # bucket pairs by product value
    counts = np.zeros(n + 1, dtype=np.int64)
    for u in range(n):
        for v in range(n):
            counts[E[u, v] + 1] += 1
    start = np.cumsum(counts)
    fill = start[:n].copy()
    pairs = np.empty((n * n, 2), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            p = E[u, v]
            pairs[fill[p], 0] = u
            pairs[fill[p], 1] = v
            fill[p] += 1
    for u in range(n):
        for v in range(n):
            p = E[u, v]
            for q in range(start[p], start[p + 1]):
                x = pairs[q, 0]
                y = pairs[q, 1]
                left = False
                for t in range(m):
                    if E[u, t] == x and E[t, y] == v:
                        left = True
                        break
                right = False
                for t in range(m):
                    if E[x, t] == u and E[t, v] == y:
                        right = True
                        break
                ok = (left and right) if mode == 1 else (left or right)
                if not ok:
                    out[0] = u
                    out[1] = v
                    out[2] = x
                    out[3] = y
                    return out
    return out


def equidiv_witness_np(E, n, mode):
    S = E[:n, :n]
    for u in range(n):
        for v in range(n):
            xs, ys = np.nonzero(S == S[u, v])
            # left pattern: u t = x and t y = v, over t in S^I
            left = ((E[u][None, :] == xs[:, None]) & (E[:, ys].T == v)).any(axis=1)
            right = ((E[xs] == u) & (E[:, v][None, :] == ys[:, None])).any(axis=1)
            ok = (left & right) if mode == 1 else (left | right)
            if not ok.all():
                q = np.argmin(ok)
                return np.array([u, v, xs[q], ys[q]], dtype=np.int64)
    return np.full(4, -1, dtype=np.int64)


# ---------------------------------------------------------------- dispatch

if HAVE_NUMBA:
    assoc_witness = assoc_witness_nb
    light_witness = light_witness_nb
    batch_associative = batch_associative_nb
    power_tables = power_tables_nb
    cayley_edges = cayley_edges_nb
    scc_labels = scc_labels_nb
    path_vertices = path_vertices_nb
    path_edge_ids = path_edge_ids_nb
    markers = markers_nb
    equidiv_witness = equidiv_witness_nb
else:
    assoc_witness = assoc_witness_np
    light_witness = light_witness_np
    batch_associative = batch_associative_np
    power_tables = power_tables_np
    cayley_edges = cayley_edges_np
    scc_labels = scc_labels_np
    path_vertices = path_vertices_np
    path_edge_ids = path_edge_ids_np
    markers = markers_np
    equidiv_witness = equidiv_witness_np
