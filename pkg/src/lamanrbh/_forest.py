"""Array kernels for the shrinking two-color forest and the hierarchy build.

State layout, ``c`` is the color (0 red, 1 black):

* ``hdr[c, v]``        header id of the tree holding ``v``
* ``hsize[c, h]``      vertex count of tree ``h``
* ``hhead[c, h]``      first vertex of ``h``'s member list
* ``vnext/vprev[c, v]`` doubly linked member lists
* ``ahead[c, v]``      first live edge end at ``v``; end ``2e`` sits at
  ``eu[e]``, end ``2e + 1`` at ``ev[e]``
* ``anext/aprev[s]``   doubly linked incidence lists over edge ends
* ``nhdr[c]``          next unused header id

``counters`` is ``[edge_tests, relabels, splits]``.
"""

import numpy as np

from ._jit import njit

EDGE_TESTS = 0
RELABELS = 1
SPLITS = 2

BUILD_OK = 0
BUILD_LEAF_RULE = 1
BUILD_ROOT_RULE = 2


@njit(inline=True)
def end_vertex(s, eu, ev):
    if s & 1:
        return ev[s >> 1]
    return eu[s >> 1]


@njit(inline=True)
def list_push(c, h, v, hhead, vnext, vprev):
    first = hhead[c, h]
    vprev[c, v] = -1
    vnext[c, v] = first
    if first != -1:
        vprev[c, first] = v
    hhead[c, h] = v


@njit(inline=True)
def list_remove(c, h, v, hhead, vnext, vprev):
    p = vprev[c, v]
    q = vnext[c, v]
    if p == -1:
        hhead[c, h] = q
    else:
        vnext[c, p] = q
    if q != -1:
        vprev[c, q] = p
    vnext[c, v] = -1
    vprev[c, v] = -1


@njit(inline=True)
def adj_push(c, s, x, ahead, anext, aprev):
    first = ahead[c, x]
    aprev[s] = -1
    anext[s] = first
    if first != -1:
        aprev[first] = s
    ahead[c, x] = s


@njit(inline=True)
def adj_remove(c, s, x, ahead, anext, aprev):
    p = aprev[s]
    q = anext[s]
    if p == -1:
        ahead[c, x] = q
    else:
        anext[p] = q
    if q != -1:
        aprev[q] = p
    anext[s] = -2
    aprev[s] = -2


@njit
def init_state(n, eu, ev, ecolor):
    m = eu.shape[0]
    cap = n + 2
    hdr = np.full((2, n), -1, dtype=np.int64)
    hsize = np.zeros((2, cap), dtype=np.int64)
    hhead = np.full((2, cap), -1, dtype=np.int64)
    vnext = np.full((2, n), -1, dtype=np.int64)
    vprev = np.full((2, n), -1, dtype=np.int64)
    ahead = np.full((2, n), -1, dtype=np.int64)
    anext = np.full(2 * m, -2, dtype=np.int64)
    aprev = np.full(2 * m, -2, dtype=np.int64)
    nhdr = np.zeros(2, dtype=np.int64)
    for e in range(m - 1, -1, -1):
        c = ecolor[e]
        adj_push(c, 2 * e + 1, ev[e], ahead, anext, aprev)
        adj_push(c, 2 * e, eu[e], ahead, anext, aprev)
    return hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev, nhdr


@njit
def label_components(c, n, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, nhdr):
    """Give each color-``c`` tree its own header, in order of smallest vertex."""
    stack = np.empty(n, dtype=np.int64)
    for r in range(n - 1, -1, -1):
        hdr[c, r] = -1
    for r in range(n):
        if hdr[c, r] != -1:
            continue
        h = nhdr[c]
        nhdr[c] += 1
        top = 0
        stack[top] = r
        top += 1
        hdr[c, r] = h
        members = 0
        while top > 0:
            top -= 1
            x = stack[top]
            list_push(c, h, x, hhead, vnext, vprev)
            members += 1
            s = ahead[c, x]
            while s != -1:
                y = end_vertex(s ^ 1, eu, ev)
                if hdr[c, y] == -1:
                    hdr[c, y] = h
                    stack[top] = y
                    top += 1
                s = anext[s]
        hsize[c, h] = members


@njit(inline=True)
def _dfs_step(side, c, eu, ev, ahead, anext, stk_v, stk_s, stk_pe, top, disc, ndisc):
    # advance one traversal until it finds a new vertex; False once exhausted
    while top[side] > 0:
        t = top[side] - 1
        s = stk_s[side, t]
        if s == -1:
            top[side] = t
            continue
        stk_s[side, t] = anext[s]
        e = s >> 1
        if e == stk_pe[side, t]:
            continue
        w = end_vertex(s ^ 1, eu, ev)
        stk_v[side, t + 1] = w
        stk_s[side, t + 1] = ahead[c, w]
        stk_pe[side, t + 1] = e
        top[side] = t + 2
        disc[side, ndisc[side]] = w
        ndisc[side] += 1
        return True
    return False


@njit(inline=True)
def split_edge(
    c, e, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev, nhdr,
    stk_v, stk_s, stk_pe, top, disc, ndisc, counters,
):
    """Delete live edge ``e`` from color ``c`` and split its tree.

    The smaller side (the ``eu[e]`` side on ties) gets a fresh header and is
    relabeled.  Two depth-first traversals advance in lockstep so the work is
    proportional to the smaller side.  Returns the new header id, or -1 if
    ``e`` was not live / its endpoints were not in one tree.
    """
    u = eu[e]
    v = ev[e]
    if anext[2 * e] == -2 or hdr[c, u] != hdr[c, v]:
        return -1
    adj_remove(c, 2 * e, u, ahead, anext, aprev)
    adj_remove(c, 2 * e + 1, v, ahead, anext, aprev)
    old = hdr[c, u]
    for side in range(2):
        r = u if side == 0 else v
        stk_v[side, 0] = r
        stk_s[side, 0] = ahead[c, r]
        stk_pe[side, 0] = -1
        top[side] = 1
        disc[side, 0] = r
        ndisc[side] = 1
    small = -1
    while small == -1:
        if not _dfs_step(0, c, eu, ev, ahead, anext, stk_v, stk_s, stk_pe, top, disc, ndisc):
            small = 0
        elif not _dfs_step(1, c, eu, ev, ahead, anext, stk_v, stk_s, stk_pe, top, disc, ndisc):
            small = 1
    h = nhdr[c]
    nhdr[c] += 1
    k = ndisc[small]
    for i in range(k):
        x = disc[small, i]
        list_remove(c, old, x, hhead, vnext, vprev)
        list_push(c, h, x, hhead, vnext, vprev)
        hdr[c, x] = h
    hsize[c, h] = k
    hsize[c, old] -= k
    counters[RELABELS] += k
    counters[SPLITS] += 1
    return h


@njit(inline=True)
def crossing_scan(
    c, flist, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev, nhdr,
    stk_v, stk_s, stk_pe, top, disc, ndisc, counters, lbuf, newh,
):
    """Find color-``c`` edges joining different trees of the other color.

    ``flist`` holds the other color's headers for this node.  Every tree but
    one of maximum size (smallest id on ties) is scanned.  Each crossing edge
    is split off as soon as it is found.  Fills ``lbuf`` with the crossing
    edges and ``newh`` with the headers created; returns both counts.
    """
    fc = 1 - c
    k = flist.shape[0]
    jmax = 0
    for i in range(1, k):
        a = flist[i]
        b = flist[jmax]
        if hsize[fc, a] > hsize[fc, b] or (hsize[fc, a] == hsize[fc, b] and a < b):
            jmax = i
    nl = 0
    nnew = 0
    for i in range(k):
        if i == jmax:
            continue
        h = flist[i]
        x = hhead[fc, h]
        while x != -1:
            s = ahead[c, x]
            while s != -1:
                nxt = anext[s]
                counters[EDGE_TESTS] += 1
                y = end_vertex(s ^ 1, eu, ev)
                if hdr[fc, y] != h:
                    e = s >> 1
                    lbuf[nl] = e
                    nl += 1
                    newh[nnew] = split_edge(
                        c, e, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev,
                        nhdr, stk_v, stk_s, stk_pe, top, disc, ndisc, counters,
                    )
                    nnew += 1
                s = nxt
            x = vnext[fc, x]
    return nl, nnew


@njit(inline=True)
def _new_node(parent, color, node_parent, node_color, nnodes):
    v = nnodes[0]
    nnodes[0] += 1
    node_parent[v] = parent
    node_color[v] = color
    return v


@njit(inline=True)
def _resolve(c, h, node, pend_head, pend_next, beta):
    s = pend_head[c, h]
    while s != -1:
        beta[s] = node
        s = pend_next[s]
    pend_head[c, h] = -1


@njit
def build_kernel(n, eu, ev, ecolor, counters):
    """Expand the hierarchy breadth-first from the root.

    Returns ``(status, bad_node, nnodes, node_parent, node_leaf, node_color, beta, bad_vertices)``;
    ``beta[2e + side]`` is the hierarchy node for endpoint ``side`` of edge
    ``e``.  Node ids are creation order, so parents precede children.
    """
    m = eu.shape[0]
    hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev, nhdr = init_state(n, eu, ev, ecolor)
    # red: one tree holding every vertex
    nhdr[0] = 1
    for v in range(n - 1, -1, -1):
        hdr[0, v] = 0
        list_push(0, 0, v, hhead, vnext, vprev)
    hsize[0, 0] = n
    label_components(1, n, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, nhdr)

    cap_nodes = 3 * n + 3
    node_parent = np.full(cap_nodes, -1, dtype=np.int64)
    node_leaf = np.full(cap_nodes, -1, dtype=np.int64)
    node_color = np.full(cap_nodes, -1, dtype=np.int8)
    nnodes = np.zeros(1, dtype=np.int64)
    beta = np.full(2 * m, -1, dtype=np.int64)
    pend_head = np.full((2, n + 2), -1, dtype=np.int64)
    pend_next = np.full(2 * m, -1, dtype=np.int64)

    task_node = np.empty(cap_nodes, dtype=np.int64)
    task_color = np.empty(cap_nodes, dtype=np.int64)
    task_tree = np.empty(cap_nodes, dtype=np.int64)
    task_fstart = np.empty(cap_nodes, dtype=np.int64)
    task_flen = np.empty(cap_nodes, dtype=np.int64)
    fbuf = np.empty(cap_nodes + n + 2, dtype=np.int64)

    stk_v = np.empty((2, n), dtype=np.int64)
    stk_s = np.empty((2, n), dtype=np.int64)
    stk_pe = np.empty((2, n), dtype=np.int64)
    top = np.zeros(2, dtype=np.int64)
    disc = np.empty((2, n), dtype=np.int64)
    ndisc = np.zeros(2, dtype=np.int64)
    lbuf = np.empty(max(m, 1), dtype=np.int64)
    newh = np.empty(max(m, 1) + 1, dtype=np.int64)
    hidx = np.zeros((2, n + 2), dtype=np.int64)
    child_of = np.empty(n + 2, dtype=np.int64)
    gcount = np.zeros(n + 2, dtype=np.int64)
    gstart = np.zeros(n + 3, dtype=np.int64)

    root = _new_node(-1, -1, node_parent, node_color, nnodes)
    nblack = nhdr[1]
    if nblack != 2:
        return BUILD_ROOT_RULE, root, nnodes[0], node_parent, node_leaf, node_color, beta, lbuf[:0].copy()
    for i in range(nblack):
        fbuf[i] = i
    fused = nblack
    task_node[0] = root
    task_color[0] = 0
    task_tree[0] = 0
    task_fstart[0] = 0
    task_flen[0] = nblack
    ntask = 1
    it = 0
    while it < ntask:
        v = task_node[it]
        c = task_color[it]
        hs = task_tree[it]
        flist = fbuf[task_fstart[it]:task_fstart[it] + task_flen[it]]
        it += 1
        fc = 1 - c
        k = flist.shape[0]
        if hsize[c, hs] == 1:
            h = flist[0]
            leaf = _new_node(v, -1, node_parent, node_color, nnodes)
            node_leaf[leaf] = hhead[fc, h]
            _resolve(fc, h, leaf, pend_head, pend_next, beta)
            continue
        if k == 1:
            bad = np.empty(hsize[c, hs], dtype=np.int64)
            x = hhead[c, hs]
            i = 0
            while x != -1:
                bad[i] = x
                i += 1
                x = vnext[c, x]
            return BUILD_LEAF_RULE, v, nnodes[0], node_parent, node_leaf, node_color, beta, np.sort(bad)
        for i in range(k):
            h = flist[i]
            child = _new_node(v, fc, node_parent, node_color, nnodes)
            child_of[i] = child
            hidx[fc, h] = i
            gcount[i] = 0
            _resolve(fc, h, child, pend_head, pend_next, beta)

        nl, nnew = crossing_scan(
            c, flist, eu, ev, hdr, hsize, hhead, vnext, vprev, ahead, anext, aprev, nhdr,
            stk_v, stk_s, stk_pe, top, disc, ndisc, counters, lbuf, newh,
        )
        # group the surviving color-c trees by the other-color tree they sit in
        newh[nnew] = hs
        for j in range(nnew + 1):
            sh = newh[j]
            gcount[hidx[fc, hdr[fc, hhead[c, sh]]]] += 1
        gstart[0] = fused
        for i in range(k):
            gstart[i + 1] = gstart[i] + gcount[i]
            gcount[i] = 0
        for j in range(nnew + 1):
            sh = newh[j]
            i = hidx[fc, hdr[fc, hhead[c, sh]]]
            fbuf[gstart[i] + gcount[i]] = sh
            gcount[i] += 1
        for i in range(k):
            task_node[ntask] = child_of[i]
            task_color[ntask] = fc
            task_tree[ntask] = flist[i]
            task_fstart[ntask] = gstart[i]
            task_flen[ntask] = gcount[i]
            ntask += 1
        fused = gstart[k]
        # crossing edges land on the grandchildren, created one level down
        for j in range(nl):
            e = lbuf[j]
            for side in range(2):
                x = eu[e] if side == 0 else ev[e]
                slot = 2 * e + side
                h = hdr[c, x]
                pend_next[slot] = pend_head[c, h]
                pend_head[c, h] = slot
    return BUILD_OK, -1, nnodes[0], node_parent, node_leaf, node_color, beta, lbuf[:0].copy()


@njit
def canonical_order(nnodes, node_parent, node_leaf):
    """Breadth-first order with children sorted by their smallest leaf vertex."""
    big = np.iinfo(np.int64).max
    minv = np.full(nnodes, big, dtype=np.int64)
    for x in range(nnodes - 1, -1, -1):
        if node_leaf[x] != -1:
            minv[x] = node_leaf[x]
        p = node_parent[x]
        if p != -1 and minv[x] < minv[p]:
            minv[p] = minv[x]
    count = np.zeros(nnodes + 1, dtype=np.int64)
    for x in range(1, nnodes):
        count[node_parent[x] + 1] += 1
    for i in range(nnodes):
        count[i + 1] += count[i]
    kids = np.empty(max(nnodes - 1, 1), dtype=np.int64)
    fill = count[:-1].copy()
    for x in range(1, nnodes):
        p = node_parent[x]
        kids[fill[p]] = x
        fill[p] += 1
    order = np.empty(nnodes, dtype=np.int64)
    order[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = order[head]
        head += 1
        a = count[x]
        b = count[x + 1]
        seg = kids[a:b]
        keys = minv[seg]
        srt = np.argsort(keys, kind="mergesort")
        for i in range(b - a):
            order[tail] = seg[srt[i]]
            tail += 1
    return order
