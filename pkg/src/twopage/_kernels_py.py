"""Pure-Python versions of the quadratic spine kernels (fallback for ``_kernels``)."""


def _alternate(a, b, c, d):
    if a > b:
        a, b = b, a
    if c > d:
        c, d = d, c
    return (a < c < b < d) or (c < a < d < b)


def crossing_pairs(pos, eu, ev, page):
    """Index pairs (i, j), i < j, of same-page edges whose endpoints alternate.

    ``pos`` maps vertex -> spine position; ``eu``/``ev``/``page`` are parallel
    sequences describing the edges.
    """
    m = len(eu)
    ends = []
    for i in range(m):
        a, b = pos[eu[i]], pos[ev[i]]
        ends.append((a, b) if a < b else (b, a))
    out = []
    for i in range(m):
        a, b = ends[i]
        for j in range(i + 1, m):
            if page[i] != page[j]:
                continue
            c, d = ends[j]
            if (a < c < b < d) or (c < a < d < b):
                out.append((i, j))
    return out


def two_colour_conflicts(pos, eu, ev):
    """Two-colour the conflict graph of edges under a spine order.

    Returns a list of colours (0/1) per edge, or None if the conflict graph is
    not bipartite. Colouring starts each component at its smallest edge index
    with colour 0, so the result is deterministic.
    """
    m = len(eu)
    ends = []
    for i in range(m):
        a, b = pos[eu[i]], pos[ev[i]]
        ends.append((a, b) if a < b else (b, a))
    adj = [[] for _ in range(m)]
    for i in range(m):
        a, b = ends[i]
        for j in range(i + 1, m):
            c, d = ends[j]
            if (a < c < b < d) or (c < a < d < b):
                adj[i].append(j)
                adj[j].append(i)
    colour = [-1] * m
    for s in range(m):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if colour[y] == -1:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour
