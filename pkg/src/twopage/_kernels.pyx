# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the quadratic spine kernels."""

from libc.stdlib cimport malloc, free


cdef inline bint _alt(int a, int b, int c, int d) nogil:
    return (a < c < b < d) or (c < a < d < b)


cdef int* _ends(pos, eu, ev, int m) except NULL:
    cdef int* ends = <int*> malloc(2 * (m + 1) * sizeof(int))
    cdef int i, a, b
    for i in range(m):
        a = pos[eu[i]]
        b = pos[ev[i]]
        if a > b:
            a, b = b, a
        ends[2 * i] = a
        ends[2 * i + 1] = b
    return ends


def crossing_pairs(pos, eu, ev, page):
    cdef int m = len(eu)
    cdef int* ends = _ends(pos, eu, ev, m)
    cdef int* pg = <int*> malloc((m + 1) * sizeof(int))
    cdef int i, j
    out = []
    try:
        for i in range(m):
            pg[i] = page[i]
        for i in range(m):
            for j in range(i + 1, m):
                if pg[i] == pg[j] and _alt(ends[2 * i], ends[2 * i + 1], ends[2 * j], ends[2 * j + 1]):
                    out.append((i, j))
    finally:
        free(ends)
        free(pg)
    return out


def two_colour_conflicts(pos, eu, ev):
    cdef int m = len(eu)
    cdef int* ends = _ends(pos, eu, ev, m)
    cdef int* colour = <int*> malloc((m + 1) * sizeof(int))
    cdef int* stack = <int*> malloc((m + 1) * sizeof(int))
    cdef int i, s, x, y, top
    cdef bint ok = True
    try:
        for i in range(m):
            colour[i] = -1
        for s in range(m):
            if colour[s] != -1:
                continue
            colour[s] = 0
            top = 0
            stack[top] = s
            top += 1
            while top > 0 and ok:
                top -= 1
                x = stack[top]
                for y in range(m):
                    if y == x or not _alt(ends[2 * x], ends[2 * x + 1], ends[2 * y], ends[2 * y + 1]):
                        continue
                    if colour[y] == -1:
                        colour[y] = 1 - colour[x]
                        stack[top] = y
                        top += 1
                    elif colour[y] == colour[x]:
                        ok = False
                        break
            if not ok:
                return None
        return [colour[i] for i in range(m)]
    finally:
        free(ends)
        free(colour)
        free(stack)
