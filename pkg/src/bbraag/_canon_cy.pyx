# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled twin of bbraag._canon_py.

Same individualization-refinement search, same key definition; the two
backends must return identical values for every input.  Restricted to
n <= 11 so leaf keys fit in 64 bits; larger inputs delegate to the pure
implementation (the package-level canonical form is bounded anyway).
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.string cimport memcpy

from . import _canon_py

BACKEND = "cython"

DEF MAXN = 12
DEF MAXAUTO = 64


cdef inline int _popcount(uint32_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef class _Search:
    cdef uint32_t adj[MAXN]
    cdef int n
    cdef bint have_best
    cdef uint64_t best
    cdef int best_perm[MAXN]
    cdef int autos[MAXAUTO][MAXN]
    cdef int nauto
    cdef int prefix[MAXN]
    cdef int prefix_len

    cdef void setup(self, int n, object adj):
        cdef int i
        self.n = n
        for i in range(n):
            self.adj[i] = <uint32_t> adj[i]
        self.have_best = False
        self.nauto = 0
        self.prefix_len = 0

    # Partition: elems[0..n-1] lists vertices, sep[i] == 1 marks a cell end.
    cdef bint refine(self, int *elems, unsigned char *sep):
        cdef int n = self.n
        cdef int s_start, s_end, c_start, c_end, i, j, v, tmp
        cdef uint32_t smask
        cdef int counts[MAXN]
        cdef bint changed, any_split
        while True:
            changed = False
            s_start = 0
            while s_start < n:
                s_end = s_start
                while not sep[s_end]:
                    s_end += 1
                smask = 0
                for i in range(s_start, s_end + 1):
                    smask |= (<uint32_t> 1) << elems[i]
                # split every cell by neighbor counts into smask
                c_start = 0
                any_split = False
                while c_start < n:
                    c_end = c_start
                    while not sep[c_end]:
                        c_end += 1
                    if c_end > c_start:
                        for i in range(c_start, c_end + 1):
                            counts[i] = _popcount(self.adj[elems[i]] & smask)
                        # stable insertion sort of elems[c_start..c_end] by counts
                        for i in range(c_start + 1, c_end + 1):
                            v = elems[i]
                            tmp = counts[i]
                            j = i - 1
                            while j >= c_start and counts[j] > tmp:
                                elems[j + 1] = elems[j]
                                counts[j + 1] = counts[j]
                                j -= 1
                            elems[j + 1] = v
                            counts[j + 1] = tmp
                        for i in range(c_start, c_end):
                            if counts[i] != counts[i + 1]:
                                if not sep[i]:
                                    sep[i] = 1
                                    any_split = True
                    c_start = c_end + 1
                if any_split:
                    changed = True
                    break
                s_start = s_end + 1
            if not changed:
                return True

    cdef uint64_t leaf_key(self, int *perm) nogil:
        cdef uint64_t key = 0
        cdef int i, j
        cdef uint32_t row
        for j in range(1, self.n):
            row = self.adj[perm[j]]
            for i in range(j):
                key = (key << 1) | ((row >> perm[i]) & 1)
        return key

    cdef bint orbit_blocked(self, int v, int *tried, int ntried):
        cdef int parent[MAXN]
        cdef int n = self.n
        cdef int a, x, rx, ry, i
        cdef bint usable, any_usable = False
        for x in range(n):
            parent[x] = x
        for a in range(self.nauto):
            usable = True
            for i in range(self.prefix_len):
                if self.autos[a][self.prefix[i]] != self.prefix[i]:
                    usable = False
                    break
            if not usable:
                continue
            any_usable = True
            for x in range(n):
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = self.autos[a][x]
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
        if not any_usable:
            return False
        rx = v
        while parent[rx] != rx:
            rx = parent[rx]
        for i in range(ntried):
            ry = tried[i]
            while parent[ry] != ry:
                ry = parent[ry]
            if ry == rx:
                return True
        return False

    cdef void search(self, int *elems, unsigned char *sep):
        cdef int n = self.n
        cdef int work_elems[MAXN]
        cdef unsigned char work_sep[MAXN]
        cdef int child_elems[MAXN]
        cdef unsigned char child_sep[MAXN]
        cdef int tried[MAXN]
        cdef int ntried, c_start, c_end, i, j, k, v, pos
        cdef uint64_t key
        memcpy(work_elems, elems, n * sizeof(int))
        memcpy(work_sep, sep, n * sizeof(unsigned char))
        self.refine(work_elems, work_sep)
        # first non-singleton cell
        c_start = 0
        while c_start < n:
            c_end = c_start
            while not work_sep[c_end]:
                c_end += 1
            if c_end > c_start:
                break
            c_start = c_end + 1
        if c_start >= n:
            key = self.leaf_key(work_elems)
            if not self.have_best or key < self.best:
                self.have_best = True
                self.best = key
                memcpy(self.best_perm, work_elems, n * sizeof(int))
            elif key == self.best and self.nauto < MAXAUTO:
                for i in range(n):
                    self.autos[self.nauto][self.best_perm[i]] = work_elems[i]
                self.nauto += 1
            return
        ntried = 0
        for k in range(c_start, c_end + 1):
            v = work_elems[k]
            if ntried and self.orbit_blocked(v, tried, ntried):
                continue
            tried[ntried] = v
            ntried += 1
            # child partition: v split off in front of the remainder of its cell
            memcpy(child_elems, work_elems, n * sizeof(int))
            memcpy(child_sep, work_sep, n * sizeof(unsigned char))
            pos = c_start
            child_elems[pos] = v
            for j in range(c_start, c_end + 1):
                if work_elems[j] != v:
                    pos += 1
                    child_elems[pos] = work_elems[j]
            child_sep[c_start] = 1
            self.prefix[self.prefix_len] = v
            self.prefix_len += 1
            self.search(child_elems, child_sep)
            self.prefix_len -= 1


def canon_key(n, adj):
    """Minimal graph6 upper-triangle key over all relabelings (compiled)."""
    if n <= 1:
        return 0
    if n > 11:
        return _canon_py.canon_key(n, adj)
    cdef _Search s = _Search()
    s.setup(n, adj)
    cdef int elems[MAXN]
    cdef unsigned char sep[MAXN]
    cdef int i
    for i in range(n):
        elems[i] = i
        sep[i] = 0
    sep[n - 1] = 1
    s.search(elems, sep)
    return s.best
