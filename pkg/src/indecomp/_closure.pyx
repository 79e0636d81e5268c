# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels over Cayley tables.

Masks cross the boundary as little-endian byte strings (bit i of the mask is
bit i & 7 of byte i >> 3). These loops are the runtime core of subgroup
lattice enumeration; keep them allocation-light.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef inline bint get_bit(const unsigned char *buf, int i) noexcept nogil:
    return (buf[i >> 3] >> (i & 7)) & 1


cdef inline void set_bit(unsigned char *buf, int i) noexcept nogil:
    buf[i >> 3] |= <unsigned char> (1 << (i & 7))


def close_mask(const int[:, ::1] table, const unsigned char[::1] seed, int n):
    """Smallest multiplication-closed superset of the seed mask."""
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray out = bytearray(nbytes)
    cdef unsigned char *member = out
    cdef int *elems = <int *> malloc(n * sizeof(int))
    if elems == NULL:
        raise MemoryError()
    cdef int count = 0, qi = 0, j, a, b, p
    try:
        memcpy(member, &seed[0], nbytes)
        for a in range(n):
            if get_bit(member, a):
                elems[count] = a
                count += 1
        while qi < count:
            a = elems[qi]
            qi += 1
            j = 0
            while j < count:
                b = elems[j]
                p = table[a, b]
                if not get_bit(member, p):
                    set_bit(member, p)
                    elems[count] = p
                    count += 1
                p = table[b, a]
                if not get_bit(member, p):
                    set_bit(member, p)
                    elems[count] = p
                    count += 1
                j += 1
    finally:
        free(elems)
    return bytes(out)


def coset_mask(const int[:, ::1] table, const unsigned char[::1] mask, int g,
               bint right, int n):
    """Mask of g*H (or H*g when right is true)."""
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray out = bytearray(nbytes)
    cdef unsigned char *dst = out
    cdef int h
    for h in range(n):
        if get_bit(&mask[0], h):
            if right:
                set_bit(dst, table[h, g])
            else:
                set_bit(dst, table[g, h])
    return bytes(out)


def conjugate_mask(const int[:, ::1] table, const unsigned char[::1] mask,
                   int g, int ginv, int n):
    """Mask of {g*h*g^-1 : h in mask}."""
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray out = bytearray(nbytes)
    cdef unsigned char *dst = out
    cdef int h
    for h in range(n):
        if get_bit(&mask[0], h):
            set_bit(dst, table[table[g, h], ginv])
    return bytes(out)


def product_mask(const int[:, ::1] table, const unsigned char[::1] a,
                 const unsigned char[::1] b, int n):
    """Mask of the product set {x*y : x in a, y in b}."""
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray out = bytearray(nbytes)
    cdef unsigned char *dst = out
    cdef int *bel = <int *> malloc(n * sizeof(int))
    if bel == NULL:
        raise MemoryError()
    cdef int bcount = 0, x, j
    try:
        for x in range(n):
            if get_bit(&b[0], x):
                bel[bcount] = x
                bcount += 1
        for x in range(n):
            if get_bit(&a[0], x):
                for j in range(bcount):
                    set_bit(dst, table[x, bel[j]])
    finally:
        free(bel)
    return bytes(out)


def is_closed_mask(const int[:, ::1] table, const unsigned char[::1] mask, int n):
    """True iff the mask is closed under multiplication."""
    cdef int *elems = <int *> malloc(n * sizeof(int))
    if elems == NULL:
        raise MemoryError()
    cdef int count = 0, i, j
    try:
        for i in range(n):
            if get_bit(&mask[0], i):
                elems[count] = i
                count += 1
        for i in range(count):
            for j in range(count):
                if not get_bit(&mask[0], table[elems[i], elems[j]]):
                    return False
    finally:
        free(elems)
    return True
