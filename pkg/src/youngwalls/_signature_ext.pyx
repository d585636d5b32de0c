# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled signature reduction; same contract as ``_signature_py``."""
from libc.stdlib cimport malloc, free


def reduce_signature(const unsigned char[::1] classes, const unsigned char[::1] eps,
                     const unsigned char[::1] phi, int tail_plus):
    cdef Py_ssize_t n = classes.shape[0]
    cdef Py_ssize_t k, top = 0
    cdef int m, p, take, n_minus = 0, n_plus = 0, minus_owner = -2, plus_owner
    cdef int* owners = <int*> malloc((n + 1) * sizeof(int))
    cdef int* counts = <int*> malloc((n + 1) * sizeof(int))
    if owners == NULL or counts == NULL:
        free(owners)
        free(counts)
        raise MemoryError()
    try:
        if tail_plus > 0:
            owners[0] = -1
            counts[0] = tail_plus
            top = 1
        for k in range(n):
            m = eps[classes[k]]
            while m > 0 and top > 0:
                take = m if m < counts[top - 1] else counts[top - 1]
                m -= take
                counts[top - 1] -= take
                if counts[top - 1] == 0:
                    top -= 1
            if m > 0:
                n_minus += m
                minus_owner = <int> k
            p = phi[classes[k]]
            if p > 0:
                owners[top] = <int> k
                counts[top] = p
                top += 1
        for k in range(top):
            n_plus += counts[k]
        plus_owner = owners[0] if top > 0 else -2
        return n_minus, n_plus, plus_owner, minus_owner
    finally:
        free(owners)
        free(counts)
