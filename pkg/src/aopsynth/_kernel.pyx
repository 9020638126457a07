# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernel: bit-parallel gate evaluation over uint64 lanes."""

from libc.stdint cimport int8_t, int64_t, uint64_t

BACKEND = "cython"


def eval_block(const int8_t[::1] tag, const int64_t[::1] left,
               const int64_t[::1] right, uint64_t[:, ::1] values):
    """Fill gate rows of ``values`` in arena order.

    ``values`` has one row per node and one column per 64-assignment word;
    input rows must be prefilled by the caller.  Tag 0 marks inputs, 1 AND,
    2 OR.
    """
    cdef Py_ssize_t n = tag.shape[0]
    cdef Py_ssize_t w = values.shape[1]
    cdef Py_ssize_t i, j
    cdef int64_t a, b
    with nogil:
        for i in range(n):
            if tag[i] == 1:
                a = left[i]; b = right[i]
                for j in range(w):
                    values[i, j] = values[a, j] & values[b, j]
            elif tag[i] == 2:
                a = left[i]; b = right[i]
                for j in range(w):
                    values[i, j] = values[a, j] | values[b, j]


def recompute_depths(const int8_t[::1] tag, const int64_t[::1] left,
                     const int64_t[::1] right, int64_t[::1] out):
    cdef Py_ssize_t n = tag.shape[0]
    cdef Py_ssize_t i
    cdef int64_t dl, dr
    with nogil:
        for i in range(n):
            if tag[i] == 0:
                out[i] = 0
            else:
                dl = out[left[i]]
                dr = out[right[i]]
                out[i] = (dl if dl >= dr else dr) + 1
