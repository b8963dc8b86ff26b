# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled segmentation kernels; pure-Python twin lives in _kernels.py.

Both implementations must stay behaviorally identical; the parity test
suite runs every kernel test against whichever implementations import.
"""

from .errors import SegmentationError, StrokeTooShortError, ZeroDisplacementError


def categorize_pairs(list xs, list ys):
    """Direction category for each adjacent pair; output length is n-1."""
    cdef Py_ssize_t n = len(xs)
    if n < 2:
        raise StrokeTooShortError("need at least 2 points to categorize")
    cdef list out = [0] * (n - 1)
    cdef Py_ssize_t i
    cdef long long dx, dy
    cdef int cat
    for i in range(n - 1):
        dx = <long long> xs[i + 1] - <long long> xs[i]
        dy = <long long> ys[i + 1] - <long long> ys[i]
        if dx > 0:
            cat = 1 if dy == 0 else (6 if dy > 0 else 5)
        elif dx < 0:
            cat = 2 if dy == 0 else (7 if dy > 0 else 8)
        elif dy > 0:
            cat = 3
        elif dy < 0:
            cat = 4
        else:
            raise ZeroDisplacementError(
                f"identical consecutive points at index {i}; dedup the stroke first"
            )
        out[i] = cat
    return out


def smooth_blocks(list cats, block_size):
    """Replace each block of block_size categories by the block's mode.

    Ties are broken by the block's middle element, then by the smallest
    category value. The trailing partial block is smoothed on its own.
    """
    cdef Py_ssize_t block = int(block_size)
    if block < 1:
        raise ValueError(f"block_size must be >= 1, got {block_size}")
    cdef Py_ssize_t n = len(cats)
    if n == 0:
        raise SegmentationError("cannot smooth an empty category list")
    cdef list out = [0] * n
    cdef Py_ssize_t start = 0, end, i
    cdef int counts[9]
    cdef int c, k, best, mode, middle
    while start < n:
        end = start + block
        if end > n:
            end = n
        for k in range(9):
            counts[k] = 0
        for i in range(start, end):
            c = <int> cats[i]
            if c < 1 or c > 8:
                raise SegmentationError(f"category out of range at index {i}: {cats[i]}")
            counts[c] += 1
        best = 0
        for k in range(1, 9):
            if counts[k] > best:
                best = counts[k]
        middle = <int> cats[start + (end - start) // 2]
        if counts[middle] == best:
            mode = middle
        else:
            mode = 0
            for k in range(1, 9):
                if counts[k] == best:
                    mode = k
                    break
        for i in range(start, end):
            out[i] = mode
        start = end
    return out


def change_points(list cats):
    """Indices i >= 1 where cats[i] differs from cats[i-1]."""
    cdef Py_ssize_t n = len(cats)
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(1, n):
        if cats[i] != cats[i - 1]:
            out.append(i)
    return out
