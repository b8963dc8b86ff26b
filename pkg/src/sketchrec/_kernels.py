"""Pure-Python segmentation kernels.

Line-for-line twin of the compiled ``_speedups`` extension; selected at
import time by :mod:`sketchrec.segmentation` when the extension is missing.
Category values are the eight direction cases, keyed on the signs of
(dx, dy) for each adjacent point pair:

    1: dx>0, dy=0    2: dx<0, dy=0    3: dx=0, dy>0    4: dx=0, dy<0
    5: dx>0, dy<0    6: dx>0, dy>0    7: dx<0, dy>0    8: dx<0, dy<0
"""

from .errors import SegmentationError, StrokeTooShortError, ZeroDisplacementError


def categorize_pairs(xs, ys):
    """Direction category for each adjacent pair; output length is n-1."""
    n = len(xs)
    if n < 2:
        raise StrokeTooShortError("need at least 2 points to categorize")
    out = []
    for i in range(n - 1):
        dx = xs[i + 1] - xs[i]
        dy = ys[i + 1] - ys[i]
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
        out.append(cat)
    return out


def smooth_blocks(cats, block_size):
    """Replace each block of block_size categories by the block's mode.

    Ties are broken by the block's middle element, then by the smallest
    category value. The trailing partial block is smoothed on its own.
    """
    if block_size < 1:
        raise ValueError(f"block_size must be >= 1, got {block_size}")
    n = len(cats)
    if n == 0:
        raise SegmentationError("cannot smooth an empty category list")
    out = []
    counts = [0] * 9
    for start in range(0, n, block_size):
        end = min(start + block_size, n)
        for k in range(1, 9):
            counts[k] = 0
        for i in range(start, end):
            c = cats[i]
            if c < 1 or c > 8:
                raise SegmentationError(f"category out of range at index {i}: {c}")
            counts[c] += 1
        best = 0
        for k in range(1, 9):
            if counts[k] > best:
                best = counts[k]
        mode = 0
        middle = cats[start + (end - start) // 2]
        if counts[middle] == best:
            mode = middle
        else:
            for k in range(1, 9):
                if counts[k] == best:
                    mode = k
                    break
        out.extend([mode] * (end - start))
    return out


def change_points(cats):
    """Indices i >= 1 where cats[i] differs from cats[i-1]."""
    return [i for i in range(1, len(cats)) if cats[i] != cats[i - 1]]
