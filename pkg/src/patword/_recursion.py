import sys
from contextlib import contextmanager


@contextmanager
def recursion_headroom(depth: int):
    """Temporarily raise the interpreter recursion limit by about `depth` frames."""
    old = sys.getrecursionlimit()
    want = 4 * depth + 1000
    if want > old:
        sys.setrecursionlimit(want)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)
