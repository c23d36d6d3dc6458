"""Exact enumeration of words on [n]^r avoiding {123, 1k(k-1)...2} or {1234, 1k(k-1)...2}."""
from .avoid123 import (Avoid123Counter, RevKEngine123, count_avoid123,
                       count_avoid123_uniform, remove_zeros, series_123)
from .avoid1234 import (RevKEngine1234, fix, has_decreasing_run, reduce, remove,
                        series_1234)
from .errors import (DataError, InputError, InvariantViolation, PatwordError,
                     ResourceLimitError)
from .genfunc import (RationalGF, build_transfer_system, conjecture_gf_1234,
                      derive_gf_123, expand_series, fit_cfinite, recurrence_to_gf)
from .oracle import brute_count, contains, enumerate_words, rev_k_pattern

__version__ = "0.1.0"
