from __future__ import annotations

import pytest

from patword.oracle import contains, multinomial

ACCEPTANCE_KEY = pytest.StashKey[list]()


def oracle_grid(limit: int = 10**5, guard: int = 12) -> list[tuple[int, int]]:
    """(n, r) pairs whose word count (nr)!/(r!)^n is at most `limit` and fits the guard."""
    out = []
    for r in range(1, guard + 1):
        for n in range(0, guard // r + 1):
            if multinomial([r] * n) <= limit:
                out.append((n, r))
    return out


def count_completions(prefix, remaining, patterns) -> int:
    """Completions of `prefix` using the multiset `remaining` that avoid all patterns.

    Depth-first with pruning: an extension that already contains a pattern
    is abandoned.
    """
    prefix = list(prefix)
    remaining = list(remaining)

    def rec() -> int:
        if any(contains(prefix, p) for p in patterns):
            return 0
        if not any(remaining):
            return 1
        total = 0
        for i, c in enumerate(remaining):
            if c:
                remaining[i] -= 1
                prefix.append(i + 1)
                total += rec()
                prefix.pop()
                remaining[i] += 1
        return total

    return rec()


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
