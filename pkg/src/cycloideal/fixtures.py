"""Reported values used as golden data by ``check`` and the test suite."""

from __future__ import annotations

# t_{l,m} for m = 1..4 (rows) and l = 0..16 (columns)
T_TABLE: dict[int, tuple[int, ...]] = {
    1: (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16),
    2: (0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7),
    3: (0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4),
    4: (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3),
}

# expanded generators at colors (2, 2, 2, 2); the grammar has no powers of
# parenthesized terms, so repeated factors are written out
Z_A_2222 = "(q-1)*(q-1)*(q+1)*(q^2+q+1)*(q^2+1)*(q^4+q^3+q^2+q^1+1)"
Z_BR_2222 = "(q-1)*(q-1)*(q-1)*(q-1)*(q^2+q+1)*(q^2+1)*(q^4+q^3+q^2+q^1+1)"


def example_exponents(kind: str, color: int, n: int) -> dict[int, int]:
    """Phi-products for n components all colored ``color`` in {1, 2, 3}.

    ``kind`` is ``"alg"``, ``"rb"`` or ``"br-cap-a"``.
    """
    table = {
        "alg": {
            1: {1: 1, 2: 1, 3: 1},
            2: {1: 2, 2: 1, 3: 1, 4: 1, 5: 1},
            3: {1: 3, 2: 2, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1},
        },
        "br-cap-a": {
            1: {1: n - 2, 2: 1, 3: 1},
            2: {1: 2 * (n - 2), 2: 1, 3: 1, 4: 1, 5: 1},
            3: {1: 3 * (n - 2), 2: n - 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1},
        },
        "rb": {
            1: {1: n, 2: 1, 3: 1},
            2: {1: 2 * n, 2: 1, 3: 1, 4: 1, 5: 1},
            3: {1: 3 * n, 2: n + 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1},
        },
    }
    return {m: e for m, e in table[kind][color].items() if e}
