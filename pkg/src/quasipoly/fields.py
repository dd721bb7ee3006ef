"""Existence decisions for U-polygons of class >= 4 over Z[zeta_n].

Two independently implemented deciders answer the same question: does a
U-polygon of class >= 4 with m edges exist in a cyclotomic model set with
underlying module Z[zeta_n]? One works by plain divisibility, the other by
inclusion of cyclotomic fields. They cross-check each other; keep them
independent.
"""

from __future__ import annotations


def canonicalize(n: int) -> int:
    """Smallest index generating the same cyclotomic field: n/2 when n = 2 mod 4."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return n // 2 if n % 4 == 2 else n


def cyclotomic_inclusion(a: int, b: int) -> bool:
    """Whether Q(zeta_a) is a subfield of Q(zeta_b)."""
    if a < 1 or b < 1:
        raise ValueError("indices must be >= 1")
    return canonicalize(b) % canonicalize(a) == 0


def _check_decision_args(n: int, m: int) -> None:
    if n < 3:
        raise ValueError(f"n too small: need n >= 3, got {n}")
    if m % 2 != 0:
        raise ValueError(f"m odd: edge counts of U-polygons are even, got {m}")
    if m < 8:
        raise ValueError(f"m too small: class >= 4 needs m >= 8, got {m}")


def admissible_by_divisibility(n: int, m: int) -> bool:
    """Divisibility decider: m in {8,12}, or m | 2n, or m = 4d with d an odd divisor of n."""
    _check_decision_args(n, m)
    return divisibility_clause(n, m) is not None


def divisibility_clause(n: int, m: int) -> str | None:
    """The first clause of the divisibility condition that fires, or None."""
    _check_decision_args(n, m)
    if m in (8, 12):
        return "m in {8, 12}"
    if (2 * n) % m == 0:
        return f"m | 2n ({m} | {2 * n})"
    if m % 4 == 0:
        d = m // 4
        if d % 2 == 1 and n % d == 0:
            return f"m = 4d with d = {d} an odd divisor of n"
    return None


def admissible_by_field_inclusion(n: int, m: int) -> bool:
    """Field-inclusion decider: m in {8,12}, or Q(zeta_{m/2}) contained in Q(zeta_n).

    Independent of admissible_by_divisibility; used as its cross-check oracle.
    """
    _check_decision_args(n, m)
    return m in (8, 12) or cyclotomic_inclusion(m // 2, n)


def admissible_edge_numbers(n: int) -> list[int]:
    """All admissible edge counts for index n, sorted ascending.

    The search stops at max(4n, 12): the divisor clauses force m <= 2n or
    m <= 4n, and {8, 12} sit below 12. A slack window past the bound is
    scanned to assert nothing shows up there.
    """
    if n < 3:
        raise ValueError(f"index must be >= 3, got {n}")
    bound = max(4 * n, 12)
    result = [m for m in range(8, bound + 1, 2) if admissible_by_divisibility(n, m)]
    assert not any(
        admissible_by_divisibility(n, m) for m in range(bound + 2, bound + 50, 2)
    ), "admissible edge count beyond the proven search bound"
    return result


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def is_sophie_germain(p: int) -> bool:
    """Whether p and 2p+1 are both prime."""
    return _is_prime(p) and _is_prime(2 * p + 1)


def special_case_edge_numbers(n: int) -> list[int] | None:
    """Closed-form admissible sets for the indices with a published table.

    Covers n in {3, 4}, n in {8, 12}, n = 9, and n = 2p+1 for a Sophie
    Germain prime p. Returns None where no closed form is tabulated; where
    it is, the value agrees exactly with admissible_edge_numbers.
    """
    if n < 3:
        raise ValueError(f"index must be >= 3, got {n}")
    if n in (3, 4):
        return [8, 12]
    if n in (8, 12):
        return sorted({8, 12, 2 * n})
    if n == 9 or (n % 2 == 1 and is_sophie_germain((n - 1) // 2)):
        return sorted({8, 12, 2 * n, 4 * n})
    return None
