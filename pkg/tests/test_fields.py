import pytest

from quasipoly.fields import (
    admissible_by_divisibility,
    admissible_by_field_inclusion,
    admissible_edge_numbers,
    canonicalize,
    cyclotomic_inclusion,
    divisibility_clause,
    is_sophie_germain,
    special_case_edge_numbers,
)


def test_canonicalize():
    assert canonicalize(10) == 5
    assert canonicalize(12) == 12
    assert canonicalize(2) == 1
    assert canonicalize(canonicalize(30)) == canonicalize(30)


def test_cyclotomic_inclusion():
    assert cyclotomic_inclusion(5, 20)
    assert cyclotomic_inclusion(3, 6)   # equal fields
    assert not cyclotomic_inclusion(4, 5)
    assert cyclotomic_inclusion(10, 5)  # equal fields the other way round


def test_divisibility_decider_examples():
    assert admissible_by_divisibility(5, 20)
    assert not admissible_by_divisibility(3, 10)
    assert admissible_by_divisibility(8, 16)


def test_divisibility_clause_strings():
    assert divisibility_clause(4, 12) == "m in {8, 12}"
    assert "m | 2n" in divisibility_clause(5, 10)
    assert "d = 5" in divisibility_clause(5, 20)
    assert divisibility_clause(3, 10) is None


def test_field_inclusion_decider_examples():
    assert admissible_by_field_inclusion(5, 10)
    assert admissible_by_field_inclusion(4, 12)
    # 20 = 4*5 but canonicalize(10) = 5 does not divide 7
    assert not admissible_by_field_inclusion(7, 20)
    assert not admissible_by_divisibility(7, 20)


def test_precondition_errors_are_distinct():
    with pytest.raises(ValueError, match="n too small"):
        admissible_by_divisibility(2, 8)
    with pytest.raises(ValueError, match="m odd"):
        admissible_by_divisibility(5, 9)
    with pytest.raises(ValueError, match="m too small"):
        admissible_by_divisibility(5, 6)


def test_admissible_edge_numbers_examples():
    assert admissible_edge_numbers(5) == [8, 10, 12, 20]
    assert admissible_edge_numbers(4) == [8, 12]
    assert admissible_edge_numbers(12) == [8, 12, 24]


def test_admissible_contains_8_and_12():
    for n in range(3, 80):
        values = admissible_edge_numbers(n)
        assert 8 in values and 12 in values
        assert all(8 <= m <= max(4 * n, 12) for m in values)


def test_decider_equivalence_small_sweep():
    for n in range(3, 40):
        for m in range(8, 200, 2):
            assert admissible_by_divisibility(n, m) == admissible_by_field_inclusion(n, m), (n, m)


def test_even_index_preimage_gives_same_answers():
    # Z[zeta_n] = Z[zeta_2n] for odd n, so both indices decide alike.
    for n in (3, 5, 7, 9, 11, 15, 21):
        for m in range(8, 8 * n, 2):
            assert admissible_by_field_inclusion(n, m) == admissible_by_field_inclusion(2 * n, m)


def test_sophie_germain():
    listed = [2, 3, 5, 11, 23, 29, 41, 53, 83, 89, 113, 131, 173, 179, 191, 233, 239]
    for p in listed:
        assert is_sophie_germain(p), p
    assert not is_sophie_germain(7)
    assert not is_sophie_germain(13)
    assert not is_sophie_germain(1)
    computed = [p for p in range(2, 240) if is_sophie_germain(p)]
    assert computed == listed


def test_special_case_tables():
    assert special_case_edge_numbers(3) == [8, 12]
    assert special_case_edge_numbers(11) == [8, 12, 22, 44]
    assert special_case_edge_numbers(7) == [8, 12, 14, 28]
    assert special_case_edge_numbers(9) == [8, 12, 18, 36]
    assert special_case_edge_numbers(8) == [8, 12, 16]
    assert special_case_edge_numbers(25) is None  # no closed form tabulated


def test_special_case_tables_match_enumeration():
    for n in range(3, 150):
        table = special_case_edge_numbers(n)
        if table is not None:
            assert table == admissible_edge_numbers(n), n
