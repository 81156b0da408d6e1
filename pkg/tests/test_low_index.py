import numpy as np
import pytest

from cosetlab.cosets import validate_table
from cosetlab.errors import CapExceeded
from cosetlab.fixtures import gamma
from cosetlab.formats import parse_presentation
from cosetlab.fp import Presentation
from cosetlab.low_index import (class_size, count_subgroups, index_histogram, low_index_classes,
                                search)

import helpers


def test_infinite_cyclic_one_class_per_index():
    p = Presentation.on(1, [])
    assert index_histogram(low_index_classes(p, 1, 6)) == {k: 1 for k in range(1, 7)}


def test_free_rank_two_index_three():
    assert len(low_index_classes(Presentation.on(2, []), 3, 3)) == 7


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_hall_counts(rank):
    free = Presentation.on(rank, [])
    top = 4 if rank < 3 else 3
    assert [count_subgroups(free, n) for n in range(1, top + 1)] == helpers.hall_counts(rank, top)


def test_finite_groups():
    s3 = parse_presentation("gens a, b; rels a^2, b^3, (a*b)^2;")
    # S3: index 1, 2 (A3), 3 (the transposition class), 6 (trivial)
    assert index_histogram(low_index_classes(s3, 1, 6)) == {1: 1, 2: 1, 3: 1, 6: 1}
    a5 = parse_presentation("gens a, b; rels a^2, b^3, (a*b)^5;")
    assert index_histogram(low_index_classes(a5, 1, 12)) == {1: 1, 5: 1, 6: 1, 10: 1, 12: 1}
    assert count_subgroups(a5, 5) == 5 and count_subgroups(a5, 6) == 6


def test_tables_satisfy_relators_and_are_distinct():
    p = parse_presentation("gens a, b; rels a^2, b^3;")
    tables = low_index_classes(p, 1, 6)
    assert all(t.complete and validate_table(t, p) for t in tables)
    assert len({t.rows.tobytes() for t in tables}) == len(tables)
    assert all(t == t.standardize() for t in tables)


def test_class_size_divides_index():
    p = parse_presentation("gens a, b; rels a^2, b^3;")
    for t in low_index_classes(p, 1, 6):
        assert t.n_cosets % class_size(t) == 0 or class_size(t) <= t.n_cosets


def test_gamma_agrees_with_known_quotients():
    # a perfect group: no subgroups of index 2 or 3
    assert low_index_classes(gamma(), 2, 3) == []


@pytest.mark.parametrize("cut", [2, 4, 8, 100])
def test_deduction_length_does_not_change_results(cut):
    p = parse_presentation("gens a, b; rels a^2, b^3, (a*b)^7, (a*b*a*b^-1)^4;")
    ref, _ = search(p, 1, 8, deduction_length=100)
    got, _ = search(p, 1, 8, deduction_length=cut)
    assert [t.rows.tobytes() for t in got] == [t.rows.tobytes() for t in ref]


def test_input_checks():
    p = Presentation.on(1, [])
    with pytest.raises(ValueError):
        search(p, 0, 3)
    with pytest.raises(ValueError):
        search(p, 4, 3)
    with pytest.raises(CapExceeded):
        search(p, 1, 10**6)


def test_trivial_group():
    p = parse_presentation("gens a; rels a;")
    assert index_histogram(low_index_classes(p, 1, 4)) == {1: 1}


def test_random_presentations_validate():
    rng = np.random.default_rng(7)
    for _ in range(30):
        p = helpers.random_presentation(rng)
        for t in low_index_classes(p, 1, 4):
            assert validate_table(t, p)
