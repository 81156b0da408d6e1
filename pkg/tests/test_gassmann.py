import numpy as np
import pytest

from cosetlab.errors import NotASubgroup
from cosetlab.fixtures import m4, m5, psl2_29, psl2_7, psl2_7_s4_pair, s3
from cosetlab.gassmann import (character_from_profile, fixed_point_character, fixed_point_counts,
                               gassmann_equivalent, intersection_profile, preimage_subgroup)
from cosetlab.perm import Permutation, PermGroup, conjugacy_classes, symmetric_group

import helpers


def P(cycles, n=3):
    return Permutation.from_cycles(cycles, n)


def test_s3_profiles():
    t = s3().subgroup([P([(1, 2)])])
    assert intersection_profile(s3(), t).counts == (1, 1, 0)
    c = s3().subgroup([P([(1, 2, 3)])])
    assert intersection_profile(s3(), c).counts == (1, 0, 2)
    assert intersection_profile(s3(), t).subgroup_order == 2


def test_verdict_names_first_differing_class():
    t = s3().subgroup([P([(1, 2)])])
    c = s3().subgroup([P([(1, 2, 3)])])
    v = gassmann_equivalent(s3(), t, c)
    assert not v and v.witness == 1 and v.descriptor == (2, 3)


def test_conjugate_subgroups_are_equivalent():
    rng = np.random.default_rng(5)
    g = symmetric_group(5)
    for _ in range(10):
        h = g.subgroup([Permutation(rng.permutation(5)) for _ in range(2)])
        x = Permutation(rng.permutation(5))
        hx = g.subgroup([s.conjugate(x) for s in h.generators])
        assert gassmann_equivalent(g, h, hx)


def test_fixed_points_on_transposition_cosets():
    t = s3().subgroup([P([(1, 2)])])
    assert fixed_point_character(s3(), t, P([(1, 2)])) == 1
    assert fixed_point_character(s3(), t, P([(1, 2, 3)])) == 0
    assert fixed_point_character(s3(), t, Permutation.identity(3)) == 3


def test_character_matches_direct_count():
    for g, h in [(psl2_29(), m4()), (psl2_7(), psl2_7_s4_pair()[0])]:
        reps = [c.representative for c in conjugacy_classes(g)]
        assert fixed_point_counts(g, h, reps) == character_from_profile(g, h)


def test_scott_characters_equal():
    assert character_from_profile(psl2_29(), m4()) == character_from_profile(psl2_29(), m5())


def test_not_a_subgroup():
    with pytest.raises(NotASubgroup):
        intersection_profile(s3(), PermGroup([P([(1, 2)], 4)], 4))


class TestPreimage:
    def test_trivial_target(self):
        e = helpers.trivial_map(s3())
        assert preimage_subgroup(e, PermGroup([], 1)).order() == 6

    def test_sign_kernel(self):
        e = helpers.sign_map(s3())
        assert preimage_subgroup(e, PermGroup([], 2)).order() == 3

    def test_s4_over_s3(self):
        e = helpers.s4_onto_s3()
        t = symmetric_group(3).subgroup([P([(1, 2)])])
        pre = preimage_subgroup(e, t)
        assert pre.order() == 8  # a Sylow 2-subgroup
        assert all(t.contains(e(x)) for x in pre.generators)

    def test_rejects_foreign_subgroup(self):
        with pytest.raises(NotASubgroup):
            preimage_subgroup(helpers.sign_map(s3()), s3())
