import numpy as np
import pytest

from cosetlab.cosets import CosetTable, table_from_homomorphism, todd_coxeter
from cosetlab.errors import IncompleteTable
from cosetlab.fixtures import gamma, gamma_images, m4, psl2_29
from cosetlab.formats import parse_presentation
from cosetlab.fp import Presentation, abelian_invariants, evaluate_word, free_reduce
from cosetlab.homs import GroupHomomorphism
from cosetlab.rewriting import (canonical_relator, generator_expressions, least_rotation,
                                reidemeister_schreier, schreier_transversal, tietze_reduce,
                                tietze_simplify)

import helpers


@pytest.fixture(scope="module")
def gamma_rs():
    e = GroupHomomorphism(gamma(), psl2_29(), gamma_images())
    t = table_from_homomorphism(e, m4())
    data = schreier_transversal(t)
    return t, data, reidemeister_schreier(gamma(), t, data)


class TestTransversal:
    def test_one_row(self):
        t = todd_coxeter(parse_presentation("gens a; rels a;"))
        assert schreier_transversal(t).transversal == [()]

    def test_index_two(self):
        t = CosetTable(1, [[1, 1], [0, 0]])
        data = schreier_transversal(t)
        assert data.transversal == [(), (1,)]
        assert data.words == [(1, 1)]

    def test_prefix_closed(self, gamma_rs):
        t, data, _ = gamma_rs
        words = data.transversal
        assert len(words) == 203 and words[0] == ()
        assert len({t.trace(0, w) for w in words}) == 203
        assert all(w[:-1] in set(words) for w in words if w)

    def test_incomplete(self):
        with pytest.raises(IncompleteTable):
            schreier_transversal(CosetTable.from_text("1 -\n"))


class TestReidemeisterSchreier:
    def test_counts_gamma(self, gamma_rs):
        _, _, rs = gamma_rs
        assert rs.n_generators == 3 * 203 - 202 == 407
        assert abelian_invariants(rs) == ([], 0)

    def test_index_one(self):
        p = parse_presentation("gens x, y; rels x^2, y^3, (x*y)^3;")
        t = todd_coxeter(p, [(1,), (2,)])
        q = reidemeister_schreier(p, t)
        assert q.n_generators == 2
        assert abelian_invariants(q) == abelian_invariants(p)

    def test_f2_index_two(self):
        f2 = Presentation.on(2, [])
        t = CosetTable(2, [[0, 0, 1, 1], [1, 1, 0, 0]])
        q = tietze_simplify(reidemeister_schreier(f2, t))
        assert q.n_generators == 3 and q.relators == ()

    @pytest.mark.parametrize("rank,index", [(1, 4), (2, 3), (2, 5), (3, 2), (3, 4)])
    def test_nielsen_schreier(self, rank, index):
        rng = np.random.default_rng(rank * 10 + index)
        for _ in range(4):
            t = helpers.random_transitive_table(rng, rank, index)
            q = tietze_simplify(reidemeister_schreier(Presentation.on(rank, []), t))
            assert q.n_generators == 1 + index * (rank - 1) and q.relators == ()

    def test_schreier_words_lie_in_subgroup(self, gamma_rs):
        t, data, _ = gamma_rs
        assert all(t.trace(0, w) == 0 for w in data.words)


class TestTietze:
    def test_drop_trivial_generator(self):
        q = tietze_simplify(parse_presentation("gens a, b; rels b;"))
        assert q.n_generators == 1 and q.relators == ()

    def test_eliminate_product(self):
        p = parse_presentation("gens a, b, c; rels c^-1*a*b, a^3, b^3;")
        q = tietze_simplify(p)
        assert q.n_generators == 2
        assert len(q.relators) == 2
        assert abelian_invariants(q) == ([3, 3], 0)

    def test_gamma_preimage(self, gamma_rs):
        _, _, rs = gamma_rs
        result = tietze_reduce(rs)
        q = result.presentation
        assert q.n_generators < 407
        assert abelian_invariants(q) == ([], 0)
        assert not result.stopped_by_cap

    def test_expressions_recover_generators(self, gamma_rs):
        # each eliminated Schreier generator equals its expression in the quotient
        _, data, rs = gamma_rs
        result = tietze_reduce(rs)
        e = GroupHomomorphism(gamma(), psl2_29(), gamma_images())
        exprs = generator_expressions(result, rs.n_generators)
        kept_imgs = [e(data.words[k - 1]).array for k in result.kept]
        for i in range(0, rs.n_generators, 37):
            lhs = e(data.words[i]).array
            rhs = evaluate_word(exprs[i], kept_imgs, 30)
            assert np.array_equal(lhs, rhs)

    def test_length_cap_stops_cleanly(self, gamma_rs):
        _, _, rs = gamma_rs
        result = tietze_reduce(rs, length_cap=1000)
        assert result.stopped_by_cap
        assert abelian_invariants(result.presentation) == ([], 0)

    def test_random_invariance(self):
        rng = np.random.default_rng(99)
        from cosetlab.low_index import low_index_classes
        for _ in range(60):
            p = helpers.random_presentation(rng)
            q = tietze_simplify(p)
            assert abelian_invariants(p) == abelian_invariants(q)
            for k in (2, 3):
                assert len(low_index_classes(p, k, k)) == len(low_index_classes(q, k, k))


class TestRotation:
    def test_least_rotation(self):
        assert least_rotation((3, 1, 2, 1)) == (1, 2, 1, 3)
        assert least_rotation((2, 2, 1)) == (1, 2, 2)

    def test_against_brute(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            w = tuple(int(x) for x in rng.integers(-3, 4, size=int(rng.integers(1, 9))))
            assert least_rotation(w) == min(w[i:] + w[:i] for i in range(len(w)))

    def test_canonical_relator_invariant(self):
        w = free_reduce((1, 2, -1, 2, 2))
        rot = w[2:] + w[:2]
        inv = tuple(-x for x in reversed(w))
        assert canonical_relator(w) == canonical_relator(rot) == canonical_relator(inv)
