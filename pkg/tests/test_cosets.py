import numpy as np
import pytest

from cosetlab.cosets import CosetTable, table_from_homomorphism, todd_coxeter, validate_table
from cosetlab.errors import CosetLimitExceeded, IncompleteTable
from cosetlab.fixtures import gamma, gamma_images, m4, m5, psl2_29
from cosetlab.formats import parse_presentation, parse_words
from cosetlab.fp import Presentation, evaluate_word
from cosetlab.homs import GroupHomomorphism
from cosetlab.perm import Permutation, PermGroup, symmetric_group
from cosetlab.rewriting import schreier_transversal


@pytest.fixture(scope="module")
def e_hom():
    return GroupHomomorphism(gamma(), psl2_29(), gamma_images())


class TestFromHomomorphism:
    def test_whole_group(self, e_hom):
        t = table_from_homomorphism(e_hom, psl2_29())
        assert t.n_cosets == 1

    @pytest.mark.parametrize("sub", [m4, m5])
    def test_index_203(self, e_hom, sub):
        t = table_from_homomorphism(e_hom, sub())
        assert t.n_cosets == 203 and t.complete
        assert validate_table(t, gamma())

    def test_f2_onto_s3(self):
        s3 = symmetric_group(3)
        a, b = Permutation.from_cycles([(1, 2)], 3), Permutation.from_cycles([(1, 2, 3)], 3)
        e = GroupHomomorphism(Presentation.on(2, []), s3, [a, b])
        t = table_from_homomorphism(e, s3.subgroup([a]))
        assert t.n_cosets == 3

    def test_induced_action_satisfies_relators(self, e_hom):
        t = table_from_homomorphism(e_hom, m4())
        perms = [p.array for p in t.permutations()]
        for r in gamma().relators:
            assert np.array_equal(evaluate_word(r, perms, 203), np.arange(203))


class TestToddCoxeter:
    def test_cyclic(self):
        p = parse_presentation("gens x; rels x^5;")
        assert todd_coxeter(p, [], max_cosets=100).n_cosets == 5

    def test_a4_over_involution(self):
        p = parse_presentation("gens x, y; rels x^2, y^3, (x*y)^3;")
        t = todd_coxeter(p, parse_words("x", p))
        assert t.n_cosets == 6 and validate_table(t, p)
        assert todd_coxeter(p).n_cosets == 12

    def test_subgroup_words_fix_coset_one(self):
        p = parse_presentation("gens a, b; rels a^3, b^2, (a*b)^4;")
        words = parse_words("a, b*a*b", p)
        t = todd_coxeter(p, words)
        assert all(t.trace(0, w) == 0 for w in words)
        assert validate_table(t, p, words)

    def test_limit(self):
        with pytest.raises(CosetLimitExceeded):
            todd_coxeter(Presentation.on(2, [(1, 1)]), [], max_cosets=50)

    def test_schreier_generators_of_gamma_table(self, e_hom):
        t = table_from_homomorphism(e_hom, m4())
        data = schreier_transversal(t)
        assert todd_coxeter(gamma(), data.words).n_cosets == 203

    def test_agrees_with_homomorphism_tables(self):
        s4 = symmetric_group(4)
        p = parse_presentation("gens a, b; rels a^2, b^4, (a*b)^3;")
        e = GroupHomomorphism(p, s4, s4.generators)
        for words in ([(2, 1)], [(1,)], [(2, 2)], [(1, 2, 1, 2, 2)]):
            h = s4.subgroup([e(w) for w in words])
            t1 = table_from_homomorphism(e, h)
            t2 = todd_coxeter(p, words)
            assert t1.n_cosets == t2.n_cosets == 24 // h.order()


class TestTableBasics:
    def test_validate_detects_swap(self):
        p = parse_presentation("gens x; rels x^3;")
        t = todd_coxeter(p)
        rows = t.rows.copy()
        rows[0, 0], rows[1, 0] = rows[1, 0], rows[0, 0]
        assert not validate_table(CosetTable(1, rows), p)

    def test_text_round_trip(self):
        p = parse_presentation("gens x, y; rels x^2, y^3, (x*y)^3;")
        t = todd_coxeter(p)
        assert CosetTable.from_text(t.to_text()) == t

    def test_partial_text(self):
        t = CosetTable.from_text("2 -\n- 1\n")
        assert not t.complete
        with pytest.raises(IncompleteTable):
            t.permutations()

    def test_standardize_is_idempotent(self):
        p = parse_presentation("gens x, y; rels x^2, y^3, (x*y)^5;")
        t = todd_coxeter(p)
        assert t.standardize() == t and t.n_cosets == 60
