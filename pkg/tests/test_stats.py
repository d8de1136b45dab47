import pytest
from hypothesis import given
from hypothesis import strategies as st

from cspkit import bijections
from cspkit import combinat as C
from cspkit.actions import promotion
from cspkit.errors import FamilyMismatch, NegativeExponent
from cspkit.families import LATTICE_PATH, MATCHING, SET_PARTITION, TRIANGULATION, CombObject
from cspkit.families import FamilySpec as F
from cspkit.families import enumerate_family
from cspkit.qpoly import IntPoly, ZERO, named_polynomial, q_binomial, q_catalan
from cspkit.stats import STATS, bivariate_distribution, distribution, statistic

bits = st.lists(st.integers(0, 1), max_size=16).map(tuple)


def maj_by_definition(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def pmaj_by_definition(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] < w[i + 1])


class TestWordStatistics:
    @given(bits)
    def test_maj_and_pmaj(self, w):
        assert C.maj(w) == maj_by_definition(w)
        assert C.pmaj(w) == pmaj_by_definition(w)

    @given(bits)
    def test_inv(self, w):
        assert C.inv(w) == sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    @given(bits)
    def test_depth_is_furthest_excursion(self, w):
        h = 0
        worst = 0
        for b in w:
            h += 1 if b else -1
            worst = max(worst, h)
        assert C.depth(w) == worst

    @given(bits)
    def test_modpeaks_counts_cyclic_peaks(self, w):
        want = len(C.peaks(w)) + (1 if w and w[-1] == 0 else 0)
        assert C.modpeaks(w) == want

    @given(st.integers(1, 7).flatmap(lambda n: st.permutations([0] * n + [1] * n)))
    def test_cyclic_descents_are_shift_invariant(self, w):
        w = tuple(w)
        assert C.cdes_word(w) == C.cdes_word(w[-1:] + w[:-1])
        assert C.cdes_word(w) == sum(1 for i in range(len(w)) if w[i] == 1 and w[(i + 1) % len(w)] == 0)

    def test_depth_example(self):
        assert statistic("DEPTH", CombObject(LATTICE_PATH, (1, 1, 0, 0))) == 2


class TestObjectStatistics:
    def test_short_edges(self):
        m = C.stack_match((0, 0, 1, 1, 0, 0, 1, 0, 1, 1))
        assert sorted(C.edges(m)) == [(1, 4), (2, 3), (5, 10), (6, 7), (8, 9)]
        assert statistic("SHORT_EDGES", CombObject(MATCHING, m)) == 3

    def test_short_edge_wraps_around(self):
        # 1-4 on four vertices is short because 4 and 1 are neighbours
        assert statistic("SHORT_EDGES", CombObject(MATCHING, (4, 3, 2, 1))) == 2

    def test_ears_of_fan(self):
        assert statistic("EARS", CombObject(TRIANGULATION, (6, ((1, 3), (1, 4), (1, 5))))) == 2

    def test_even_edges(self):
        # the even edges are those whose smaller endpoint is even
        for o in enumerate_family(F("NCM", 5)):
            assert statistic("EVEN_EDGES", o) == sum(1 for a, b in C.edges(o.data) if min(a, b) % 2 == 0)

    def test_blocks(self):
        assert statistic("BLOCKS", CombObject(SET_PARTITION, (4, ((1, 4), (2, 3))))) == 2

    def test_loops_and_edges(self):
        o = enumerate_family(F("NCC_EL", 6, e=1, l=2))[0]
        assert statistic("LOOPS", o) == 2 and statistic("PROPER_EDGES", o) == 1

    def test_wrong_family(self):
        with pytest.raises(FamilyMismatch):
            statistic("EARS", CombObject(MATCHING, (2, 1)))
        with pytest.raises(FamilyMismatch):
            statistic("MAJ", CombObject(MATCHING, (2, 1)))
        with pytest.raises(KeyError):
            statistic("NOPE", CombObject(MATCHING, (2, 1)))

    def test_every_statistic_is_registered(self):
        assert set(STATS) == {
            "MAJ", "INV", "DES", "CDES_WORD", "CDES_SYT", "PEAKS", "VALLEYS", "PMAJ", "DEPTH", "MODPEAKS",
            "EVEN_EDGES", "SHORT_EDGES", "BLOCKS", "EARS", "LOOPS", "PROPER_EDGES", "MAJ_SYT", "MAJ_VIA_NCP",
        }


class TestTableauStatistics:
    def test_maj_is_sum_of_descents(self):
        for n in range(1, 7):
            for o in enumerate_family(F("SYT", n)):
                top = set(o.data)
                des = [i for i in range(1, 2 * n) if i in top and i + 1 not in top]
                assert statistic("MAJ_SYT", o) == sum(des)
                assert statistic("DES", o) == len(des)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_cyclic_descents_through_promotion(self, n):
        # 2n is a cyclic descent exactly when 1 is a descent after one promotion step
        for o in enumerate_family(F("SYT", n)):
            p = set(promotion(o).data)
            extra = 1 if (1 in p and 2 not in p) else 0
            assert statistic("CDES_SYT", o) == statistic("DES", o) + extra

    @pytest.mark.parametrize("n", range(2, 7))
    def test_cyclic_descents_rotate_with_promotion(self, n):
        for o in enumerate_family(F("SYT", n)):
            assert statistic("CDES_SYT", o) == statistic("CDES_SYT", promotion(o))


class TestDistributions:
    def test_dyck_maj(self):
        assert distribution(F("DYCK", 3), "MAJ") == q_catalan(3)

    def test_tableau_maj_shifted(self):
        assert distribution(F("SYT", 2), "MAJ_SYT", -2) == IntPoly([1, 0, 1])

    def test_shift_underflow(self):
        with pytest.raises(NegativeExponent):
            distribution(F("SYT", 2), "MAJ_SYT", -3)

    def test_empty_family(self):
        assert distribution(F("NCP_BLOCKS", 3, k=5), "BLOCKS") == ZERO

    def test_modpeaks_candidate(self):
        rows = bivariate_distribution(F("PATHS", 3), "MODPEAKS", "MAJ")
        want = [named_polynomial("AB_CANDIDATE_SN", n=3, k=k) for k in range(len(rows))]
        assert rows == want
        assert rows[0] == ZERO

    @pytest.mark.parametrize("n", range(0, 8))
    def test_balanced_words(self, n):
        spec = F("BW", 2 * n, k=n)
        assert distribution(spec, "MAJ") == q_binomial(2 * n, n)
        assert distribution(spec, "INV") == q_binomial(2 * n, n)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_bounded_depth_paths(self, n):
        for s in range(n + 1):
            spec = F("PATHS_S", n, s=s)
            assert distribution(spec, "PMAJ") == named_polynomial("X_NS", n=n, s=s)
            assert distribution(spec, "MAJ") == named_polynomial("Y_NS", n=n, s=s)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_skew_tableaux_descents_are_peaks(self, n):
        for o in enumerate_family(F("SKEW_SYT", n, s=n)):
            w = o.data[1]
            assert statistic("DES", o) == len(C.peaks(w))

    @pytest.mark.parametrize("n", range(1, 10))
    def test_type_b_narayana_by_valleys(self, n):
        rows = bivariate_distribution(F("PATHS", n), "VALLEYS", "MAJ")
        assert rows == [named_polynomial("NARB", n=n, k=k) for k in range(len(rows))]
        assert len(rows) == n + 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_short_edges_through_tableaux(self, n):
        for k in range(2, n + 1):
            total = ZERO
            for o in enumerate_family(F("NCM_SH", n, k=k)):
                t = bijections.inverse("SYT_TO_NCM", o)
                total = total + IntPoly.monomial(statistic("MAJ_SYT", t) - n)
            assert total == named_polynomial("G_CDES", n=n, k=k)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cyclic_descent_tableaux(self, n):
        for k in range(2, n + 1):
            assert distribution(F("SYT_CDES", n, k=k), "MAJ_SYT", -n) == named_polynomial("G_CDES", n=n, k=k)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_words_by_cyclic_descents(self, n):
        for k in range(1, n + 1):
            assert distribution(F("BW_CDES", n, k=k), "MAJ") == named_polynomial("QBW", n=n, k=k)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_maj_through_partitions(self, n):
        assert distribution(F("NCP", n), "MAJ_VIA_NCP") == q_catalan(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_narayana_by_peaks(self, n):
        for k in range(1, n + 1):
            assert distribution(F("DYCK_PEAKS", n, k=k), "MAJ") == named_polynomial("NAR", n=n, k=k)
