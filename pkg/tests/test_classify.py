import itertools
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clsets.classify import (
    canonical_form,
    classify,
    ekr_bound_check,
    enumerate_cl_brute,
    enumerate_ekr_2k,
    is_intersecting,
    pair_choice_families,
    pencil_point,
    random_intersecting_family,
    theorem_families,
    verify_classification,
)
from clsets.clkernel import (
    Family,
    family_block,
    full_check,
    point_pencil,
    verdict_table,
)
from clsets.errors import DivisibilityError, DomainError, ResourceError
from clsets.setcore import binom, enumerate_partitions


def pair_choice_oracle(k):
    """Parameter-1 classes for n = 2k straight from the definition: one set per complementary pair."""
    n = 2 * k
    subsets = list(itertools.combinations(range(n), k))
    pairs = {frozenset([s, tuple(sorted(set(range(n)) - set(s)))]) for s in subsets}
    out = set()
    for choice in itertools.product(*[sorted(p) for p in pairs]):
        out.add(Family.from_subsets(n, k, choice).bits)
    return out


def orbit_oracle(families):
    """Orbits by sweeping each family over all relabelings."""
    n = families[0].n
    perms = list(itertools.permutations(range(n)))
    left = {f.bits: f for f in families}
    sizes = []
    while left:
        f = next(iter(left.values()))
        orbit = {f.relabel(p).bits for p in perms}
        sizes.append(len(orbit))
        for b in orbit:
            left.pop(b, None)
    return sorted(sizes)


class TestBrute:
    def test_four_two(self):
        found = {f.bits for f in enumerate_cl_brute(4, 2)}
        expected = pair_choice_oracle(2) | {0, Family.full(4, 2).bits}
        assert len(expected) == 10
        assert found == expected

    def test_six_two(self):
        found = enumerate_cl_brute(6, 2)
        assert len(found) == 14
        assert {f.bits for f in found} == theorem_families(6, 2)

    def test_trivial_only(self):
        assert [f.bits for f in enumerate_cl_brute(3, 3)] == [0, 1]

    def test_six_three_matches_definition(self):
        found = {f.bits for f in enumerate_cl_brute(6, 3)}
        assert found == pair_choice_oracle(3) | {0, Family.full(6, 3).bits}

    def test_k_one(self):
        assert len(enumerate_cl_brute(5, 1)) == 32

    def test_threads_do_not_change_output(self):
        assert enumerate_cl_brute(6, 2, threads=3) == enumerate_cl_brute(6, 2)

    def test_bounds(self):
        with pytest.raises(ResourceError):
            enumerate_cl_brute(12, 2)
        with pytest.raises(DivisibilityError):
            enumerate_cl_brute(5, 2)

    @pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (4, 2)])
    def test_members_pass_and_non_members_fail(self, n, k):
        N = binom(n, k)
        found = enumerate_cl_brute(n, k)
        members = {f.bits for f in found}
        for f in found:
            rep = full_check(f)
            assert rep.is_cl
            assert rep.size == rep.parameter * binom(n - 1, k - 1)
        rng = np.random.default_rng(7)
        codes = [int(c) for c in rng.integers(0, 1 << N, size=10_000) if int(c) not in members]
        V = verdict_table(n, k, family_block(N, 0, 1 << N)[codes])
        assert not V.any()


class TestCanonicalForm:
    def test_empty(self):
        c = canonical_form(Family.empty(6, 2))
        assert c.canonical_bits == "0" * 15
        assert c.stabilizer_order == 720

    def test_pencils_one_orbit(self):
        forms = {canonical_form(point_pencil(6, 2, p)).canonical_bits for p in range(6)}
        assert len(forms) == 1

    def test_triangle_vs_star(self):
        triangle = Family.from_subsets(4, 2, [[0, 1], [0, 2], [1, 2]])
        star = Family.from_subsets(4, 2, [[0, 1], [0, 2], [0, 3]])
        assert canonical_form(triangle).canonical_bits != canonical_form(star).canonical_bits

    def test_canonical_family_is_in_orbit(self):
        f = Family(5, 2, 0b1011000110)
        c = canonical_form(f)
        assert canonical_form(c.canonical_family).canonical_bits == c.canonical_bits
        assert c.canonical_family.bits <= max(f.relabel(p).bits for p in itertools.permutations(range(5)))

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from([(6, 2), (6, 3), (5, 2), (4, 2)]), st.randoms(use_true_random=False))
    def test_class_function(self, nk, rnd):
        n, k = nk
        f = Family(n, k, rnd.getrandbits(binom(n, k)))
        base = canonical_form(f).canonical_bits
        for _ in range(100):
            perm = list(range(n))
            rnd.shuffle(perm)
            assert canonical_form(f.relabel(perm)).canonical_bits == base

    def test_bound(self):
        with pytest.raises(ResourceError):
            canonical_form(Family.empty(11, 1))

    def test_chunked_sweep(self):
        # n = 9 goes through the chunked permutation stream
        f = point_pencil(9, 3, 4)
        c = canonical_form(f)
        assert c.canonical_bits == canonical_form(point_pencil(9, 3, 0)).canonical_bits
        assert c.stabilizer_order == factorial(8)


class TestClassification:
    def test_six_two(self):
        res = verify_classification(6, 2)
        assert res.total == 14 and res.matches_theorem
        assert res.counts_by_parameter == {0: 1, 1: 6, 2: 6, 3: 1}

    def test_outside_range(self):
        with pytest.raises(DomainError):
            verify_classification(6, 3)
        with pytest.raises(DomainError):
            verify_classification(6, 1)

    @pytest.mark.parametrize("n,k", [(6, 2), (4, 2), (6, 3), (3, 3), (5, 1)])
    def test_census_symmetry(self, n, k):
        counts = classify(n, k).counts_by_parameter
        assert set(counts) <= set(range(n // k + 1))
        for x, c in counts.items():
            assert counts.get(n // k - x) == c

    def test_orbits_up_to_iso(self):
        res = classify(4, 2, up_to_iso=True)
        assert {x: len(o) for x, o in res.orbits_by_parameter.items()} == {0: 1, 1: 2, 2: 1}


class TestEKR2k:
    def test_small(self):
        c1, c2 = enumerate_ekr_2k(1), enumerate_ekr_2k(2)
        assert (c1.total, c1.nonisomorphic) == (2, 1)
        assert (c2.total, c2.nonisomorphic) == (8, 2)
        assert sorted(o.orbit_size for o in c2.orbits) == [4, 4]

    def test_k3_against_oracle(self):
        c = enumerate_ekr_2k(3)
        assert c.total == 2 ** binom(5, 2) == 1024
        assert {f.bits for f in c.families} == pair_choice_oracle(3)
        sizes = orbit_oracle(c.families)
        assert c.nonisomorphic == len(sizes)
        assert sorted(o.orbit_size for o in c.orbits) == sizes
        assert sum(o.orbit_size for o in c.orbits) == c.total

    def test_pair_choices_meet_every_partition_once(self):
        parts = list(enumerate_partitions(6, 3))
        for f in pair_choice_families(3):
            assert is_intersecting(f)
            assert all(sum(b in f for b in p) == 1 for p in parts)

    def test_bound(self):
        with pytest.raises(ResourceError):
            enumerate_ekr_2k(4)


class TestEKRBound:
    def test_pencil_equality(self):
        f = point_pencil(7, 3, 0)
        assert f.size == binom(6, 2) == 15
        assert ekr_bound_check(7, 3, [f])

    def test_single(self):
        assert ekr_bound_check(7, 3, [Family(7, 3, 1 << 9)])

    def test_non_pencil_at_n_equals_2k(self):
        non_pencils = [f for f in pair_choice_families(3) if pencil_point(f) is None]
        assert non_pencils and non_pencils[0].size == 10
        assert ekr_bound_check(6, 3, non_pencils[:5])

    def test_rejects_non_intersecting(self):
        with pytest.raises(DomainError):
            ekr_bound_check(7, 3, [Family.from_subsets(7, 3, [[0, 1, 2], [3, 4, 5]])])
        with pytest.raises(DomainError):
            ekr_bound_check(5, 3, [])

    def test_random_families(self):
        rng = np.random.default_rng(11)
        fams = [random_intersecting_family(7, 3, rng) for _ in range(2000)]
        assert all(is_intersecting(f) for f in fams)
        assert ekr_bound_check(7, 3, fams)
        assert any(f.size == 15 for f in fams)
