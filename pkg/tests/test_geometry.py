import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import cnfs, min_hamming_oracle, random_clause, random_cnf
from muclab.constructions import gen_horn_chain, gen_parity3, worked_example
from muclab.core import Clause, Cnf, is_horn
from muclab.errors import CyclicOrder, NotHorn
from muclab.geometry import (clause_cycle, cnf_inner_harmony, cnf_inner_product,
                             falsifying_cube, horn_order, inner_harmony,
                             inner_product, phase_difference, topological_order)
from muclab.solvers import brute_force_sat, is_muc_deletion


def C(*lits):
    return Clause.from_ints(lits)


class TestCubes:
    def test_cycle(self):
        assert clause_cycle(C(1, -2, -3)) == 3
        assert clause_cycle(Clause(())) == 0
        assert clause_cycle(C(1)) == 1

    def test_falsifying_cube(self):
        assert falsifying_cube(C(1, -2, -3)).as_dict() == {1: False, 2: True, 3: True}
        assert falsifying_cube(C(-3)).as_dict() == {3: True}
        assert len(falsifying_cube(Clause(()))) == 0


class TestPhaseDifference:
    def test_opposed_pair(self):
        assert phase_difference(C(1, -2), C(2, -1)) == 2

    def test_self_zero(self):
        c = C(1, -2, 3)
        assert phase_difference(c, c) == 0

    def test_disjoint_vars_zero(self):
        assert phase_difference(C(1, -2, -3), C(1, 4, 5)) == 0

    def test_matches_hamming_oracle(self):
        rng = random.Random(17)
        for _ in range(400):
            n = rng.randint(1, 8)
            a = random_clause(rng, n)
            b = random_clause(rng, n)
            assert phase_difference(a, b) == min_hamming_oracle(a, b)


class TestInnerProduct:
    def test_opposite_units(self):
        assert not inner_product(C(1), C(-1))

    def test_shared_var(self):
        assert inner_product(C(1, 2), C(-1))

    def test_empty_clause(self):
        assert not inner_product(Clause(()), C(1))

    def test_matches_sat_oracle(self):
        rng = random.Random(29)
        for _ in range(400):
            n = rng.randint(1, 6)
            a, b = random_clause(rng, n), random_clause(rng, n)
            expect = brute_force_sat(Cnf((a, b), n)).satisfiable
            assert inner_product(a, b) == expect


class TestInnerHarmony:
    def test_opposite_units(self):
        assert inner_harmony(C(1), C(-1))

    def test_correlated_pair(self):
        assert not inner_harmony(C(1, -2, -3), C(1, 4, 5))

    def test_cut_result_pair(self):
        assert inner_harmony(C(1, -2, -3), C(1, 4, 5, 2))

    def test_bridge_to_phase(self):
        rng = random.Random(31)
        for _ in range(400):
            n = rng.randint(1, 8)
            a, b = random_clause(rng, n), random_clause(rng, n)
            assert inner_harmony(a, b) == (phase_difference(a, b) >= 1)

    def test_matches_enumeration(self):
        rng = random.Random(37)
        for _ in range(200):
            n = rng.randint(1, 6)
            a, b = random_clause(rng, n), random_clause(rng, n)
            common_falsifier = any(
                (bits & a.cube_mask) == a.cube_fix and (bits & b.cube_mask) == b.cube_fix
                for bits in range(1 << n))
            assert inner_harmony(a, b) == (not common_falsifier)


class TestCnfLevel:
    def test_product_is_sat(self):
        assert cnf_inner_product(gen_parity3("odd", (1, 2, 3)).cnf)
        assert not cnf_inner_product(Cnf.from_ints([(1,), (-1,)]))

    def test_harmony_on_orthogonal_output(self):
        assert cnf_inner_harmony(worked_example("chain-orthogonal"))

    def test_harmony_fails_on_chain_input(self):
        assert not cnf_inner_harmony(worked_example("chain"))

    def test_small_cnfs_trivially_harmonic(self):
        assert cnf_inner_harmony(Cnf.from_ints([(1, 2)]))
        assert cnf_inner_harmony(Cnf((), 1))

    @given(cnfs(4, max_clauses=5))
    @settings(max_examples=60)
    def test_harmony_matches_pairwise(self, f):
        pairwise = all(inner_harmony(a, b)
                       for a, b in itertools.combinations(f.clauses, 2))
        assert cnf_inner_harmony(f) == pairwise


class TestHornOrder:
    def test_chain_path(self):
        g = horn_order(gen_horn_chain(2))
        # clause i+1 consumes the head of clause i
        assert g.edges == frozenset({(1, 0), (2, 1), (3, 2)})
        assert topological_order(g) == [3, 2, 1, 0]

    def test_single_fact(self):
        g = horn_order(Cnf.from_ints([(1,)]))
        assert g.edges == frozenset() and topological_order(g) == [0]

    def test_two_cycle(self):
        g = horn_order(Cnf.from_ints([(1, -2), (2, -1)]))
        assert (0, 1) in g.edges and (1, 0) in g.edges
        with pytest.raises(CyclicOrder):
            topological_order(g)

    def test_non_horn_rejected(self):
        with pytest.raises(NotHorn):
            horn_order(Cnf.from_ints([(1, 2)]))

    def test_ties_broken_by_index(self):
        g = horn_order(Cnf.from_ints([(1,), (2,)]))
        assert topological_order(g) == [0, 1]


from conftest import horn_mucs_4vars


class TestHornMucStructure:
    def test_pairwise_phase_small_exhaustive(self):
        mucs = horn_mucs_4vars()
        assert len(mucs) > 0
        for f in mucs:
            for a, b in itertools.combinations(f.clauses, 2):
                assert phase_difference(a, b) <= 1

    def test_sharing_graph_connected(self):
        # edges need a shared variable occurring positively in one endpoint
        for f in horn_mucs_4vars():
            m = len(f.clauses)
            adj = {i: set() for i in range(m)}
            for i, j in itertools.combinations(range(m), 2):
                a, b = f.clauses[i], f.clauses[j]
                shared = set(a.vars()) & set(b.vars())
                for v in shared:
                    pos = any(l.var == v and l.polarity for l in a.literals + b.literals)
                    if pos:
                        adj[i].add(j)
                        adj[j].add(i)
                        break
            seen = {0}
            stack = [0]
            while stack:
                for nxt in adj[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            assert seen == set(range(m))

    def test_randomized_horn_mucs(self):
        from muclab.solvers import shrink_to_muc, horn_sat
        rng = random.Random(41)
        found = 0
        while found < 100:
            f = random_cnf(rng, rng.randint(3, 10), rng.randint(6, 18), max_width=3)
            if not is_horn(f) or horn_sat(f).satisfiable:
                continue
            core = shrink_to_muc(f, solver="horn")
            if not is_muc_deletion(core, solver="horn").is_muc:
                continue
            found += 1
            for a, b in itertools.combinations(core.clauses, 2):
                assert phase_difference(a, b) <= 1
