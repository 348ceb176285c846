import random

import pytest

from fds import (
    Anf,
    BudgetExceededError,
    DepGraph,
    DimensionMismatchError,
    ParseError,
    System,
    apply_local,
    compose_word,
    format_system,
    local_map,
    parse_system,
    parse_word,
    phi,
    phi_oracle,
    random_system,
)


def state(*bits):
    s = 0
    for k, b in enumerate(bits):
        s |= b << k
    return s


class TestApplyLocal:
    def test_negation_update(self, sys_fixed_point):
        # f^3 rewrites x3 to 1+x1; at (1,0,0) that is 0, already the case
        assert apply_local(sys_fixed_point, 3, state(1, 0, 0)) == state(1, 0, 0)

    def test_identity_update(self):
        f = System.from_strings("x1", "x2", "x3")
        for s in range(8):
            for i in (1, 2, 3):
                assert apply_local(f, i, s) == s

    def test_first_coordinate(self, sys_polymatrix):
        # 1 + x3 + x1x2 at the origin is 1
        assert apply_local(sys_polymatrix, 1, 0) == state(1, 0, 0)

    def test_only_own_coordinate_changes(self):
        rng = random.Random(11)
        for n in (2, 3, 4):
            for _ in range(20):
                f = random_system(n, rng)
                for i in range(1, n + 1):
                    mask = 1 << (i - 1)
                    for s in range(1 << n):
                        assert apply_local(f, i, s) & ~mask == s & ~mask

    def test_index_out_of_range(self, sys_swap23):
        with pytest.raises(DimensionMismatchError):
            apply_local(sys_swap23, 4, 0)


class TestComposeWord:
    def test_sequential_substitution(self, sys_swap23):
        # x2 receives the old x3, then x3 receives the new x2
        m = compose_word(sys_swap23, (1, 2, 3))
        for s in range(8):
            x3 = (s >> 2) & 1
            assert m[s] == state(0, x3, x3)

    def test_zero_collapse_two_words(self, sys_zero_bound):
        zero = tuple(0 for _ in range(8))
        assert compose_word(sys_zero_bound, (3, 2, 1)) == zero
        assert compose_word(sys_zero_bound, (3, 1, 2)) == zero

    def test_length_one_word_is_apply_local(self, sys_polymatrix):
        for i in (1, 2, 3):
            assert compose_word(sys_polymatrix, (i,)) == local_map(sys_polymatrix, i)

    def test_commuting_swap_same_map(self):
        rng = random.Random(5)
        for _ in range(30):
            n = 3
            f = random_system(n, rng)
            g = phi(f)
            t = 4
            w = tuple(rng.randrange(1, n + 1) for _ in range(t))
            for k in range(t - 1):
                a, b = w[k], w[k + 1]
                if a != b and g.has_edge(a, b):
                    swapped = w[:k] + (b, a) + w[k + 2:]
                    assert compose_word(f, w) == compose_word(f, swapped)


class TestPhi:
    def test_paper_examples(self, sys_f_edge23, sys_g_edge13, sys_swap23,
                             sys_fixed_point, sys_two_fours):
        assert phi(sys_f_edge23).sorted_edges() == [(2, 3)]
        assert phi(sys_g_edge13).sorted_edges() == [(1, 3)]
        assert phi(sys_swap23).sorted_edges() == [(1, 2), (1, 3)]
        assert phi(sys_fixed_point).sorted_edges() == [(2, 3)]
        assert phi(sys_two_fours).sorted_edges() == [(2, 3)]

    def test_symmetric_no_self_loops(self):
        rng = random.Random(13)
        for _ in range(30):
            g = phi(random_system(3, rng))
            for i, j in g.edges:
                assert i < j


class TestPhiOracle:
    def test_agrees_on_paper_example(self, sys_f_edge23):
        assert phi_oracle(sys_f_edge23) == phi(sys_f_edge23)

    def test_constants_give_complete_graph(self):
        f = System.from_updates([Anf.one(3), Anf.zero(3), Anf.one(3)])
        assert phi_oracle(f) == DepGraph.complete(3)

    def test_random_agreement(self):
        rng = random.Random(17)
        for n in (2, 3, 4):
            for _ in range(25):
                f = random_system(n, rng)
                assert phi_oracle(f) == phi(f)

    def test_refuses_large_n(self):
        f = System.from_updates([Anf.zero(7)] * 7)
        with pytest.raises(BudgetExceededError):
            phi_oracle(f)


class TestSystemFiles:
    def test_roundtrip(self, sys_polymatrix):
        assert parse_system(format_system(sys_polymatrix)) == sys_polymatrix

    def test_comments_and_order(self):
        text = "# demo\nvars: 2\nf2 = x1\n# middle\nf1 = 1 + x2\n"
        f = parse_system(text)
        assert str(f.update(1)) == "1 + x2"
        assert str(f.update(2)) == "x1"

    def test_missing_coordinate(self):
        with pytest.raises(ParseError):
            parse_system("vars: 2\nf1 = x1\n")

    def test_duplicate_coordinate(self):
        with pytest.raises(ParseError):
            parse_system("vars: 2\nf1 = x1\nf1 = x2\nf2 = x2\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_system("f1 = x1\n")


class TestWords:
    def test_parse(self):
        assert parse_word("1, 2,1,3", 3) == (1, 2, 1, 3)

    def test_bad_letter(self):
        with pytest.raises(ParseError):
            parse_word("1,4", 3)

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_word("", 3)
