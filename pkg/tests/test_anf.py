import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fds import (
    Anf,
    DimensionMismatchError,
    ParseError,
    TruthTable,
    all_truth_tables,
    anf_to_tt,
    basis_monomials,
    parse_anf,
    tt_to_anf,
)
from fds.anf import monomial_vars


def state(n, *bits):
    # bits listed as (x1, x2, ..., xn)
    s = 0
    for k, b in enumerate(bits):
        s |= b << k
    return s


class TestEval:
    def test_constant_one(self):
        p = Anf.one(3)
        for s in range(8):
            assert p.evaluate(s) == 1

    def test_paper_polynomial(self):
        p = parse_anf("1 + x3 + x1*x2", 3)
        # 1 + 0 + 1*1 = 0 at (1,1,0)
        assert p.evaluate(state(3, 1, 1, 0)) == 0

    def test_single_monomial(self):
        p = parse_anf("x1*x2*x3", 3)
        assert p.evaluate(state(3, 1, 1, 1)) == 1
        assert p.evaluate(state(3, 1, 1, 0)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Anf.one(2).evaluate(7)


class TestArithmetic:
    def test_add_cancels(self):
        p = parse_anf("x1 + x2", 3) + parse_anf("x2 + x3", 3)
        assert p == parse_anf("x1 + x3", 3)

    def test_squarefree_product(self):
        x1 = Anf.var(3, 1)
        assert x1 * x1 == x1

    def test_idempotent_factor(self):
        p = parse_anf("1 + x1", 3)
        assert p * p == p

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatchError):
            Anf.one(2) + Anf.one(3)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 7))
    def test_eval_is_ring_homomorphism(self, pm, qm, s):
        p = Anf(3, frozenset(m for m in range(8) if (pm >> m) & 1))
        q = Anf(3, frozenset(m for m in range(8) if (qm >> m) & 1))
        assert (p + q).evaluate(s) == p.evaluate(s) ^ q.evaluate(s)
        assert (p * q).evaluate(s) == p.evaluate(s) & q.evaluate(s)


class TestSupport:
    def test_paper_first_local(self):
        assert parse_anf("1 + x3 + x1*x2", 3).support() == {1, 2, 3}

    def test_constants(self):
        assert Anf.zero(3).support() == frozenset()
        assert Anf.one(3).support() == frozenset()

    def test_paper_second_local(self):
        assert parse_anf("x2 + x1*x3 + x2*x3", 3).support() == {1, 2, 3}

    def test_flip_outside_support_is_invisible(self):
        rng = random.Random(7)
        for _ in range(50):
            p = Anf(4, frozenset(rng.sample(range(16), rng.randrange(5))))
            outside = set(range(1, 5)) - p.support()
            for s in range(16):
                for k in outside:
                    assert p.evaluate(s) == p.evaluate(s ^ (1 << (k - 1)))


class TestBasisOrder:
    def test_n3_graded_lex(self):
        named = [monomial_vars(m) for m in basis_monomials(3)]
        assert named == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]

    def test_matrix_rows(self):
        rows = [
            ("1 + x3 + x1*x2", (1, 0, 0, 1, 1, 0, 0, 0)),
            ("x2 + x1*x3 + x2*x3", (0, 0, 1, 0, 0, 1, 1, 0)),
            ("1 + x1*x2*x3", (1, 0, 0, 0, 0, 0, 0, 1)),
        ]
        for text, expected in rows:
            assert parse_anf(text, 3).coefficient_row() == expected

    def test_row_is_linear_bijection(self):
        seen = set()
        for pm in range(256):
            p = Anf(3, frozenset(m for m in range(8) if (pm >> m) & 1))
            seen.add(p.coefficient_row())
        assert len(seen) == 256


class TestTruthTableConversion:
    def test_and_gate(self):
        t = TruthTable(2, (0, 0, 0, 1))
        assert tt_to_anf(t) == parse_anf("x1*x2", 2)

    def test_negation(self):
        t = TruthTable(1, (1, 0))
        assert tt_to_anf(t) == parse_anf("1 + x1", 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_roundtrip_exhaustive(self, n):
        for t in all_truth_tables(n):
            assert anf_to_tt(tt_to_anf(t)) == t

    def test_distinct_polynomials_distinct_functions(self):
        tables = {anf_to_tt(Anf(2, frozenset(m for m in range(4) if (pm >> m) & 1)))
                  for pm in range(16)}
        assert len(tables) == 16

    def test_bad_length_rejected(self):
        with pytest.raises(DimensionMismatchError):
            TruthTable(2, (0, 1, 0))


class TestParsing:
    def test_zero(self):
        assert parse_anf("0", 3) == Anf.zero(3)

    def test_whitespace_ignored(self):
        assert parse_anf(" 1+ x1 * x2 ", 2) == parse_anf("1+x1*x2", 2)

    def test_repeats_cancel(self):
        assert parse_anf("x1 + x1", 2) == Anf.zero(2)

    def test_out_of_range_variable(self):
        with pytest.raises(ParseError):
            parse_anf("x4", 3)

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_anf("x1 + y2", 3)

    def test_str_roundtrip(self):
        rng = random.Random(3)
        for _ in range(50):
            p = Anf(4, frozenset(rng.sample(range(16), rng.randrange(6))))
            assert parse_anf(str(p), 4) == p


class TestDimensionCap:
    def test_env_override(self, monkeypatch):
        from fds.errors import DimensionCapError

        monkeypatch.setenv("FDS_MAX_N", "3")
        with pytest.raises(DimensionCapError):
            Anf.zero(4)

    def test_hard_ceiling(self, monkeypatch):
        from fds.errors import DimensionCapError

        monkeypatch.setenv("FDS_MAX_N", "100")
        with pytest.raises(DimensionCapError):
            Anf.zero(29)
