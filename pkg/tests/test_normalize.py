import itertools
import random

import pytest
from hypothesis import given, strategies as st

from stalmarck.cnf import CnfFormula
from stalmarck.literal import FALSE, TRUE, is_const, lit, lit_str, neg, to_dimacs, var_of
from stalmarck.normalize import (
    BridgeAllocator,
    EmptyClause,
    Triplet,
    encode_clause,
    encode_conjunction,
    normalize,
    triplet_holds,
)

from conftest import eval_triplet_formula, lit_value, random_cnf


@given(st.integers(-1000, 1000).filter(bool))
def test_literal_codes(v):
    l = lit(v)
    assert neg(neg(l)) == l
    assert to_dimacs(l) == v
    assert to_dimacs(neg(l)) == -v
    assert var_of(l) == abs(v)
    assert not is_const(l)


def test_constants():
    assert neg(TRUE) == FALSE
    assert neg(FALSE) == TRUE
    assert is_const(TRUE) and is_const(FALSE)
    with pytest.raises(ValueError):
        lit(0)
    assert lit_str(neg(lit(5)), 3) == "-b5"
    assert lit_str(lit(2), 3) == "x2"


def _values_for(n_orig, alloc_triplets, bits):
    # bottom-up evaluation of bridges defined in order
    values = [None] + list(bits) + [None] * len(alloc_triplets)
    for t in alloc_triplets:
        values[t.x // 2] = (not lit_value(t.y, values)) or lit_value(t.z, values)
    return values


def test_single_literal_clause():
    a = BridgeAllocator(1)
    assert encode_clause([1], a) == lit(1)
    assert a.triplets == []


def test_binary_clause():
    a = BridgeAllocator(2)
    out = encode_clause([1, 2], a)
    b1 = lit(3)
    assert a.triplets == [Triplet(b1, neg(lit(1)), lit(2), 0)]
    assert out == b1
    for bits in itertools.product([False, True], repeat=2):
        values = _values_for(2, a.triplets, bits)
        assert lit_value(out, values) == (bits[0] or bits[1])


def test_ternary_clause():
    a = BridgeAllocator(3)
    out = encode_clause([1, 2, 3], a)
    b1, b2 = lit(4), lit(5)
    assert [t[:3] for t in a.triplets] == [(b1, neg(lit(2)), lit(3)), (b2, neg(lit(1)), b1)]
    assert out == b2
    for bits in itertools.product([False, True], repeat=3):
        values = _values_for(3, a.triplets, bits)
        assert lit_value(out, values) == any(bits)


def test_empty_clause_raises():
    with pytest.raises(EmptyClause):
        encode_clause([], BridgeAllocator(1))


def test_conjunction_single_part():
    a = BridgeAllocator(1)
    assert encode_conjunction([lit(1)], a) == lit(1)
    assert a.triplets == []


@pytest.mark.parametrize("k", [2, 3, 4])
def test_conjunction_truth_table(k):
    a = BridgeAllocator(k)
    parts = [lit(i) for i in range(1, k + 1)]
    out = encode_conjunction(parts, a)
    assert len(a.triplets) == k - 1
    if k == 2:
        b = lit(3)
        assert a.triplets[0][:3] == (b, lit(1), neg(lit(2)))
        assert out == neg(b)
    for bits in itertools.product([False, True], repeat=k):
        values = _values_for(k, a.triplets, bits)
        assert lit_value(out, values) == all(bits)


def test_normalize_single_binary_clause():
    f = normalize(CnfFormula(2, [[1, 2]]))
    assert [t[:3] for t in f.triplets] == [(lit(3), neg(lit(1)), lit(2))]
    assert f.root == lit(3)
    assert (f.num_original_vars, f.num_bridge_vars) == (2, 1)


def test_normalize_contradictory_units():
    f = normalize(CnfFormula(1, [[1], [-1]]))
    b1 = lit(2)
    assert [t[:3] for t in f.triplets] == [(b1, lit(1), lit(1))]
    assert f.root == neg(b1)
    assert not eval_triplet_formula(f, [True])[0]
    assert not eval_triplet_formula(f, [False])[0]


def test_normalize_no_clauses():
    f = normalize(CnfFormula(3, []))
    assert f.triplets == () and f.root == TRUE


def test_normalize_empty_clause():
    f = normalize(CnfFormula(2, [[1], []]))
    assert f.root == FALSE


def test_bridge_numbering_and_definitions():
    rng = random.Random(5)
    for _ in range(50):
        cnf = random_cnf(rng, 6, 12, k_max=4)
        f = normalize(cnf)
        defined = [t.x for t in f.triplets]
        assert all(l % 2 == 0 for l in defined)
        assert sorted(l // 2 for l in defined) == list(range(7, 7 + f.num_bridge_vars))
        assert [t.index for t in f.triplets] == list(range(len(f.triplets)))
        for t in f.triplets:
            assert max(l // 2 for l in t[:3]) <= f.num_vars


def test_linearity():
    rng = random.Random(6)
    for _ in range(100):
        cnf = random_cnf(rng, rng.randint(1, 10), rng.randint(1, 40), k_max=5)
        assert len(normalize(cnf).triplets) <= cnf.num_literals()


def test_determinism():
    cnf = random_cnf(random.Random(9), 8, 30)
    assert normalize(cnf) == normalize(cnf)


def test_equisatisfiable_exhaustive():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 10)
        cnf = random_cnf(rng, n, rng.randint(1, 5 * n))
        f = normalize(cnf)
        for bits in itertools.product([False, True], repeat=n):
            root, values = eval_triplet_formula(f, bits)
            direct = all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in cnf.clauses)
            assert root == direct
            assert all(triplet_holds(t, values) for t in f.triplets)
