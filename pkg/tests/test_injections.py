import pytest

from rankcrank.injections import (
    SymbolClass,
    classify,
    pi,
    sigma,
    theta,
    theta1,
    theta2,
    theta3,
    verify_injections,
)
from rankcrank.partitions import enumerate_partitions
from rankcrank.symbols import MDurfeeSymbol, from_symbol, rank_at_least, rank_set_has_m, to_symbol


def sym(m, j, alpha=(), beta=()):
    return MDurfeeSymbol(m=m, j=j, alpha=tuple(alpha), beta=tuple(beta))


def test_classify_p_side():
    assert classify(sym(1, 0), "P") is SymbolClass.P1
    assert classify(sym(1, 2, (2, 1), (2,)), "P") is SymbolClass.P1  # beta1 = j
    assert classify(sym(1, 2, (2, 1), (1,)), "P") is SymbolClass.P2  # beta1 = j-1
    assert classify(sym(0, 1, (1,), ()), "P") is SymbolClass.P2      # empty beta, j = 1
    assert classify(sym(1, 3, (3, 1), (1,)), "P") is SymbolClass.P3  # beta1 <= j-2
    assert classify(sym(1, 2, (1,), (1, 1, 1)), "P") is None         # rank too small


def test_classify_q_side():
    # family membership needs j = 0 or a full-height first bottom entry
    assert classify(sym(2, 0), "Q") is SymbolClass.Q1
    assert classify(sym(1, 1, (2, 1), (1,)), "Q") is SymbolClass.Q1  # len gap <= -1
    assert classify(sym(1, 2, (1, 1), (2, 1, 1)), "Q") is SymbolClass.Q2
    assert classify(sym(1, 2, (3,), (2,)), "Q") is SymbolClass.Q3    # gamma1 = m+j
    assert classify(sym(1, 2, (2,), (1,)), "Q") is None              # m not in rank-set


def test_classify_rejects_bad_side():
    with pytest.raises(ValueError):
        classify(sym(1, 0), "X")


def test_theta1_is_identity_on_p1():
    s = sym(1, 2, (2, 1), (2,))
    assert theta1(s) == s
    with pytest.raises(ValueError):
        theta1(sym(1, 2, (2, 1), (1,)))  # P2, not P1


def test_theta2_worked_example():
    # top loses 1 from every entry, bottom gains 1 and pads with ones
    s = sym(1, 2, (2, 2, 1), (1,))
    assert from_symbol(s).weight == 12
    image = theta2(s)
    assert image == sym(1, 2, (1, 1), (2, 1, 1))
    assert image.weight == 12
    assert classify(image, "Q") is SymbolClass.Q2
    assert sigma(image) == s


def test_theta2_minimal_example():
    # smallest P2 member: empty bottom row, one-column rectangle
    s = sym(0, 1, (1,), ())
    image = theta2(s)
    assert image == sym(0, 1, (), (1,))
    assert sigma(image) == s


def test_theta3_worked_example():
    # rectangle shrinks by one row and one column; both sides gain a
    # leading entry and the bottom pads with ones
    s = sym(1, 3, (3, 1), (1,))
    assert s.weight == 17
    assert from_symbol(s).weight == 17
    image = theta3(s)
    assert image == sym(1, 2, (3, 2), (2, 2, 1, 1))
    assert image.weight == 17
    assert classify(image, "Q") is SymbolClass.Q3
    assert pi(image) == s


def test_theta3_minimal_example():
    # smallest P3 member: bare 2x2 rectangle plus one top entry
    s = sym(0, 2, (1,), ())
    assert s.weight == 5
    image = theta3(s)
    assert image == sym(0, 1, (1,), (1, 1, 1))
    assert image.weight == 5
    assert classify(image, "Q") is SymbolClass.Q3
    assert pi(image) == s


def test_theta_dispatch():
    p1 = sym(1, 2, (2, 1), (2,))
    p2 = sym(1, 2, (2, 2, 1), (1,))
    p3 = sym(1, 3, (3, 1), (1,))
    assert theta(p1) == p1
    assert theta(p2) == theta2(p2)
    assert theta(p3) == theta3(p3)
    with pytest.raises(ValueError):
        theta(sym(1, 2, (1,), (1, 1, 1)))  # outside the rank family


def test_injection_preconditions():
    with pytest.raises(ValueError):
        theta2(sym(1, 2, (2, 1), (2,)))  # P1, not P2
    with pytest.raises(ValueError):
        theta3(sym(1, 2, (2, 1), (1,)))  # P2, not P3
    with pytest.raises(ValueError):
        sigma(sym(1, 2, (1, 1), (2, 2)))  # bottom does not end in 1
    with pytest.raises(ValueError):
        sigma(sym(1, 2, (1, 1), ()))  # empty bottom
    with pytest.raises(ValueError):
        pi(sym(1, 2, (3, 2), (2, 2)))  # missing the double-one marker
    with pytest.raises(ValueError):
        pi(sym(1, 2, (2, 1), (1, 1)))  # gamma1 < m+j, not a theta3 image


def test_theta_image_weights_and_classes_exhaustive():
    for n in range(2, 16):
        for p in enumerate_partitions(n):
            for m in range(0, 5):
                s = to_symbol(p, m)
                cls = classify(s, "P")
                assert (cls is not None) == rank_at_least(s)
                if cls is None:
                    continue
                image = theta(s)
                assert image.weight == n
                assert rank_set_has_m(image)
                q_cls = classify(image, "Q")
                assert q_cls is not None
                assert q_cls.index == cls.index
                if cls is SymbolClass.P2:
                    assert sigma(image) == s
                elif cls is SymbolClass.P3:
                    assert pi(image) == s


def test_theta_injective_small():
    for n in range(2, 16):
        for m in range(0, 5):
            seen = {}
            for p in enumerate_partitions(n):
                s = to_symbol(p, m)
                if classify(s, "P") is None:
                    continue
                image = theta(s)
                assert image not in seen, (tuple(p), m)
                seen[image] = s


def test_verify_injections_suite(table30):
    rep = verify_injections(5, 22, table=table30)
    assert rep.suite == "injections"
    for check in rep.checks:
        assert check.status == "pass", (check.id, check.witness)
    ids = {c.id for c in rep.checks}
    assert "theta-injective" in ids
    assert "count-gap-matches-tables" in ids
    assert rep.ok


def test_verify_injections_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_injections(3, 1)
