import pytest

from strange_duality.catalog import default_catalog
from strange_duality.checks import failures
from strange_duality.frameshape import degree, is_self_dual, parse_frame, trace_power
from strange_duality.moonshine import (
    classify_pairings,
    label_of,
    pairings,
    search_collisions,
    search_sequences,
    unmatched_rows,
    verify_niemeier,
    verify_search,
)

EXTRAS = ["3^2*6*12^2/1^2*2*4^2", "2^4*3^4*4^4*24^4/1^4*6^4*8^4*12^4", "2^2*4^2*5^2*40^2/1^2*8^2*10^2*20^2"]


@pytest.fixture(scope="module")
def found():
    return search_sequences(119)


def test_count_and_extras(found):
    assert len(found) == 25
    labels = [label_of(s) for s in found]
    assert labels.count("extra") == 3
    assert {s for s in found if label_of(s) == "extra"} == {parse_frame(e) for e in EXTRAS}
    assert {s for s in found if label_of(s) != "extra"} == {r.frame for r in default_catalog().self_dual}


def test_small_bounds():
    assert search_sequences(1) == []
    small = search_sequences(13)
    assert parse_frame("13^2/1^2") in small
    assert parse_frame("5^2*10^2/1^2*2^2") in small


def test_monotone(found):
    assert set(search_sequences(40)) <= set(found)


def test_conditions(found):
    for s in found:
        assert is_self_dual(s)
        assert degree(s) == 24
        assert trace_power(s, 1) in (-2, -3, -4)
        assert abs(s.chi(1)) == abs(s.chi(s.order))


def test_sorted_and_no_collisions(found):
    keys = [(s.order, s.items()) for s in found]
    assert keys == sorted(keys)
    assert search_collisions(found) == []


def test_pairing_7b():
    got = {p.pair: p for p in pairings()}
    p = got[("J'10", "Z1,0")]
    assert p.row == "7B"
    assert p.shape == parse_frame("2^3*14^3/1^3*7^3")


def test_unmatched():
    assert sorted(unmatched_rows()) == ["10A", "12A", "15A"]


def test_suites_clean():
    assert failures(classify_pairings()) == []
    assert failures(verify_niemeier()) == []
    assert failures(verify_search()) == []
