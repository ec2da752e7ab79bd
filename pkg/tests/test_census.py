import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skewbrace.brace import validate_brace
from skewbrace.census import (BraceSummary, _census, braces_with_additive_group, canonical_circ,
                              enumerate_braces, holomorph, summarize)
from skewbrace.errors import BraceError, BudgetExceeded, UnsupportedOrder
from skewbrace.grouplib import group_by_name
from skewbrace.groups import cyclic_group, relabel
from skewbrace.isomorphism import aut_array, brace_isomorphism

# OEIS A287865, skew braces of order n
KNOWN_TOTALS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 1, 6: 6, 7: 1, 8: 47, 9: 4, 10: 6, 11: 1, 12: 38}


def brute_force_braces(G):
    """Every brace on the table of ``G`` via all maps ``a -> λ_a`` in Aut(G), up to isomorphism."""
    n = G.order
    auts = aut_array(G)
    op = G.op
    found = []
    for choice in itertools.product(range(len(auts)), repeat=n - 1):
        lam = np.vstack([np.arange(n)] + [auts[k] for k in choice])
        circ = op[np.arange(n)[:, None], lam]
        try:
            B = validate_brace(op, circ)
        except BraceError:
            continue
        if all(brace_isomorphism(B, C) is None for C in found):
            found.append(B)
    return found


@pytest.mark.parametrize("n", sorted(KNOWN_TOTALS))
def test_census_totals(n):
    assert len(enumerate_braces(n)) == KNOWN_TOTALS[n]


@pytest.mark.parametrize("name", ["C4", "C2xC2", "C6", "S3", "C8", "C5"])
def test_census_matches_brute_force(name):
    G = group_by_name(name)
    fast = braces_with_additive_group(G)
    slow = brute_force_braces(G)
    assert len(fast) == len(slow)
    for B in slow:
        assert sum(brace_isomorphism(B, C) is not None for C in fast) == 1


def test_per_group_counts():
    def counts(n):
        r = enumerate_braces(n)
        out = {}
        for name in r.additive_names:
            out[name] = out.get(name, 0) + 1
        return out

    assert counts(4) == {"C4": 2, "C2xC2": 2}
    assert counts(6) == {"C6": 2, "S3": 4}


def test_holomorph_orders():
    assert holomorph(cyclic_group(2)).order == 2
    assert holomorph(cyclic_group(3)).order == 6
    H = holomorph(group_by_name("S3"))
    assert H.order == 36 and H.as_group().order == 36


def test_census_members_are_pairwise_non_isomorphic():
    for n in (4, 6, 8):
        braces = enumerate_braces(n).braces
        for A, B in itertools.combinations(braces, 2):
            assert brace_isomorphism(A, B) is None, (A.name, B.name)


@settings(max_examples=10)
@given(st.sampled_from(["C4", "C2xC2", "S3", "C6", "D8", "Q8"]), st.data())
def test_search_is_label_independent(name, data):
    G = group_by_name(name)
    perm = [0] + data.draw(st.permutations(range(1, G.order)))
    assert len(braces_with_additive_group(relabel(G, perm))) == len(braces_with_additive_group(G))


def test_canonical_circ_is_an_aut_invariant():
    G = group_by_name("C2xC2")
    auts = aut_array(G)
    for B in braces_with_additive_group(G):
        key = canonical_circ(B.circ.op, auts)
        for s in auts:
            inv = np.argsort(s)
            moved = s[B.circ.op[np.ix_(inv, inv)]]
            assert canonical_circ(moved, auts) == key


def test_unsupported_orders_and_budget():
    for n in (0, 13, 17):
        with pytest.raises(UnsupportedOrder):
            enumerate_braces(n)
    with pytest.raises(UnsupportedOrder):
        enumerate_braces(17, allow_extended=True)
    with pytest.raises(BudgetExceeded):
        enumerate_braces(8, max_nodes=5)


def test_report_structure():
    r = enumerate_braces(6)
    d = r.as_dict()
    assert d["count"] == 6 and len(d["braces"]) == 6
    assert [b.name for b in r.braces] == [f"SB(6,{k})" for k in range(6)]
    s = summarize(0, r.braces[0])
    assert isinstance(s, BraceSummary) and s.index == 0


def test_census_is_deterministic():
    a = enumerate_braces(8).as_dict()
    _census.cache_clear()
    b = enumerate_braces(8).as_dict()
    a.pop("seconds"), b.pop("seconds")
    assert a == b


@pytest.mark.slow
def test_order_16_extended():
    t0 = time.perf_counter()
    r = enumerate_braces(16, allow_extended=True)
    assert len(r) == 1605
    assert time.perf_counter() - t0 < 120
