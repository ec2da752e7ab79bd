import numpy as np
import pytest
from hypothesis import given, strategies as st

from skewbrace.brace import (a_prime, ann, fix_theta, ideals, invariants, is_bi_skew, is_ideal,
                             is_two_sided, lambda_action, left_nilpotency_class, left_series,
                             optrivial_brace, quotient_brace, soc, star_product, sub_brace,
                             theta_action, trivial_brace, validate_brace)
from skewbrace.catalog import named_example
from skewbrace.census import enumerate_braces
from skewbrace.errors import (AddNotGroup, CircNotGroup, CompatibilityFailed, IdentityMismatch,
                              NotIdeal)
from skewbrace.grouplib import group_by_name
from skewbrace.groups import cyclic_group
from skewbrace.isomorphism import brace_isomorphism, brace_profile

Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]


def test_validate_brace_errors():
    with pytest.raises(AddNotGroup):
        validate_brace([[0, 1], [1, 1]], [[0, 1], [1, 0]])
    with pytest.raises(CircNotGroup):
        validate_brace(Z4, [[0, 1, 2, 3]] * 4)
    # a circle group whose identity is 1, not the additive identity 0
    shifted = [[(a + b - 1) % 4 for b in range(4)] for a in range(4)]
    with pytest.raises(IdentityMismatch):
        validate_brace(Z4, shifted)


def test_compatibility_witness_is_reported():
    # Z/4 addition against a relabeled copy of Z/4 that swaps 1 and 2
    p = [0, 2, 1, 3]
    circ = [[p[(p[a] + p[b]) % 4] for b in range(4)] for a in range(4)]
    with pytest.raises(CompatibilityFailed) as exc:
        validate_brace(Z4, circ)
    a, b, c = exc.value.witness
    lhs = circ[a][Z4[b][c]]
    rhs = Z4[Z4[circ[a][b]][(-a) % 4]][circ[a][c]]
    assert lhs != rhs


def test_z4_radical_values():
    A = named_example("z4_radical")
    assert A.lam.tolist() == [[0, 1, 2, 3], [0, 3, 2, 1], [0, 1, 2, 3], [0, 3, 2, 1]]
    assert star_product(A, range(4), range(4)) == {0, 2}
    assert a_prime(A) == {0, 2}
    assert ann(A) == {0, 2}
    assert left_nilpotency_class(A) == 2
    assert left_series(A)[-1] == {0}
    assert sorted(map(sorted, ideals(A))) == [[0], [0, 1, 2, 3], [0, 2]]
    Q = quotient_brace(A, {0, 2})
    assert Q.n == 2 and Q.is_trivial


def test_trivial_and_optrivial_s3():
    S3 = group_by_name("S3")
    T, O = trivial_brace(S3), optrivial_brace(S3)
    assert T.is_trivial and len(T.fix) == 6
    assert len(fix_theta(T)) == 1            # θ on Triv(G) is conjugation
    assert len(O.fix) == 1 and len(soc(O)) == 1
    assert is_two_sided(T) and is_bi_skew(T)
    assert invariants(T).summary()["trivial"]
    assert left_nilpotency_class(O) is None


def test_lambda_is_action_into_automorphisms():
    for A in enumerate_braces(8).braces:
        lam = lambda_action(A)
        assert lam.shape == (8, 8)


def test_theta_action_orbits_contain_lambda_orbits():
    for A in enumerate_braces(6).braces:
        th = theta_action(A)
        assert th.shape == (36, 6)
        assert A.fix >= fix_theta(A)


def test_not_ideal_raises():
    S3 = group_by_name("S3")
    T = trivial_brace(S3)
    order2 = next(s for s in ideals(optrivial_brace(cyclic_group(4))) if len(s) == 2)
    assert order2 == {0, 2}
    transposition = [S for S in [frozenset({0, x}) for x in range(1, 6)] if not is_ideal(T, S)]
    with pytest.raises(NotIdeal):
        quotient_brace(T, transposition[0])


def test_sub_brace_of_census_member():
    A = named_example("z12_cyclic")
    B, emb = sub_brace(A, sorted(A.fix))
    assert B.n == 6 and emb == [0, 2, 4, 6, 8, 10]


@given(st.sampled_from([(6, k) for k in range(6)] + [(8, k) for k in range(0, 47, 5)]), st.data())
def test_invariants_survive_relabeling(idx, data):
    from conftest import relabel_brace
    n, k = idx
    A = enumerate_braces(n).braces[k]
    perm = [0] + data.draw(st.permutations(range(1, n)))
    B = relabel_brace(A, perm)
    validate_brace(B.add.op, B.circ.op)
    assert brace_profile(A) == brace_profile(B)
    assert invariants(A).summary() == invariants(B).summary()
    phi = brace_isomorphism(A, B)
    assert phi is not None


@given(st.sampled_from(range(47)))
def test_lambda_homomorphism_property(k):
    A = enumerate_braces(8).braces[k]
    lam, circ = A.lam, A.circ.op
    # λ_{a∘b} = λ_a λ_b and each λ_a is additive
    assert np.array_equal(lam[circ], np.stack([[lam[a][lam[b]] for b in range(8)] for a in range(8)]))
    add = A.add.op
    assert all(np.array_equal(lam[a][add], add[np.ix_(lam[a], lam[a])]) for a in range(8))
