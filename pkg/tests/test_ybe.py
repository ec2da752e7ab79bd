import pytest
from hypothesis import given, strategies as st

from skewbrace.catalog import named_example
from skewbrace.census import enumerate_braces
from skewbrace.errors import NotGenerating, NotSubsolution
from skewbrace.graphs import theta_graph, theta_orbits
from skewbrace.ybe import (SolutionMap, brace_closure, generating_subsolution_graph,
                           is_twist_morphism, solution_closure, solution_of,
                           theta_conjugation_identity_check, twist, twist_morphism_partition,
                           twist_quotient, universality_violations, verify_ybe)


def naive_ybe(S):
    n = S.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a, b = S(x, y)
                b, c = S(b, z)
                a, b = S(a, b)
                u, v = S(y, z)
                t, u = S(x, u)
                u, v = S(u, v)
                if (a, b, c) != (t, u, v):
                    return False
    return True


def test_twist_is_a_solution():
    S = twist(4)
    assert S(1, 3) == (3, 1)
    assert verify_ybe(S).ok and S.is_bijective() and S.is_nondegenerate()


def test_trivial_brace_solution_is_conjugation():
    A = named_example("triv_S3")
    S = solution_of(A)
    op, inv = A.add.op, A.add.inverse
    for a in range(6):
        for b in range(6):
            # λ_a = id and ρ_b(a) = -b + a + b
            assert S(a, b) == (b, int(op[op[inv[b], a], b]))


@given(st.sampled_from([(n, k) for n in (4, 6, 8) for k in range({4: 4, 6: 6, 8: 47}[n])]))
def test_vectorized_check_agrees_with_naive_loop(idx):
    n, k = idx
    S = solution_of(enumerate_braces(n).braces[k])
    assert verify_ybe(S).ok == naive_ybe(S) is True


def test_mutated_solution_fails_with_witness():
    S = solution_of(named_example("z4_radical"))
    rho = S.rho.copy()
    rho[1, [0, 1]] = rho[1, [1, 0]]
    bad = SolutionMap(S.n, S.lam, rho)
    res = verify_ybe(bad)
    assert not res.ok and res.witness is not None
    assert not naive_ybe(bad)


def test_theta_identity_on_examples():
    for name in ("z12_cyclic", "z2z4_B2", "optriv_S3"):
        assert theta_conjugation_identity_check(named_example(name)).ok


def test_twist_quotient_sizes():
    assert twist_quotient(named_example("triv_S3")).size == 3
    q = twist_quotient(named_example("z12_cyclic"))
    assert q.is_morphism and q.size == 5


def test_theta_partition_is_the_finest_twist_quotient():
    for n in (4, 6, 8):
        for A in enumerate_braces(n).braces:
            S = solution_of(A)
            assert twist_morphism_partition(S).orbits == theta_orbits(A).orbits
            assert is_twist_morphism(S, theta_orbits(A).orbit_index())


def test_universality_by_brute_force():
    for A in enumerate_braces(4).braces + enumerate_braces(6).braces[:3]:
        assert universality_violations(A, max_target=3) == []


def test_subsolution_errors():
    A = named_example("z12_cyclic")
    with pytest.raises(NotGenerating):
        generating_subsolution_graph(A, {0, 2, 4, 6, 8, 10})
    with pytest.raises(NotSubsolution):
        generating_subsolution_graph(A, {0, 1})


def test_whole_brace_is_a_generating_subsolution():
    A = named_example("z12_cyclic")
    X = set(range(12))
    assert brace_closure(A, {1}) == frozenset(X)
    assert solution_closure(A, X) == frozenset(X)
    g = generating_subsolution_graph(A, X)
    th = theta_graph(A)
    assert g.sizes == th.sizes and g.edges == th.edges
