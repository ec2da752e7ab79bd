import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from skewbrace.brace import SkewBrace
from skewbrace.groups import CayleyGroup

# property tests run the same examples every time
settings.register_profile("deterministic", derandomize=True, max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("deterministic")


def relabel_brace(A: SkewBrace, perm) -> SkewBrace:
    """Copy of ``A`` transported along ``perm`` (old -> new, fixing 0)."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(p)
    add = p[A.add.op[np.ix_(inv, inv)]]
    circ = p[A.circ.op[np.ix_(inv, inv)]]
    return SkewBrace(CayleyGroup(add), CayleyGroup(circ), A.name)


@pytest.fixture
def relabel():
    return relabel_brace
