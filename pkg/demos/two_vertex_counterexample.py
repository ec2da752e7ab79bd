"""The two order-12 braces whose Θ-graph is two disconnected vertices.

Both have additive group A4.  Their θ-orbits have sizes 1, 3 and 8, and
3 and 8 are coprime, so Θ has no edge.
"""

from skewbrace import enumerate_braces, theta_graph
from skewbrace.graphs import theta_orbits
from skewbrace.grouplib import identify

for n in range(1, 13):
    for A in enumerate_braces(n).braces:
        if theta_graph(A).shape() == "K1 + K1":
            print(f"{A.name:10} + = {identify(A.add)[1]:4} ∘ = {identify(A.circ)[1]:6} "
                  f"θ-orbit sizes {sorted(theta_orbits(A).sizes)}")
