"""Walk through the six skew braces of order 6: tables, fixed points and both graphs."""

from skewbrace import enumerate_braces, lambda_graph, theta_graph
from skewbrace.graphs import ascii_graph
from skewbrace.grouplib import identify

report = enumerate_braces(6)
print(f"{len(report)} skew braces of order 6 ({report.seconds:.2f} s)\n")
for A in report.braces:
    lg, tg = lambda_graph(A), theta_graph(A)
    print(f"{A.name}: (A,+) = {identify(A.add)[1]}, (A,∘) = {identify(A.circ)[1]}, |Fix| = {len(A.fix)}")
    print(f"  Λ {lg.shape():<8} {ascii_graph(lg)}")
    print(f"  Θ {tg.shape():<8} {ascii_graph(tg)}")
