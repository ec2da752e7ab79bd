"""The dihedral-additive brace with cyclic circle group of order 12, and its Yang-Baxter solution."""

from skewbrace import named_example, theta_graph
from skewbrace.graphs import gamma_graph, gamma_hom_image_check
from skewbrace.ybe import solution_of, twist_quotient, verify_ybe

A = named_example("z12_cyclic")
print("Fix:", sorted(A.fix))
print("conjugacy class sizes:", sorted(A.add.classes.sizes))
print("Γ(A,+):", gamma_graph(A.add).summary())
th = theta_graph(A)
print("Θ(A):", th.summary())
img = gamma_hom_image_check(A)
print("image of Γ in Θ:", sorted(img.image_edges), "induced" if img.induced else "not induced")
S = solution_of(A)
print("braid relation holds:", verify_ybe(S).ok)
print("twist quotient size:", twist_quotient(A).size)
