"""Building a non-colourable assignment for K_3 □ K_{2,b}.

Run:  python3 demos/bad_assignment_construction.py

The smallest b with chi_l(K_3 □ K_{2,b}) = chi_l(K_3) + 2 is 576.  The
construction gives the two u-copies of K_3 disjoint 4-lists, so there are
24 * 24 = 576 ways to colour them, and builds one w-copy per colouring whose
lists collapse to a constant 2-assignment under exactly that colouring.
"""
import time

from listcolor import complete, construct_bad_assignment, fa_bounds, verify_noncolorable_by_bad_colorings

start = time.perf_counter()
built = construct_bad_assignment(complete(3), 2)
print(f"t = P_l(K_3, 4) = {built.t}; copies needed b = t^2 = {built.b}")
print(f"product has {built.product.base.n} vertices, lists of size {built.list_size}")

verdict = verify_noncolorable_by_bad_colorings(built.product, built.assignment)
print(f"u-side colourings checked: {verdict.u_colorings}; verdict: {verdict.verdict}")
print(f"(took {time.perf_counter() - start:.2f}s; a direct search on {built.product.base.n} vertices is hopeless)")

smaller = built.product.truncate(built.b - 1)
lists = built.assignment.restrict(range(smaller.base.n))
again = verify_noncolorable_by_bad_colorings(smaller, lists)
print(f"\nWith the last copy dropped the verdict is {again.verdict}:")
print(f"  the u-colouring {again.survivor} has no copy that is bad for it,")
print(f"  and its extension is proper: {again.witness.is_proper_l_coloring(smaller.base, lists)}")

report = fa_bounds(complete(3), 2)
print(f"\nbounds on f_2(K_3): {report.lower} <= f <= {report.upper}, exact {report.exact} ({report.exact_tag})")
