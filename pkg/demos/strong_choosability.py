"""Which graphs have only constant obstructions?

Run:  python3 demos/strong_choosability.py

Give every vertex of a graph with chromatic number k the same k-1 colours and
it cannot be coloured.  Some graphs have no other bad (k-1)-assignments;
they are called strongly chromatic-choosable.  Odd cycles and complete graphs
are, even cycles and paths are not, and joining a complete graph keeps the
property.
"""
from listcolor import (
    check_extension_property,
    complete,
    complete_bipartite,
    cycle,
    is_strongly_chromatic_choosable,
    join,
    path,
)

graphs = {
    "K_4": complete(4),
    "C_5": cycle(5),
    "C_7": cycle(7),
    "K_2 + C_5": join(complete(2), cycle(5)),
    "C_4": cycle(4),
    "P_3": path(3),
    "K_2,3": complete_bipartite(2, 3),
}
for name, g in graphs.items():
    cert = is_strongly_chromatic_choosable(g)
    line = f"{name:10} chi = {cert.chromatic_number}  {cert.verdict:16} via {cert.method}"
    if cert.counterexample is not None:
        line += f"\n{'':10} non-constant bad lists: {[sorted(l) for l in cert.counterexample.lists]}"
    print(line)

ext = check_extension_property(cycle(5), 3, trials=50)
print(f"\nC_5 with 3-lists: every (vertex, colour) pair extends to a colouring "
      f"in all {ext.checked} assignments tried: {ext.holds}")
