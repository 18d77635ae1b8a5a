"""When does K_{2,b} stop being 2-choosable?

Run:  python3 demos/folklore_threshold.py

Every bipartite graph is 2-colourable, but list colouring is harsher.  For
K_{2,b} the list chromatic number jumps from 2 to 3 exactly when b reaches 4.
This script finds the jump and prints the obstruction that causes it.
"""
from listcolor import complete_bipartite, find_noncolorable_assignment, is_l_colorable, list_chromatic_number

for b in range(1, 6):
    print(f"chi_l(K_2,{b}) = {list_chromatic_number(complete_bipartite(2, b))}")

g = complete_bipartite(2, 4)
witness = find_noncolorable_assignment(g, 2)
print("\nA 2-assignment of K_2,4 with no proper colouring:")
for v, colours in enumerate(witness.lists):
    side = "A" if v < 2 else "B"
    print(f"  vertex {v} ({side}): {sorted(colours)}")
print("colourable from these lists?", is_l_colorable(g, witness)[0])
print("\nEach of the four ways to colour the A side hits exactly one B vertex's whole list.")
