"""
Aligned rewritings in the Cayley graph of Z
===========================================

A weak Lipschitz rewriting spells u and v in lock-step, allowing empty
steps on either side.  Its cost is the largest displacement between the
two partial spellings.
"""

from qagroups.automata import Alphabet
from qagroups.geometry import hausdorff_prefix_distance, minimal_weak_k, weak_lipschitz_witness
from qagroups.groups import FreeAbelianGroup

Z = FreeAbelianGroup(Alphabet(("a", "b")), 1, {"a": (1,), "b": (-1,)})

for u, v in [("aa", "aaa"), ("a", "aaa"), ("aa", "bb"), ("ab", "ba")]:
    k = minimal_weak_k(Z, u, v)
    print(f"{u:>4} / {v:<4}  hausdorff={hausdorff_prefix_distance(Z, u, v)}  weak k={k}  "
          f"rewriting: {weak_lipschitz_witness(Z, u, v, k)}")

# below the minimal bound there is no rewriting at all
print(weak_lipschitz_witness(Z, "aa", "aaa", 0))
