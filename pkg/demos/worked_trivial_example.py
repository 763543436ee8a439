"""
Pruning the full relation over the trivial group
=================================================

The dictionary a+ over the trivial group has R_eps = a+ x a+, presented by
the bimorphism x+y+.  Pruning removes every word padded by a silent circuit
and leaves the single word a.
"""

from qagroups import automata as fa
from qagroups import bimorphism as bim
from qagroups.builtins import builtin
from qagroups.departure import departure_function, replay_departure_chain
from qagroups.pruning import prune_structure

s = builtin("trivial")
res = prune_structure(s)

# k counts the states of the trimmed minimal recognizer of x+y+
print("k =", res.k)
print("W states:", res.W.n_states)

# debris per state, as (first-tape-silent, second-tape-silent) sizes
for q, sizes in res.debris_sizes().items():
    print(f"  state {q}: {sizes}")

print("K =", [fa.format_word(w) for w in fa.enumerate_words(res.K, 6)])
print("pruned R_eps =", bim.enumerate_pairs(res.h_pruned, 10))

# departure constants: c states of K, ell = 2k
table = departure_function(res, s.oracle, 5, 12)
print("c =", table.c, " ell =", table.ell)
print("D(0..5) =", table.values())

# the only factorization of the only word
chain = replay_departure_chain(res, s.oracle, table, "", "a", "")
print("chain |y| <= |x'yz'| <= ell|x'y'z'| <= 2c.ell + ell|y'| <= D:", chain["chain"], chain["holds"])
