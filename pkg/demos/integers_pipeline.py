"""
The full pipeline on the integers
=================================

Z with generators a = +1, b = -1 and the dictionary a+ | b+ | ab.  Nothing
is pruned here; the interesting output is the departure table and the
geometry checks on the dictionary.
"""

from qagroups import automata as fa
from qagroups.builtins import builtin
from qagroups.fileformat import dumps
from qagroups.pipeline import prove

s = builtin("z_shortlex")

print(dumps(s))

# words of the dictionary up to length 4
print([fa.format_word(w) for w in fa.enumerate_words(s.dictionary, 4)])

report = prove(s, max_len=5, ball=3, word_cap=8, depth_cap=12)
print(report.render())

# Z is infinite, so m(q, q', g) is a search result rather than a closed form
for stage in report.stages:
    if stage.name == "departure_function":
        print("estimate:", stage.details["estimate"])
