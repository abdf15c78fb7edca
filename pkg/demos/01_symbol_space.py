"""Windows of symbol sequences and the weighted metric.

A sequence window stores a finite stretch of a bi-infinite 0/1 sequence.
Distances weight disagreement at index k by 2**-|k|, so the origin
dominates and far-away symbols barely matter. The metric call reports the
truncated sum together with a bound on everything outside the window.
"""

import numpy as np

from unpredictable import BINARY, SequenceWindow, metric_distance, shift

a = SequenceWindow(BINARY, -8, np.array([0, 1, 1, 0, 1, 0, 0, 1, 1,
                                         0, 1, 1, 0, 0, 1, 0, 1], float))
b = SequenceWindow(BINARY, -8, np.array([0, 1, 1, 0, 1, 0, 0, 1, 0,
                                         0, 1, 1, 0, 0, 1, 0, 1], float))

print("window a:", "".join(str(int(v)) for v in a.symbols))
print("window b:", "".join(str(int(v)) for v in b.symbols))

# the two windows differ only at index 0, so the distance is exactly 1
d = metric_distance(a, b, 8)
print(f"d(a, b) truncated at K=8: {d.value}  (tail bound {d.tail_bound:.2e})")

# the same disagreement pushed out to index 5 contributes only 2**-5
sym = a.symbols.copy()
sym[13] = 1.0 - sym[13]
c = SequenceWindow(BINARY, -8, sym)
d_ac = metric_distance(a, c, 8)
print(f"d(a, c) with the flip moved to index 5: {d_ac.value}")

# shifting re-indexes: the value once seen at k+1 is now seen at k.
# the distance after a shift is at most doubled, measured one index wider.
before = metric_distance(a, b, 7).value
after = metric_distance(shift(a), shift(b), 6).value
print(f"expansiveness: d_6 after shift = {after}, 2 * d_7 before = {2 * before}")
