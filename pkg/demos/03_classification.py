#!/usr/bin/env python3
"""Classifying parameter triples and the series dichotomy.

Every triple lands in exactly one of five classes; the Hilbert series is the
commutative-polynomial one precisely for the two non-degenerate classes.
Each classification comes with a change-of-variables witness onto a
canonical representative, verified by transporting the relation space.
"""

from ncquad import QQ_THETA, ParamTriple, classify, complete, hilbert_coeffs

field = QQ_THETA
triples = [
    (0, 0, 0),
    (1, 0, 0),
    (0, 0, 1),
    (1, 1, 1),
    (1, 1, 0),
    (2, -1, -1),
    (1, 2, 1),
    (2, 3, 1),
]

for values in triples:
    t = ParamTriple.make(field, *values)
    cls = classify(t)
    h = hilbert_coeffs(complete(t.presentation(), 5), 5)
    extra = ""
    if cls.alpha is not None:
        extra = f"  alpha = {field.render(cls.alpha)}"
    if cls.pair is not None:
        extra = f"  normalized pair = ({field.render(cls.pair[0])}, {field.render(cls.pair[1])})"
    print(f"{str(values):>12}  ->  {cls.kind.value:<12} series {h}{extra}")
