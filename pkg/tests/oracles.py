"""Independent brute-force oracles used only by the tests.

These deliberately re-derive results from first principles (naive fixpoint
saturation, explicit category tables) so the production code paths are
checked against a second, unrelated implementation.
"""

from prefdfa import Label

EQ, ST, INC = Label.INDIFFERENT, Label.STRICT, Label.INCOMPARABLE


def naive_closure(triples):
    """Fixpoint saturation of a triple set under the six closure rules.

    Returns the closed set; quadratic in its own output, so keep inputs tiny.
    """
    closed = {(tuple(a), tuple(b), lab) for a, b, lab in triples}
    words = {x for a, b, _ in closed for x in (a, b)}
    closed |= {(x, x, EQ) for x in words}
    changed = True
    while changed:
        changed = False
        fresh = set()
        for a, b, lab in closed:
            if lab in (EQ, INC):
                fresh.add((b, a, lab))
        for a, b, lab1 in closed:
            for c, d, lab2 in closed:
                if b != c:
                    continue
                if lab1 == lab2 and lab1 in (EQ, ST):
                    fresh.add((a, d, lab1))
                elif lab1 is EQ and lab2 in (ST, INC):
                    fresh.add((a, d, lab2))
                elif lab2 is EQ and lab1 in (ST, INC):
                    fresh.add((a, d, lab1))
        new = fresh - closed
        if new:
            closed |= new
            changed = True
    return closed


def closure_conflicts(closed):
    """Pairs for which the closed set asserts two different relations."""
    conflicts = []
    for a, b, lab in closed:
        if lab is ST:
            if (b, a, ST) in closed and a != b:
                conflicts.append(("strict-cycle", a, b))
            if (a, b, EQ) in closed:
                conflicts.append(("strict-vs-indifferent", a, b))
            if (a, b, INC) in closed:
                conflicts.append(("strict-vs-incomparable", a, b))
        elif lab is INC:
            if (a, b, EQ) in closed:
                conflicts.append(("incomparable-vs-indifferent", a, b))
    return conflicts
