"""Named diagram fixtures: the trap skeleton, its concatenations, and stacks.

The four-strand trap skeleton pins one free strand in its middle gap with
exits only across the two strands that dip under and over it.  Repeating
the skeleton pattern r times (period 2r) and choosing bottom, middle or
top for the free strand at every odd anchor produces the standard family
of classes whose homology sits in degree mu, the number of middle
choices.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from .diagrams import DiscreteRelativeBraid

TRAP = ((2, -1), (1, 2), (-1, -2), (-2, 1))

BOTTOM, MIDDLE, TOP = "b", "m", "t"
_ODD_VALUE = {BOTTOM: Fraction(-3, 2), MIDDLE: Fraction(0), TOP: Fraction(3, 2)}


def concatenated_skeleton(copies: int) -> tuple[tuple[Fraction, ...], ...]:
    """The trap skeleton repeated ``copies`` times, period 2 * copies."""
    out = []
    for pattern in TRAP:
        vals = [Fraction(pattern[i % 2]) for i in range(2 * copies)]
        vals.append(Fraction(pattern[0]))
        out.append(tuple(vals))
    return tuple(out)


def family_diagram(copies: int, choices: str) -> DiscreteRelativeBraid:
    """One free strand: middle at even anchors, chosen gap at odd anchors.

    ``choices`` is a string over 'b', 'm', 't' of length ``copies``.
    """
    if len(choices) != copies or set(choices) - set("bmt"):
        raise ValueError("choices must be a 'b'/'m'/'t' string, one per odd anchor")
    d = 2 * copies
    vals = []
    for i in range(d + 1):
        if i % 2 == 0:
            vals.append(Fraction(0))
        else:
            vals.append(_ODD_VALUE[choices[i // 2]])
    return DiscreteRelativeBraid(d=d, skeleton=concatenated_skeleton(copies), free=(tuple(vals),))


def rectangle_diagram() -> DiscreteRelativeBraid:
    """The one-copy middle class: closure is a rectangle rel two opposite edges."""
    return family_diagram(1, MIDDLE)


ENTRANCE_TRAP = ((-1, -2), (1, 2), (-2, -1), (2, 1))


def entrance_only_diagram() -> DiscreteRelativeBraid:
    """A free strand whose four boundary tangencies all create crossings.

    The bounding strands swap with their outer partners inside every
    segment, so leaving the middle gap in any direction gains two
    crossings and the exit set is empty.
    """
    skeleton = []
    for pattern in ENTRANCE_TRAP:
        skeleton.append((Fraction(pattern[0]), Fraction(pattern[1]), Fraction(pattern[0])))
    return DiscreteRelativeBraid(d=2, skeleton=tuple(skeleton), free=((0, 0, 0),))


def stacked_diagram() -> DiscreteRelativeBraid:
    """Three free strands in three stacked blocks; the closure is a 6-cube.

    Two trap blocks contribute a degree-1 interval pair each and the
    entrance-only block a contractible one, so the relative homology is
    one GF(2) line in degree 2 and the Euler characteristic is +1.
    """
    skeleton = []
    for off, patterns in ((0, TRAP), (10, TRAP), (20, ENTRANCE_TRAP)):
        for pattern in patterns:
            vals = tuple(Fraction(pattern[i % 2] + off) for i in range(2)) + (
                Fraction(pattern[0] + off),
            )
            skeleton.append(vals)
    free = tuple((Fraction(off),) * 3 for off in (0, 10, 20))
    return DiscreteRelativeBraid(d=2, skeleton=tuple(skeleton), free=free)


def lonely_strand_diagram() -> DiscreteRelativeBraid:
    """One free strand with no skeleton at all; improper once augmented."""
    return DiscreteRelativeBraid(d=2, skeleton=(), free=((0, 0, 0),))


_NAMED = {
    "rectangle": rectangle_diagram,
    "entrance-only": entrance_only_diagram,
    "stacked": stacked_diagram,
    "lonely": lonely_strand_diagram,
}


def named_fixture(name: str) -> DiscreteRelativeBraid:
    if name.startswith("family:"):
        choices = name.split(":", 1)[1]
        return family_diagram(len(choices), choices)
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {sorted(_NAMED)} or family:<bmt...>")


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    if len(args) != 1:
        print("usage: python -m braidchi.fixtures <name>", file=sys.stderr)
        print(f"names: {sorted(_NAMED)} or family:<b/m/t string>", file=sys.stderr)
        return 2
    print(named_fixture(args[0]).to_json())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
