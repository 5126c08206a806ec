"""(d, r, n) triples below d + n for which an apolar star configuration is known."""
from typing import Tuple

EXCEPTIONAL_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (3, 5, 3),
    (4, 6, 3),
    (5, 7, 3),
    (3, 6, 4),
    (3, 7, 5),
)


def is_exceptional_triple(d: int, r: int, n: int) -> bool:
    """True for the listed triples and for the family (d, d+1, 2)."""
    return (d, r, n) in EXCEPTIONAL_TRIPLES or (n == 2 and r == d + 1)


def apolar_hsc_expected(d: int, r: int, n: int) -> bool:
    """Whether a generic form of degree d in n+1 variables should admit one."""
    return r >= d + n or is_exceptional_triple(d, r, n)
