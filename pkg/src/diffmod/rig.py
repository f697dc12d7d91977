"""Commutative rig (semiring) backends.

Every scalar in the workbench is a plain Python int; the rig descriptor
supplies the arithmetic.  Four backends:

    bool -- {0, 1} with or/and
    z2   -- integers mod 2
    nat  -- arbitrary-precision naturals
    int  -- arbitrary-precision integers
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple


@dataclass(frozen=True)
class RigDescriptor:
    name: str
    add: Callable[[int, int], int]
    mul: Callable[[int, int], int]
    zero: int = 0
    one: int = 1
    # nonzero elements, when the rig is finite; None means infinite
    nonzero_elements: Optional[Tuple[int, ...]] = None
    # does subtraction exist?
    has_negatives: bool = False
    normalize: Callable[[int], int] = field(default=lambda v: v)

    def is_zero(self, v: int) -> bool:
        return self.normalize(v) == self.zero

    def sum(self, values) -> int:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def encode(self, v: int):
        """Value as it appears in JSON payloads."""
        if self.nonzero_elements is not None:
            return v
        return str(v)

    def decode(self, raw) -> int:
        if isinstance(raw, bool):
            v = int(raw)
        elif isinstance(raw, int):
            v = raw
        elif isinstance(raw, str):
            v = int(raw, 10)
        else:
            raise ValueError("bad rig value: %r" % (raw,))
        v = self.normalize(v)
        if self.name == "nat" and v < 0:
            raise ValueError("negative value in nat rig: %r" % (raw,))
        if self.nonzero_elements is not None and v not in (self.zero,) + self.nonzero_elements:
            raise ValueError("value %r not in rig %s" % (raw, self.name))
        return v


BOOL = RigDescriptor(
    name="bool",
    add=lambda a, b: 1 if (a or b) else 0,
    mul=lambda a, b: 1 if (a and b) else 0,
    nonzero_elements=(1,),
    normalize=lambda v: 1 if v else 0,
)

Z2 = RigDescriptor(
    name="z2",
    add=lambda a, b: (a + b) % 2,
    mul=lambda a, b: (a * b) % 2,
    nonzero_elements=(1,),
    has_negatives=True,
    normalize=lambda v: v % 2,
)

NAT = RigDescriptor(
    name="nat",
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
)

INT = RigDescriptor(
    name="int",
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    has_negatives=True,
)

RIGS = {"bool": BOOL, "z2": Z2, "nat": NAT, "int": INT}


def get_rig(name: str) -> RigDescriptor:
    try:
        return RIGS[name]
    except KeyError:
        raise KeyError("unknown rig %r; choose from %s" % (name, sorted(RIGS)))
