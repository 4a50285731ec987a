"""Size caps guarding combinatorial explosions.

Every enumeration in the package is bounded by an explicit cap and fails
loudly with :class:`SizeGuardError` instead of attempting an infeasible
computation.  The defaults cover everything the analyses at desk scale
need (committee spaces up to dimension 4096, full ranking enumeration up
to 9 committees, groups up to a million elements).
"""

import math

from .errors import SizeGuardError

DIMENSION_CAP = 4096
FACTORIAL_CAP = 1_000_000
GROUP_CAP = 1_000_000


def guard_dimension(m: int, n: int, cap: int = DIMENSION_CAP) -> int:
    """Return m**n after checking it against the dimension cap."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    dim = m**n
    if dim > cap:
        raise SizeGuardError(f"committee space dimension m^n = {dim} exceeds cap {cap}")
    return dim


def guard_group(m: int, n: int, cap: int = GROUP_CAP) -> int:
    """Return the group order (m!)^n * n! after checking it against the cap."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    order = math.factorial(m) ** n * math.factorial(n)
    if order > cap:
        raise SizeGuardError(f"group order (m!)^n n! = {order} exceeds cap {cap}")
    return order


def guard_factorial(m: int, n: int, cap: int = FACTORIAL_CAP) -> int:
    """Return (m^n)! after checking it against the ranking-enumeration cap."""
    dim = guard_dimension(m, n)
    total = math.factorial(dim)
    if total > cap:
        raise SizeGuardError(f"ranking count (m^n)! = {total} exceeds cap {cap}")
    return total
