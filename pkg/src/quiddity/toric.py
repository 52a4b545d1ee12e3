"""Rational fans in Z^2, fan blow-ups, and the blow-up census of the plane.

A fan sequence is an integer tuple (a_1, ..., a_N) with a fixed basepoint:
the fan vectors start v_1 = e1, v_2 = e2 and obey v_{i+1} = a_i v_i - v_{i-1}.
Cyclic rotations are counted as distinct, matching the 4 sequences listed
for a single blow-up of the projective plane.  Sequences reachable by n
blow-ups from (-1, -1, -1) are closed under rotation (re-basing the fan at
any cone rotates the sequence), so each enumeration level is rotation-closed.
"""

from __future__ import annotations

from typing import Sequence

from .formulas import catalan, Q_nk

Vec = tuple[int, int]

P2_SEQUENCE = (-1, -1, -1)

DEFAULT_BLOWUP_BOUND = 6


def _det(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def winding_index(vectors: Sequence[Vec]) -> int:
    """Number of counterclockwise turns of the cyclic vector sequence.

    Each consecutive turn is in (0, pi) because consecutive determinants are
    positive, so the index equals the number of times the rotating direction
    passes the positive x-axis.  Computed exactly from signs; no floats.
    """
    crossings = 0
    n = len(vectors)
    for i in range(n):
        u, v = vectors[i], vectors[(i + 1) % n]
        if v[1] == 0 and v[0] > 0:
            crossings += not (u[1] == 0 and u[0] > 0)
        elif u[1] < 0 and v[1] > 0:
            crossings += 1
    return crossings


def fan_from_sequence(a: Sequence[int]) -> tuple[Vec, ...]:
    """Generate v_1 = e1, v_2 = e2, v_{i+1} = a_i v_i - v_{i-1} and verify
    cyclic closure.  Closure failure means `a` does not solve the matrix
    equation with +Id, and is rejected."""
    n = len(a)
    if n < 3:
        raise ValueError("a fan needs at least 3 vectors")
    vecs: list[Vec] = [(1, 0), (0, 1)]
    for i in range(1, n - 1):
        x1, y1 = vecs[-1]
        x0, y0 = vecs[-2]
        vecs.append((a[i] * x1 - x0, a[i] * y1 - y0))
    x1, y1 = vecs[-1]
    x0, y0 = vecs[-2]
    closure_1 = (a[n - 1] * x1 - x0, a[n - 1] * y1 - y0)
    closure_2 = (
        a[0] * closure_1[0] - x1,
        a[0] * closure_1[1] - y1,
    )
    if closure_1 != (1, 0) or closure_2 != (0, 1):
        raise ValueError(
            f"sequence {tuple(a)} does not close up into a fan "
            f"(v_{{N+1}}={closure_1}, v_{{N+2}}={closure_2})"
        )
    for i in range(n):
        assert _det(vecs[i], vecs[(i + 1) % n]) == 1
    return tuple(vecs)


def is_complete_fan(a: Sequence[int]) -> bool:
    """True iff the sequence closes up and the vectors wind exactly once."""
    try:
        vecs = fan_from_sequence(a)
    except ValueError:
        return False
    return winding_index(vecs) == 1


def fan_blow_up(a: Sequence[int], k: int) -> tuple[int, ...]:
    """Insert the ray v_k + v_{k+1}: the sequence gains a 1 between positions
    k and k+1 (1-based, cyclic) and both neighbors increase by 1."""
    a = tuple(a)
    n = len(a)
    if not 1 <= k <= n:
        raise ValueError(f"position {k} out of range 1..{n}")
    if k < n:
        return a[: k - 1] + (a[k - 1] + 1, 1, a[k] + 1) + a[k + 1 :]
    return (a[0] + 1,) + a[1:-1] + (a[-1] + 1, 1)


def negative_blow_up(a: Sequence[int], k: int) -> tuple[int, ...]:
    """Insert a -1 between positions k and k+1, decrementing both neighbors
    (the 'negative version' of the blow-up; inverse of remove_minus_one)."""
    a = tuple(a)
    n = len(a)
    if not 1 <= k <= n:
        raise ValueError(f"position {k} out of range 1..{n}")
    if k < n:
        return a[: k - 1] + (a[k - 1] - 1, -1, a[k] - 1) + a[k + 1 :]
    return (a[0] - 1,) + a[1:-1] + (a[-1] - 1, -1)


def remove_minus_one(a: Sequence[int], k: int) -> tuple[int, ...]:
    """Delete the -1 at position k (1-based), incrementing its neighbors."""
    a = tuple(a)
    n = len(a)
    if a[k - 1] != -1:
        raise ValueError(f"position {k} of {a} is not -1")
    out = list(a)
    out[(k - 2) % n] += 1
    out[k % n] += 1
    del out[k - 1]
    return tuple(out)


def rotations(a: Sequence[int]) -> set[tuple[int, ...]]:
    a = tuple(a)
    return {a[i:] + a[:i] for i in range(len(a))}


def enumerate_blowups(n: int, *, bound: int = DEFAULT_BLOWUP_BOUND) -> set[tuple[int, ...]]:
    """All marked-fan sequences reachable by n blow-ups of the plane fan.

    Each level applies the blow-up at every cyclic position and closes under
    rotation (the linear insertion rule alone never places the new 1 first,
    but re-basing the fan does).
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > bound:
        raise ValueError(
            f"n={n} exceeds the configured bound {bound}; "
            f"pass a larger bound= explicitly if you really want this"
        )
    frontier: set[tuple[int, ...]] = {P2_SEQUENCE}
    for _ in range(n):
        nxt: set[tuple[int, ...]] = set()
        for a in frontier:
            for k in range(1, len(a) + 1):
                nxt.update(rotations(fan_blow_up(a, k)))
        frontier = nxt
    return frontier


def classify_type(a: Sequence[int]) -> str:
    """Classify a blow-up sequence into the four mutually exclusive patterns:
    (a) all positive; (b) one -1 with non-negative neighbors, rest positive;
    (c) two adjacent zeros, rest positive; (d) one zero, rest positive."""
    a = tuple(a)
    n = len(a)
    if any(v <= -2 for v in a):
        raise ValueError(f"{a} is not a blow-up of the plane fan")
    minus = [i for i, v in enumerate(a) if v == -1]
    zeros = [i for i, v in enumerate(a) if v == 0]
    if len(minus) == 1:
        (i,) = minus
        neighbors = {(i - 1) % n, (i + 1) % n}
        if all(a[j] >= 0 for j in neighbors) and all(
            a[j] > 0 for j in range(n) if j != i and j not in neighbors
        ):
            return "b"
        raise ValueError(f"{a} is not a blow-up of the plane fan")
    if minus:
        raise ValueError(f"{a} is not a blow-up of the plane fan")
    if not zeros:
        return "a"
    if len(zeros) == 1:
        return "d"
    if len(zeros) == 2:
        i, j = zeros
        if (j - i) % n == 1 or (i - j) % n == 1:
            return "c"
    raise ValueError(f"{a} is not a blow-up of the plane fan")


def type_census(n: int, *, bound: int = DEFAULT_BLOWUP_BOUND) -> dict[str, int]:
    """Count the enumerated blow-up sequences by type."""
    census = {"a": 0, "b": 0, "c": 0, "d": 0}
    for a in enumerate_blowups(n, bound=bound):
        census[classify_type(a)] += 1
    return census


def expected_type_census(n: int) -> dict[str, int]:
    """Closed forms for the per-type counts.

    Type (a) is Q_{n+1,n-2}; (b) is (n+3) C_n.  The (c) and (d) reductions
    delete the zero block, so they need the reduced length to be at least 3:
    (c) = (n+3) C_{n-1} for n >= 2 and (d) = (n+3)(C_n - 2 C_{n-1}) for
    n >= 3; below those sizes the actual counts are 0 (at n = 1 all four
    sequences contain a -1).
    """
    return {
        "a": Q_nk(n + 1, 1),
        "b": (n + 3) * catalan(n),
        "c": (n + 3) * catalan(n - 1) if n >= 2 else 0,
        "d": (n + 3) * (catalan(n) - 2 * catalan(n - 1)) if n >= 3 else 0,
    }
