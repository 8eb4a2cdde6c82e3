"""Bit-vector indices, their two orders, chains and coordinate maps.

An index is a tuple of 0/1 ints of length ``n``.  These label the rows and
columns of the depth-``n`` period matrix; every other module consumes the
combinatorics defined here.  Matrices are laid out in the complete order
(weight first, then left-to-right lexicographic with 0 < 1), ascending.
"""

from itertools import permutations, product

from .errors import DomainError

MAX_DEPTH = 16  # matrices are 2**n square; desk scale is n <= 4

Index = tuple  # tuple of 0/1 ints


def validate_index(i) -> tuple:
    i = tuple(int(b) for b in i)
    if not i:
        raise ValueError("index must have positive length")
    if len(i) > MAX_DEPTH:
        raise ValueError(f"depth {len(i)} exceeds cap {MAX_DEPTH}")
    if any(b not in (0, 1) for b in i):
        raise ValueError(f"index components must be 0 or 1, got {i}")
    return i


def weight(i) -> int:
    """Number of ones of the index."""
    return sum(i)


def precedes(j, i) -> bool:
    """Partial order: j precedes i iff j_t <= i_t componentwise."""
    if len(j) != len(i):
        raise ValueError("indices must have equal length")
    return all(a <= b for a, b in zip(j, i))


def less_than(i, j) -> bool:
    """Strict complete order: compare weights, ties broken lexicographically (0 < 1)."""
    if len(i) != len(j):
        raise ValueError("indices must have equal length")
    wi, wj = weight(i), weight(j)
    if wi != wj:
        return wi < wj
    return i < j


def sort_key(i):
    return (weight(i), i)


def enumerate_indices(n):
    """All indices of depth n, ascending in the complete order."""
    return sorted(product((0, 1), repeat=n), key=sort_key)


def one_slots(i):
    """1-based positions of the ones, increasing."""
    return tuple(s + 1 for s, b in enumerate(i) if b == 1)


def pos(i, i_plus) -> int:
    """Slot where i_plus increments i, i.e. the s with i_plus = i + u_s."""
    if len(i) != len(i_plus):
        raise ValueError("indices must have equal length")
    diff = [(s + 1, b2 - b1) for s, (b1, b2) in enumerate(zip(i, i_plus)) if b1 != b2]
    if len(diff) != 1 or diff[0][1] != 1:
        raise ValueError(f"{i_plus} is not {i} plus a single 0->1 increment")
    return diff[0][0]


def unit_index(n, s):
    """Index with a single 1 at slot s (1-based)."""
    return tuple(1 if t == s - 1 else 0 for t in range(n))


def add_unit(i, s):
    """i + u_s; requires i_s = 0."""
    if i[s - 1] != 0:
        raise ValueError(f"slot {s} of {i} is already 1")
    return i[: s - 1] + (1,) + i[s:]


def subpoint(i, x):
    """The point x(i): consecutive products of coordinates between the ones of i.

    With one-slots tau_1 < ... < tau_k (and tau_{k+1} = n+1), component m is
    x_{tau_m} * x_{tau_m + 1} * ... * x_{tau_{m+1} - 1}.
    """
    if len(i) != len(x):
        raise ValueError("index and point must have equal length")
    slots = one_slots(i)
    if not slots:
        return ()
    bounds = slots + (len(i) + 1,)
    out = []
    for m in range(len(slots)):
        prod_val = 1.0 + 0.0j
        for t in range(bounds[m], bounds[m + 1]):
            prod_val = prod_val * complex(x[t - 1])
        out.append(prod_val)
    return tuple(out)


def retraction(i, j):
    """Restrict j to the one-slots of i, giving an index of depth |i|."""
    if not precedes(j, i):
        raise ValueError(f"{j} does not precede {i}; retraction undefined")
    return tuple(j[s - 1] for s in one_slots(i))


def a_coords(x):
    """Extended coordinates a_0, ..., a_{n+1}: a_0 = 0, a_s = 1/(x_s ... x_n), a_{n+1} = 1."""
    n = len(x)
    out = [0j] * (n + 2)
    out[n + 1] = 1.0 + 0j
    tail = 1.0 + 0j
    for s in range(n, 0, -1):
        tail = tail * complex(x[s - 1])
        if tail == 0:
            raise DomainError(f"partial product x_{s}*...*x_{n} vanishes (x_{s} = 0)")
        out[s] = 1.0 / tail
    return out


def chains(n):
    """All maximal chains j_1 < ... < j_n with |j_t| = t (one per permutation of slots)."""
    out = []
    for perm in permutations(range(1, n + 1)):
        cur = (0,) * n
        chain = []
        for s in perm:
            cur = add_unit(cur, s)
            chain.append(cur)
        out.append(tuple(chain))
    return out


def position_functions(chain):
    """The values f^1 = 1, f^t = pos(j_{t-1}, j_t) for a maximal chain."""
    vals = [1]
    for t in range(1, len(chain)):
        vals.append(pos(chain[t - 1], chain[t]))
    return tuple(vals)


def index_to_str(i) -> str:
    """Serialize as a 0/1 string, slot 1 first: (1,0,1) -> "101"."""
    return "".join(str(b) for b in i)


def index_from_str(s) -> tuple:
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"invalid index string {s!r}")
    return validate_index(tuple(int(c) for c in s))
