"""The diamond circle, its integer covering, and winding numbers.

The diamond is the four-point digital circle {(1,0), (0,1), (-1,0),
(0,-1)}. Indexing its points by quarter turns gives an adjacency-
preserving projection from Z that behaves like the classical covering
of the circle by the line: paths lift uniquely once a start is chosen,
homotopies lift row by row, and the lift of a loop measures how many
quarter turns it makes. The lattice difference of a loop's lift is a
multiple of 4; dividing by 4 gives the turn count.

Winding numbers separate loops up to deformation through loops (all
stages loops). A free deformation of paths may move the endpoints
independently and can change the lift difference, so the obstruction is
only consumed where every stage is forced to be a loop.
"""

from dataclasses import dataclass

from .errors import InternalVerificationError, PreconditionError
from .funcspace import path_length
from .image import DigitalImage, interval, product, window
from .maps import DigitalMap, compose

# quarter-turn order of the diamond's points
_CYCLE = ((1, 0), (0, 1), (-1, 0), (0, -1))
_CYCLE_INDEX = {p: i for i, p in enumerate(_CYCLE)}


def diamond():
    return DigitalImage(2, _CYCLE)


def circle8():
    """The eight-point digital circle of radius 2."""
    return DigitalImage(2, [(2, 0), (1, 1), (0, 2), (-1, 1),
                            (-2, 0), (-1, -1), (0, -2), (1, -1)])


def sphere(n):
    """The digital n-sphere: the 2n+2 unit vectors and their negatives."""
    if n < 1:
        raise PreconditionError("sphere dimension must be >= 1")
    pts = []
    for i in range(n + 1):
        e = [0] * (n + 1)
        e[i] = 1
        pts.append(tuple(e))
        e[i] = -1
        pts.append(tuple(e))
    return DigitalImage(n + 1, pts)


def cover_point(n):
    """Project an integer to the diamond by quarter turns."""
    return _CYCLE[n % 4]


def cover_map(lo, hi):
    """The covering projection restricted to the window [lo, hi]."""
    return DigitalMap.from_function(window(lo, hi), diamond(),
                                    lambda p: cover_point(p[0]))


def _cycle_step(a, b):
    """The unique step in {-1, 0, 1} from a to b along the cycle.

    Defined exactly for adjacent diamond points; opposite points are not
    adjacent and reject.
    """
    d = (_CYCLE_INDEX[b] - _CYCLE_INDEX[a]) % 4
    if d == 0:
        return 0
    if d == 1:
        return 1
    if d == 3:
        return -1
    raise PreconditionError(f"{a} and {b} are not adjacent in the diamond")


@dataclass(frozen=True)
class LiftCertificate:
    """A verified lift through the covering projection.

    kind is "path" or "homotopy"; the lift lands in the window
    [-bound, bound], chosen from the start point and the input size so
    the construction can never run out of room.
    """

    kind: str
    lift: DigitalMap
    start: int
    bound: int
    original: DigitalMap

    def revalidate(self):
        p = cover_map(-self.bound, self.bound)
        if compose(p, self.lift).values != self.original.values:
            return False
        if not self.lift.is_continuous():
            return False
        if self.kind == "path":
            return self.lift((0,)) == (self.start,)
        return True


def _require_diamond_path(alpha):
    if alpha.codomain != diamond():
        raise PreconditionError("path does not land in the diamond")
    if not alpha.is_continuous():
        raise PreconditionError("path is not continuous")


def lift_path(alpha, start):
    """The unique lift of a diamond path with the given start.

    Inductive construction: each step of the path moves one quarter turn
    at most, and the lift adds the corresponding signed step.
    """
    _require_diamond_path(alpha)
    start = int(start)
    if cover_point(start) != alpha((0,)):
        raise PreconditionError(
            f"start {start} does not project to the path's origin")
    n = path_length(alpha)
    bound = abs(start) + n
    win = window(-bound, bound)
    values = [start]
    for t in range(n):
        step = _cycle_step(alpha((t,)), alpha((t + 1,)))
        values.append(values[-1] + step)
    lift = DigitalMap.from_function(interval(n), win,
                                    lambda t: (values[t[0]],))
    cert = LiftCertificate("path", lift, start, bound, alpha)
    if not cert.revalidate():
        raise InternalVerificationError("constructed path lift failed "
                                        "revalidation")
    return cert


@dataclass(frozen=True)
class DiamondLoop:
    """A path in the diamond that returns to its start."""

    path: DigitalMap

    def __post_init__(self):
        _require_diamond_path(self.path)
        n = path_length(self.path)
        if self.path((0,)) != self.path((n,)):
            raise PreconditionError("path endpoints differ: not a loop")

    @property
    def length(self):
        return path_length(self.path)


def as_loop(path):
    return DiamondLoop(path) if not isinstance(path, DiamondLoop) else path


def winding_number(loop):
    """Raw lattice displacement of a lift; always a multiple of 4.

    Independent of the chosen start: lifts from different starts differ
    by a constant translation.
    """
    loop = as_loop(loop)
    start = _CYCLE_INDEX[loop.path((0,))]
    cert = lift_path(loop.path, start)
    n = loop.length
    w = cert.lift((n,))[0] - cert.lift((0,))[0]
    if w % 4 != 0:
        raise InternalVerificationError("loop lift displacement is not a "
                                        "multiple of 4")
    return w


def winding_index(loop):
    """Turn count: the raw displacement divided by 4."""
    return winding_number(loop) // 4


def lift_homotopy(h, initial):
    """Lift a deformation of diamond paths row by row.

    h is a map on interval(N) x interval(M) into the diamond whose
    bottom row projects to the given initial path lift. Each new row is
    determined by first extending the lift of the time edge at s = 0 and
    then propagating along the row; the result projects back to h and is
    the unique such lift.
    """
    if h.codomain != diamond():
        raise PreconditionError("homotopy does not land in the diamond")
    if not h.is_continuous():
        raise PreconditionError("homotopy is not continuous")
    dims = {p[0] for p in h.domain.points}
    times = {p[1] for p in h.domain.points}
    n, m = max(dims), max(times)
    if h.domain != product(interval(n), interval(m)):
        raise PreconditionError("homotopy domain is not a product of "
                                "intervals")
    if initial.kind != "path" or path_length(initial.original) != n:
        raise PreconditionError("initial lift does not match the bottom row")
    for s in range(n + 1):
        if h((s, 0)) != initial.original((s,)):
            raise PreconditionError("bottom row of the homotopy does not "
                                    "match the initial path")

    a0 = initial.lift((0,))[0]
    bound = abs(a0) + n + m
    win = window(-bound, bound)

    rows = [[initial.lift((s,))[0] for s in range(n + 1)]]
    for t in range(1, m + 1):
        prev = rows[-1]
        first = prev[0] + _cycle_step(h((0, t - 1)), h((0, t)))
        row = [first]
        for s in range(1, n + 1):
            row.append(row[-1] + _cycle_step(h((s - 1, t)), h((s, t))))
        rows.append(row)

    lift = DigitalMap.from_function(h.domain, win,
                                    lambda p: (rows[p[1]][p[0]],))
    cert = LiftCertificate("homotopy", lift, a0, bound, h)
    if not cert.revalidate():
        raise InternalVerificationError("constructed homotopy lift failed "
                                        "revalidation")
    for s in range(n + 1):
        if lift((s, 0)) != initial.lift((s,)):
            raise InternalVerificationError("homotopy lift does not start "
                                            "at the initial lift")
    return cert


@dataclass(frozen=True)
class WindingObstruction:
    """Certificate that two loops wind differently.

    Valid against deformations through loops: along such a deformation
    consecutive stages are adjacent loops, whose lift displacements are
    multiples of 4 within 2 of each other, hence equal.
    """

    left_winding: int
    right_winding: int

    def explanation(self):
        return (f"winding numbers differ: {self.left_winding} vs "
                f"{self.right_winding}; no deformation through loops "
                "can connect them")


def winding_obstruction(f, g):
    """Compare two equal-length diamond loops; None when windings agree."""
    lf, lg = as_loop(f), as_loop(g)
    if lf.length != lg.length:
        raise PreconditionError("loops must have equal length")
    wf, wg = winding_number(lf), winding_number(lg)
    if wf != wg:
        return WindingObstruction(wf, wg)
    return None
