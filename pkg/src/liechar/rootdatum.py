"""Root data of simply-connected groups: Cartan matrices, reflections,
root systems, Weyl groups.

Conventions (fixed once, used everywhere):

* `A` has the simple roots as rows, written in the basis of fundamental
  weights of X, so ``A[i][j] = <alpha_i, alpha_j^vee>``.  For the
  simply-connected case treated here the coroot matrix is the identity.
* Weights are integer tuples of ω-coordinates (row vectors); all maps on
  X act by right multiplication, maps on Y by the transposed matrices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import intmat
from .errors import GroupTooLarge, NotDominant, NotFiniteType, TwistIncompatible

WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cartan_matrix(type_name):
    """Cartan-data matrix A (rows = simple roots in the ω-basis) for a
    standard type string like "A1", "D4", "F4".

    D4 uses the numbering with node 3 in the middle (neighbours 1, 2, 4);
    longer D chains are numbered along the chain with the fork at the end.
    F4 has the double bond between nodes 2 and 3, nodes 1, 2 long.
    """
    letter, n = type_name[0].upper(), int(type_name[1:])
    if letter == "A" and n >= 1:
        return _chain(n, {})
    if letter == "B" and n >= 2:
        return _chain(n, {(n - 2, n - 1): -2})
    if letter == "C" and n >= 2:
        return _chain(n, {(n - 1, n - 2): -2})
    if letter == "D" and n >= 4:
        if n == 4:
            return (
                (2, 0, -1, 0),
                (0, 2, -1, 0),
                (-1, -1, 2, -1),
                (0, 0, -1, 2),
            )
        rows = [[0] * n for _ in range(n)]
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        for i in range(n):
            rows[i][i] = 2
        for i, j in edges:
            rows[i][j] = -1
            rows[j][i] = -1
        return tuple(tuple(r) for r in rows)
    if letter == "E" and n in (6, 7, 8):
        rows = [[0] * n for _ in range(n)]
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
        chain = [0, 2, 3, 4, 5] + ([6] if n >= 7 else []) + ([7] if n == 8 else [])
        edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]
        for i in range(n):
            rows[i][i] = 2
        for i, j in edges:
            rows[i][j] = -1
            rows[j][i] = -1
        return tuple(tuple(r) for r in rows)
    if letter == "F" and n == 4:
        return (
            (2, -1, 0, 0),
            (-1, 2, -2, 0),
            (0, -1, 2, -1),
            (0, 0, -1, 2),
        )
    if letter == "G" and n == 2:
        return ((2, -1), (-3, 2))
    raise NotFiniteType(f"unknown type {type_name!r}")


def _chain(n, overrides):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i + 1 < n:
            rows[i][i + 1] = -1
            rows[i + 1][i] = -1
    for (i, j), v in overrides.items():
        rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def classify_cartan(a):
    """Classify a Cartan-data matrix into connected components.

    Returns a list of (letter, size, nodes) with nodes the 0-based index
    tuple of the component.  Raises NotFiniteType for anything that is not
    a finite-type diagram.
    """
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise NotFiniteType("matrix is not square")
        if a[i][i] != 2:
            raise NotFiniteType("diagonal entries must equal 2")
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise NotFiniteType("off-diagonal entries must be <= 0")
            if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                raise NotFiniteType("zero pattern must be symmetric")

    adj = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != 0:
                w = a[i][j] * a[j][i]
                if w not in (1, 2, 3):
                    raise NotFiniteType(f"bond weight {w} between {i} and {j}")
                adj[i].append((j, w))
                adj[j].append((i, w))

    seen = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u, _ in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comp.sort()
        comps.append(tuple(comp))

    out = []
    for comp in comps:
        out.append((_classify_component(a, adj, comp), len(comp), comp))
    return out


def _classify_component(a, adj, comp):
    m = len(comp)
    edges = [(v, u, w) for v in comp for u, w in adj[v] if u > v]
    if len(edges) != m - 1:
        raise NotFiniteType("component is not a tree")
    if m == 1:
        return "A"
    multi = [(v, u, w) for v, u, w in edges if w > 1]
    degrees = {v: len([u for u, _ in adj[v] if u in comp]) for v in comp}
    if any(w == 3 for _, _, w in multi):
        if m == 2 and len(multi) == 1:
            return "G"
        raise NotFiniteType("triple bond only allowed in G2")
    if multi:
        if len(multi) > 1 or max(degrees.values()) > 2:
            raise NotFiniteType("invalid double-bond configuration")
        v, u, w = multi[0]
        end_v = degrees[v] == 1
        end_u = degrees[u] == 1
        if m == 4 and not end_v and not end_u:
            return "F"
        if end_v or end_u:
            # terminal double bond: B or C depending on which side is short
            short = u if abs(a[v][u]) == 2 else v
            # Bn: terminal node short; Cn: terminal node long.
            terminal = v if end_v else u
            if m == 2:
                return "B"
            return "B" if terminal == short else "C"
        raise NotFiniteType("double bond must be terminal or central (F4)")
    branch = [v for v in comp if degrees[v] >= 3]
    if not branch:
        return "A"
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise NotFiniteType("too many branch points")
    b = branch[0]
    arms = []
    for u, _ in adj[b]:
        if u not in comp:
            continue
        length = 1
        prev, cur = b, u
        while degrees[cur] == 2:
            nxt = next(x for x, _ in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms == [1, 1, m - 3]:
        return "D"
    if arms == [1, 2, m - 4] and m in (6, 7, 8):
        return "E"
    raise NotFiniteType(f"branch arms {arms} are not of finite type")


def component_weyl_order(letter, size):
    return WEYL_ORDERS[letter](size)


class RootDatum:
    """Immutable root datum of a simply-connected semisimple group.

    Carries the Cartan data, the simple reflections as matrices on X, the
    full set of positive roots with their coroots, the Weyl group order
    and the twist F0 (matrix on X).
    """

    def __init__(self, cartan, f0, weyl_bound=10**6):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        self.components = classify_cartan(self.cartan)
        self.type_name = "+".join(
            f"{letter}{size}" for letter, size, _ in self.components
        )
        self.weyl_order = 1
        for letter, size, _ in self.components:
            self.weyl_order *= component_weyl_order(letter, size)
        self.weyl_bound = weyl_bound

        self.reflections = tuple(
            _reflection_on_x(self.rank, i, self.cartan) for i in range(self.rank)
        )
        self.reflections_y = tuple(intmat.transpose(s) for s in self.reflections)

        self.f0 = tuple(tuple(int(x) for x in row) for row in f0)
        self.f0_y = intmat.transpose(self.f0)
        self.f0_order = intmat.mat_order(self.f0, bound=1000)

        self._cartan_inv = intmat.mat_inv_fractions(self.cartan)
        roots = _close_roots(self)
        positive = []
        for alpha, alpha_vee in roots:
            coeffs = self.to_root_basis(alpha)
            if all(c >= 0 for c in coeffs):
                positive.append((alpha, alpha_vee))
        positive.sort(key=lambda rc: (sum(self.to_root_basis(rc[0])), rc[0]))
        self.positive_roots = tuple(alpha for alpha, _ in positive)
        self.positive_coroots = tuple(cv for _, cv in positive)
        self.num_positive = len(self.positive_roots)
        if 2 * self.num_positive != len(roots):
            raise NotFiniteType("root system is not symmetric")

        root_set = set(self.positive_roots) | {
            tuple(-x for x in alpha) for alpha in self.positive_roots
        }
        for alpha in root_set:
            if intmat.mat_vec(alpha, self.f0) not in root_set:
                raise TwistIncompatible("F0 does not preserve the root set")
        row_set = set(self.cartan)
        twisted_rows = {intmat.mat_vec(r, self.f0) for r in row_set}
        if twisted_rows != row_set:
            raise TwistIncompatible("F0 does not permute the simple roots")

        self._weyl_cache = None
        self._orbit_cache = {}
        self._parabolic_cache = {}

    # -- basis conversions -------------------------------------------------

    def to_root_basis(self, weight):
        """Exact coordinates of a weight in the simple-root basis."""
        return tuple(
            sum(Fraction(weight[i]) * self._cartan_inv[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def from_root_basis(self, coeffs):
        return tuple(
            sum(coeffs[i] * self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def height(self, weight):
        """Sum of simple-root coordinates (rational for general weights)."""
        return sum(self.to_root_basis(weight))

    # -- predicates --------------------------------------------------------

    def is_dominant(self, weight):
        return all(x >= 0 for x in weight)

    def is_restricted(self, weight, b):
        return all(0 <= x < b for x in weight)

    def check_dominant(self, weight):
        if not self.is_dominant(weight):
            raise NotDominant(f"{weight} is not dominant")

    # -- Weyl group ----------------------------------------------------------

    def weyl_elements(self):
        """All Weyl group elements as matrices on X (BFS closure)."""
        if self._weyl_cache is None:
            elements = intmat.mulclose(self.reflections, bound=self.weyl_bound)
            if len(elements) != self.weyl_order:
                raise NotFiniteType(
                    f"Weyl closure size {len(elements)} != expected {self.weyl_order}"
                )
            self._weyl_cache = elements
        return self._weyl_cache

    def parabolic_order(self, zero_positions):
        """Order of the parabolic subgroup <s_i : i in zero_positions>."""
        key = frozenset(zero_positions)
        if key not in self._parabolic_cache:
            if not key:
                self._parabolic_cache[key] = 1
            else:
                idx = sorted(key)
                sub = tuple(tuple(self.cartan[i][j] for j in idx) for i in idx)
                order = 1
                for letter, size, _ in classify_cartan(sub):
                    order *= component_weyl_order(letter, size)
                self._parabolic_cache[key] = order
        return self._parabolic_cache[key]

    # -- misc ----------------------------------------------------------------

    @property
    def rho(self):
        return (1,) * self.rank

    def __repr__(self):
        return f"RootDatum({self.type_name}, rank={self.rank})"


def _reflection_on_x(rank, i, cartan):
    # s_i(x) = x - <x, alpha_i^vee> alpha_i with alpha_i^vee = e_i, so only
    # the i-th basis row moves: e_i - alpha_i.
    rows = []
    for k in range(rank):
        if k == i:
            rows.append(tuple(int(k == j) - cartan[i][j] for j in range(rank)))
        else:
            rows.append(tuple(int(k == j) for j in range(rank)))
    return tuple(rows)


def _close_roots(datum):
    """All (root, coroot) pairs, closed under the simple reflections."""
    rank = datum.rank
    simples = [
        (datum.cartan[i], tuple(int(i == j) for j in range(rank)))
        for i in range(rank)
    ]
    seen = {}
    queue = list(simples)
    for alpha, alpha_vee in simples:
        seen[alpha] = alpha_vee
    head = 0
    while head < len(queue):
        alpha, alpha_vee = queue[head]
        head += 1
        for s_x, s_y in zip(datum.reflections, datum.reflections_y):
            beta = intmat.mat_vec(alpha, s_x)
            if beta not in seen:
                beta_vee = intmat.mat_vec(alpha_vee, s_y)
                seen[beta] = beta_vee
                queue.append((beta, beta_vee))
        neg = tuple(-x for x in alpha)
        if neg not in seen:
            seen[neg] = tuple(-x for x in alpha_vee)
            queue.append((neg, seen[neg]))
    return sorted(seen.items())


def _perm_to_matrix(perm, rank):
    """1-based permutation [pi(1), ..., pi(l)] to a matrix on X mapping
    omega_i to omega_{pi(i)}."""
    if sorted(perm) != list(range(1, rank + 1)):
        raise TwistIncompatible(f"{perm} is not a permutation of 1..{rank}")
    rows = []
    for i in range(rank):
        target = perm[i] - 1
        rows.append(tuple(int(j == target) for j in range(rank)))
    return tuple(rows)


def build_root_datum(cartan, twist=None, weyl_bound=10**6):
    """Validate Cartan data plus twist and construct the RootDatum.

    `cartan` is either a type string ("D4") or an explicit matrix.  `twist`
    is None (identity), a 1-based permutation list of the simple roots, or
    an explicit integer matrix on X.
    """
    if isinstance(cartan, str):
        cartan = cartan_matrix(cartan)
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    rank = len(cartan)
    if twist is None:
        f0 = intmat.identity(rank)
    elif isinstance(twist, (list, tuple)) and twist and not isinstance(twist[0], (list, tuple)):
        f0 = _perm_to_matrix(list(twist), rank)
    else:
        f0 = tuple(tuple(int(x) for x in row) for row in twist)
        try:
            intmat.mat_order(f0, bound=1000)
        except ValueError:
            raise TwistIncompatible("twist matrix does not have finite order")
    return RootDatum(cartan, f0, weyl_bound=weyl_bound)


def weyl_elements(datum):
    """Complete duplicate-free enumeration of W as matrices on X."""
    return datum.weyl_elements()


def weight_to_root_basis(datum, weight):
    """Exact rational coordinates c with weight = sum_i c_i alpha_i."""
    return datum.to_root_basis(weight)
