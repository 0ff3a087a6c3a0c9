"""Root systems and representation rings for the simple Dynkin types.

Weights are integer tuples in the fundamental-weight basis.  The simple
root alpha_i is row i of the Cartan matrix in this basis, so the simple
reflection is s_i(w) = w - w[i] * cartan[i].  The invariant bilinear form
is normalized so short simple roots have squared length 2.

The expensive classifiers work with dominant data only: the dominant
weights of an irreducible are enumerated by closing the highest weight
under "subtract a positive root, then dominantize" (covers in dominance
order differ by positive roots), multiplicities come from Freudenthal's
recursion evaluated on dominant representatives, and orbit sizes use
|W| / |W_stab| with the stabilizer read off the vanishing coordinates.

RootSystem instances are immutable after construction apart from two
internal memo tables whose entries are deterministic functions of their
keys; concurrent races can at worst recompute a value, never change one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd as _gcd

SIMPLE_TYPES = ("A", "B", "C", "D", "E", "F", "G")

_EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _cartan_and_lengths(letter: str, rank: int):
    """Cartan matrix rows (alpha_i in fundamental coordinates) and the
    symmetrizers d_i = (alpha_i, alpha_i)/2, short roots normalized to 1."""
    n = rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(i, j):
        C[i][j] = -1
        C[j][i] = -1

    if letter == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        for i in range(n - 1):
            chain(i, i + 1)
        d = [1] * n
    elif letter == "B":
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        for i in range(n - 2):
            chain(i, i + 1)
        C[n - 2][n - 1] = -2
        C[n - 1][n - 2] = -1
        d = [2] * (n - 1) + [1]
    elif letter == "C":
        if n < 2:
            raise ValueError("C_n needs n >= 2")
        for i in range(n - 2):
            chain(i, i + 1)
        C[n - 2][n - 1] = -1
        C[n - 1][n - 2] = -2
        d = [1] * (n - 1) + [2]
    elif letter == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        for i in range(n - 3):
            chain(i, i + 1)
        chain(n - 3, n - 2)
        chain(n - 3, n - 1)
        d = [1] * n
    elif letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        for i, j in edges:
            chain(i, j)
        d = [1] * n
    elif letter == "F":
        if n != 4:
            raise ValueError("F_n needs n = 4")
        chain(0, 1)
        C[1][2] = -2
        C[2][1] = -1
        chain(2, 3)
        d = [2, 2, 1, 1]
    elif letter == "G":
        if n != 2:
            raise ValueError("G_n needs n = 2")
        C[0][1] = -1
        C[1][0] = -3
        d = [1, 3]
    else:
        raise ValueError(f"unknown type {letter!r}")
    return tuple(tuple(row) for row in C), tuple(d)


def _invert_fraction_matrix(M):
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return tuple(tuple(A[i][n + j] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Root:
    wcoords: tuple[int, ...]  # fundamental-weight coordinates
    rcoords: tuple[int, ...]  # simple-root coordinates
    length: int  # d = (alpha, alpha)/2


class RootSystem:
    """Immutable simple root system data."""

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        self.cartan, self.d = _cartan_and_lengths(letter, rank)
        self._cartan_inv = _invert_fraction_matrix(self.cartan)
        # integer-scaled inverse for hot paths: root coords * den are integers
        den = 1
        for row in self._cartan_inv:
            for v in row:
                den = den * v.denominator // _gcd(den, v.denominator)
        self._inv_den = den
        self._inv_num = tuple(
            tuple(int(v * den) for v in row) for row in self._cartan_inv
        )
        self._dominant_below_cache: dict = {}
        self._freudenthal_cache: dict = {}
        self.rho = (1,) * rank
        self.positive_roots = self._enumerate_positive_roots()
        expected = _POSITIVE_ROOT_COUNT[letter](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{letter}{rank}: found {len(self.positive_roots)} positive roots, "
                f"expected {expected}"
            )
        self.weyl_order = self._weyl_order_full()
        # gram[i][j] = (w_i, w_j)
        self._gram = self._compute_gram()
        self._w0_permutation = tuple(
            self.dominant_representative(tuple(-x for x in self._fundamental(i))).index(1)
            for i in range(rank)
        )

    # -- construction helpers ------------------------------------------------

    def _fundamental(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def _enumerate_positive_roots(self):
        simple = [
            Root(self.cartan[i], self._fundamental(i), self.d[i])
            for i in range(self.rank)
        ]
        seen = {r.rcoords: r for r in simple}
        frontier = list(simple)
        while frontier:
            nxt = []
            for root in frontier:
                for i in range(self.rank):
                    k = root.wcoords[i]
                    if k == 0:
                        continue
                    w = tuple(
                        a - k * b for a, b in zip(root.wcoords, self.cartan[i])
                    )
                    r = tuple(
                        a - (k if j == i else 0)
                        for j, a in enumerate(root.rcoords)
                    )
                    if all(v >= 0 for v in r):
                        if r not in seen:
                            new = Root(w, r, root.length)
                            seen[r] = new
                            nxt.append(new)
                    else:
                        neg = tuple(-v for v in r)
                        if all(v >= 0 for v in neg) and neg not in seen:
                            new = Root(
                                tuple(-v for v in w), neg, root.length
                            )
                            seen[neg] = new
                            nxt.append(new)
            frontier = nxt
        return tuple(sorted(seen.values(), key=lambda r: (sum(r.rcoords), r.rcoords)))

    def _compute_gram(self):
        # (w_i, alpha_j) = delta_ij d_j gives (w_i, w_j) = (C^-1)_ij d_j
        n = self.rank
        gram = tuple(
            tuple(self._cartan_inv[i][j] * self.d[j] for j in range(n))
            for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                assert gram[i][j] == gram[j][i], "inner product must be symmetric"
        return gram

    def _weyl_order_full(self) -> int:
        return _diagram_weyl_order(self.cartan, tuple(range(self.rank)))

    # -- basic weight operations ----------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def zero(self):
        return (0,) * self.rank

    def check_weight(self, w) -> tuple:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise ValueError(
                f"weight {w} has length {len(w)}, expected rank {self.rank}"
            )
        return w

    def reflect(self, i: int, w):
        k = w[i]
        if k == 0:
            return tuple(w)
        row = self.cartan[i]
        return tuple(a - k * b for a, b in zip(w, row))

    def is_dominant(self, w) -> bool:
        return all(x >= 0 for x in w)

    def dominant_representative(self, w):
        """The unique dominant weight in the Weyl orbit of w."""
        w = tuple(w)
        while True:
            for i in range(self.rank):
                if w[i] < 0:
                    w = self.reflect(i, w)
                    break
            else:
                return w

    def negate_dominant(self, w):
        """-w0(w) for dominant w: the dominant representative of -w."""
        return self.dominant_representative(tuple(-x for x in w))

    @property
    def w0_permutation(self):
        """Permutation p with w0(varpi_i) = -varpi_p(i)."""
        return self._w0_permutation

    def root_coords(self, w):
        """Coordinates of a fundamental-basis vector in the simple-root basis."""
        n = self.rank
        return tuple(
            sum(Fraction(w[k]) * self._cartan_inv[k][j] for k in range(n))
            for j in range(n)
        )

    def _root_coords_scaled(self, w):
        """den * root_coords(w) as integers; den is self._inv_den."""
        n = self.rank
        inv = self._inv_num
        return tuple(
            sum(w[k] * inv[k][j] for k in range(n)) for j in range(n)
        )

    def height_in_root_basis(self, w) -> Fraction:
        return Fraction(sum(self._root_coords_scaled(w)), self._inv_den)

    def in_root_cone(self, diff) -> bool:
        """diff lies in the nonnegative-integer span of the simple roots."""
        den = self._inv_den
        for c in self._root_coords_scaled(diff):
            if c < 0 or c % den:
                return False
        return True

    def inner(self, u, v) -> Fraction:
        g = self._gram
        n = self.rank
        s = Fraction(0)
        for i in range(n):
            if u[i]:
                row = g[i]
                for j in range(n):
                    if v[j]:
                        s += u[i] * v[j] * row[j]
        return s

    def pairing_with_root(self, w, root: Root) -> Fraction:
        """(w, alpha) for alpha given by root coordinates; exact."""
        return Fraction(
            sum(r * d * x for r, d, x in zip(root.rcoords, self.d, w))
        )

    def coroot_pairing(self, w, root: Root) -> int:
        val = self.pairing_with_root(w, root) / root.length
        if val.denominator != 1:
            raise AssertionError("coroot pairing must be integral on weights")
        return int(val)

    # -- orbits ---------------------------------------------------------------

    def weyl_orbit(self, w) -> set:
        """Full orbit by closure under simple reflections."""
        start = self.check_weight(w)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    if v[i] != 0:
                        u = self.reflect(i, v)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
            frontier = nxt
        return seen

    def orbit_size(self, w) -> int:
        """|W| / |W_stab| without enumerating the orbit."""
        dom = self.dominant_representative(self.check_weight(w))
        fixed = tuple(i for i in range(self.rank) if dom[i] == 0)
        return self.weyl_order // _diagram_weyl_order(self.cartan, fixed)

    # -- dimensions and dominant weight systems --------------------------------

    def weyl_dim(self, lam) -> int:
        """Weyl dimension formula, exact."""
        lam = self.check_weight(lam)
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        num = 1
        den = 1
        for root in self.positive_roots:
            a = sum(r * d * (x + 1) for r, d, x in zip(root.rcoords, self.d, lam))
            b = sum(r * d for r, d in zip(root.rcoords, self.d))
            num *= a
            den *= b
        assert num % den == 0
        return num // den

    def dominant_weights_below(self, lam) -> list:
        """All dominant mu with lam - mu a nonnegative root combination.

        By saturation these are exactly the dominant weights of V_lam.
        Closure under 'subtract a positive root, dominantize' (covers in the
        dominance order on dominant weights differ by positive roots).
        """
        lam = self.check_weight(lam)
        cached = self._dominant_below_cache.get(lam)
        if cached is not None:
            return cached
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        if self.rank == 1:
            out = [(lam[0] - 2 * i,) for i in range(lam[0] // 2 + 1)]
            self._dominant_below_cache[lam] = out
            return out
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for root in self.positive_roots:
                    cand = tuple(a - b for a, b in zip(mu, root.wcoords))
                    cand = self.dominant_representative(cand)
                    if cand in seen:
                        continue
                    if self.in_root_cone(tuple(a - b for a, b in zip(lam, cand))):
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        out = sorted(
            seen, key=lambda m: (self.height_in_root_basis(m), m), reverse=True
        )
        self._dominant_below_cache[lam] = out
        return out

    def _is_weight_of(self, lam, nu) -> bool:
        dom = self.dominant_representative(nu)
        return self.in_root_cone(tuple(a - b for a, b in zip(lam, dom)))

    def freudenthal_dominant(self, lam) -> dict:
        """Dominant weight -> multiplicity for the irreducible V_lam."""
        lam = self.check_weight(lam)
        cached = self._freudenthal_cache.get(lam)
        if cached is not None:
            return cached
        if self.rank == 1:
            out = {(lam[0] - 2 * i,): 1 for i in range(lam[0] // 2 + 1)}
            self._freudenthal_cache[lam] = out
            return out
        doms = self.dominant_weights_below(lam)
        mults: dict = {lam: 1}
        lam_rho = tuple(x + 1 for x in lam)
        norm_top = self.inner(lam_rho, lam_rho)
        for mu in doms[1:]:
            mu_rho = tuple(x + 1 for x in mu)
            denom = norm_top - self.inner(mu_rho, mu_rho)
            total = Fraction(0)
            for root in self.positive_roots:
                j = 1
                while True:
                    nu = tuple(a + j * b for a, b in zip(mu, root.wcoords))
                    dom = self.dominant_representative(nu)
                    m = mults.get(dom)
                    if m is None:
                        if self.in_root_cone(
                            tuple(a - b for a, b in zip(lam, dom))
                        ):
                            # mu + j*alpha is higher than mu, so it was
                            # processed already; reaching here means the
                            # dominant closure missed a weight
                            raise AssertionError(
                                f"dominant weight closure incomplete at {dom}"
                            )
                        break
                    if m:
                        total += m * self.pairing_with_root(nu, root)
                    j += 1
            val = 2 * total / denom
            assert val.denominator == 1 and val > 0
            mults[mu] = int(val)
        self._freudenthal_cache[lam] = mults
        return mults

    def weight_system(self, lam) -> dict:
        """Full weight -> multiplicity map of V_lam."""
        out: dict = {}
        for mu, m in self.freudenthal_dominant(lam).items():
            for w in self.weyl_orbit(mu):
                out[w] = m
        return out

    def __repr__(self):
        return f"RootSystem({self.name})"


def _split_components(cartan, nodes):
    nodes = list(nodes)
    remaining = set(nodes)
    comps = []
    while remaining:
        start = remaining.pop()
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if cartan[i][j] != 0:
                    remaining.discard(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _diagram_weyl_order(cartan, nodes) -> int:
    """Order of the Weyl group of the subdiagram on ``nodes``."""
    if not nodes:
        return 1
    total = 1
    for comp in _split_components(cartan, nodes):
        total *= _component_weyl_order(cartan, comp)
    return total


def _component_weyl_order(cartan, comp) -> int:
    n = len(comp)
    if n == 1:
        return 2
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            i, j = comp[a], comp[b]
            if cartan[i][j] != 0:
                edges.append((a, b, cartan[i][j] * cartan[j][i]))
    multiplicities = [m for _, _, m in edges]
    if any(m == 3 for m in multiplicities):
        assert n == 2
        return 12
    degree = [0] * n
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    if any(m == 2 for m in multiplicities):
        if n == 4:
            a, b, _ = next(e for e in edges if e[2] == 2)
            if degree[a] == 2 and degree[b] == 2:
                return 1152  # F4: interior double bond
        return 2**n * factorial(n)
    # simply laced
    if max(degree) <= 2:
        return factorial(n + 1)  # A_n
    # one branch node
    branch = degree.index(3)
    # arm lengths from the branch node
    arms = []
    adj = {a: [] for a in range(n)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (n - 1) * factorial(n)  # D_n
    assert arms[:2] == [1, 2]
    return _EXCEPTIONAL_WEYL_ORDER[("E", n)]


_ROOT_SYSTEM_CACHE: dict = {}


def root_system(name, rank: int | None = None) -> RootSystem:
    """Factory: root_system("B5") or root_system("B", 5); cached."""
    if rank is None:
        letter = name[0].upper()
        rank = int(name[1:])
    else:
        letter = name.upper()
    key = (letter, rank)
    if key not in _ROOT_SYSTEM_CACHE:
        _ROOT_SYSTEM_CACHE[key] = RootSystem(letter, rank)
    return _ROOT_SYSTEM_CACHE[key]


def canonical_simple_types(max_rank: int, include_exceptional: bool = True):
    """Non-redundant list of simple types up to a rank bound:
    A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), plus exceptionals."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(("A", n))
    for n in range(2, max_rank + 1):
        out.append(("B", n))
    for n in range(3, max_rank + 1):
        out.append(("C", n))
    for n in range(4, max_rank + 1):
        out.append(("D", n))
    if include_exceptional:
        for letter, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
            if n <= max_rank:
                out.append((letter, n))
    return out


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------


class NotACharacterError(ArithmeticError):
    """A decomposition or lambda-operation exposed the input as corrupted."""


@dataclass(frozen=True)
class Character:
    """Weyl-invariant weight multiplicity map with positive multiplicities."""

    rs: RootSystem
    weights: dict  # weight tuple -> positive int

    def __post_init__(self):
        clean = {}
        for w, m in self.weights.items():
            m = int(m)
            if m < 0:
                raise NotACharacterError(f"negative multiplicity {m} at {w}")
            if m:
                clean[tuple(w)] = m
        object.__setattr__(self, "weights", clean)
        rs = self.rs
        for w in clean:
            if len(w) != rs.rank:
                raise NotACharacterError(
                    f"weight {w} has length {len(w)}, expected rank {rs.rank}"
                )
        for w, m in clean.items():
            for i in range(rs.rank):
                if w[i] != 0 and clean.get(rs.reflect(i, w), 0) != m:
                    raise NotACharacterError(
                        f"weight map is not Weyl-invariant at {w}, reflection {i}"
                    )

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    def multiplicity(self, w) -> int:
        return self.weights.get(tuple(w), 0)

    @property
    def is_wmf(self) -> bool:
        return all(m == 1 for m in self.weights.values())

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.rs is other.rs
            and self.weights == other.weights
        )

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "weights": [[list(w), m] for w, m in sorted(self.weights.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Character":
        rs = root_system(data["type"])
        return cls(rs, {tuple(w): m for w, m in data["weights"]})


def weyl_orbit(rs: RootSystem, w) -> set:
    return rs.weyl_orbit(w)


def weyl_dim(rs: RootSystem, lam) -> int:
    return rs.weyl_dim(lam)


def freudenthal_character(rs: RootSystem, lam) -> Character:
    """Full weight multiplicity map of the irreducible with highest weight lam."""
    return Character(rs, rs.weight_system(lam))


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {rs.zero(): 1})


def char_tensor(x: Character, y: Character) -> Character:
    if x.rs is not y.rs:
        raise ValueError("characters live on different root systems")
    acc: dict = {}
    small, large = (x, y) if len(x.weights) <= len(y.weights) else (y, x)
    for w1, m1 in small.weights.items():
        for w2, m2 in large.weights.items():
            key = tuple(a + b for a, b in zip(w1, w2))
            acc[key] = acc.get(key, 0) + m1 * m2
    return Character(x.rs, acc)


def char_adams(n: int, x: Character) -> Character:
    if n < 1:
        raise ValueError("Adams index must be >= 1 on characters")
    return Character(x.rs, {tuple(n * a for a in w): m for w, m in x.weights.items()})


def _char_schur(alpha, x: Character) -> Character:
    from .symfun import Partition, schur_to_powersum

    if not isinstance(alpha, Partition):
        alpha = Partition(tuple(alpha))
    acc: dict = {}
    adams_cache: dict[int, Character] = {}

    def psi(n):
        if n not in adams_cache:
            adams_cache[n] = char_adams(n, x)
        return adams_cache[n]

    for beta, m in schur_to_powersum(alpha).terms.items():
        prod = None
        for b in beta:
            prod = psi(b) if prod is None else char_tensor(prod, psi(b))
        for w, c in prod.weights.items():
            acc[w] = acc.get(w, Fraction(0)) + m * c
    out = {}
    for w, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1 or c < 0:
            raise NotACharacterError(
                f"Schur operation s_{alpha} produced coefficient {c} at {w}; "
                "the input is not a genuine character"
            )
        out[w] = int(c)
    return Character(x.rs, out)


def char_alt(k: int, x: Character) -> Character:
    """Exterior power, via the power-sum expansion of s_(1^k)."""
    if k == 0:
        return trivial_character(x.rs)
    return _char_schur((1,) * k, x)


def char_sym(k: int, x: Character) -> Character:
    """Symmetric power, via the power-sum expansion of s_(k)."""
    if k == 0:
        return trivial_character(x.rs)
    return _char_schur((k,), x)


def decompose(x: Character) -> dict:
    """Highest weights with multiplicities, by peeling maximal weights.

    Repeatedly removes mult * (Freudenthal character) of a dominance-maximal
    dominant weight present; raises NotACharacterError if any multiplicity
    goes negative.  Reconstruction equals the input by construction.
    """
    rs = x.rs
    remaining = dict(x.weights)
    out: dict = {}
    while remaining:
        top = max(
            remaining, key=lambda w: (rs.height_in_root_basis(w), w)
        )
        mult = remaining[top]
        if not rs.is_dominant(top):
            raise NotACharacterError(
                f"maximal weight {top} is not dominant; not a character"
            )
        if mult < 0:
            raise NotACharacterError(
                f"peeling produced negative multiplicity at {top}"
            )
        out[top] = out.get(top, 0) + mult
        for w, m in rs.weight_system(top).items():
            new = remaining.get(w, 0) - mult * m
            if new < 0:
                raise NotACharacterError(
                    f"peeling produced negative multiplicity at {w}"
                )
            if new == 0:
                remaining.pop(w, None)
            else:
                remaining[w] = new
    return out


def self_dual(rs: RootSystem, lam) -> bool:
    lam = tuple(lam)
    return rs.negate_dominant(lam) == lam


def _peel_trivial_multiplicity(rs: RootSystem, dom_mults: dict) -> int:
    """Multiplicity of the trivial constituent in a character given by its
    dominant multiplicity map, by peeling from the top."""
    remaining = {w: m for w, m in dom_mults.items() if m != 0}
    zero = rs.zero()
    while remaining:
        top = max(remaining, key=lambda w: (rs.height_in_root_basis(w), w))
        mult = remaining.pop(top)
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} at {top}")
        if top == zero:
            return mult
        if mult == 0:
            continue
        for mu, m in rs.freudenthal_dominant(top).items():
            if mu == top:
                continue
            remaining[mu] = remaining.get(mu, 0) - mult * m
    return 0


def _square_dominant_parts(rs: RootSystem, lam):
    """Dominant multiplicity maps of Sym^2 and Alt^2 of V_lam.

    Works with dominant candidates nu <= 2*lam and product-multiplicity
    queries against the full support of V_lam, so tensor squares of large
    minuscule representations stay affordable.
    """
    supp: dict = {}
    for mu, m in rs.freudenthal_dominant(lam).items():
        for w in rs.weyl_orbit(mu):
            supp[w] = m
    two_lam = tuple(2 * a for a in lam)
    sym: dict = {}
    alt: dict = {}
    for nu in rs.dominant_weights_below(two_lam):
        prod = 0
        for a, m in supp.items():
            rem = tuple(x - y for x, y in zip(nu, a))
            m2 = supp.get(rem)
            if m2:
                prod += m * m2
        half = supp.get(tuple(x // 2 for x in nu), 0) if all(
            x % 2 == 0 for x in nu
        ) else 0
        s = (prod + half) // 2
        a_ = (prod - half) // 2
        if (prod + half) % 2 or (prod - half) % 2:
            raise AssertionError("square multiplicities must be integers")
        if s:
            sym[nu] = s
        if a_:
            alt[nu] = a_
    return sym, alt


def fs_type(rs: RootSystem, lam) -> str:
    """Frobenius-Schur type: 'orthogonal', 'symplectic' or 'none'.

    Located by decomposing the symmetric and exterior squares and finding
    the trivial constituent; rank one collapses to counting in the
    sl2-branching chain Alt^2 Sym^k = Sym^(2k-2) + Sym^(2k-6) + ...
    """
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam == rs.zero():
        return "orthogonal"
    if not self_dual(rs, lam):
        return "none"
    if rs.rank == 1:
        k = lam[0]
        # ordered pairs of Sym^k weights summing to 0 resp. 2, minus the
        # Adams diagonal, halved: multiplicities of weights 0, 2 in Alt^2;
        # their difference is the trivial multiplicity in the sl2 chain
        alt0 = (k + 1 - (1 if k % 2 == 0 else 0)) // 2
        alt2 = (k - (1 if k % 2 == 1 else 0)) // 2
        return "symplectic" if alt0 - alt2 > 0 else "orthogonal"
    sym, alt = _square_dominant_parts(rs, lam)
    in_alt = _peel_trivial_multiplicity(rs, dict(alt))
    if in_alt > 0:
        return "symplectic"
    in_sym = _peel_trivial_multiplicity(rs, dict(sym))
    if in_sym > 0:
        return "orthogonal"
    raise AssertionError(
        f"self-dual {rs.name} weight {lam} has no invariant bilinear form"
    )


# ---------------------------------------------------------------------------
# classifiers
# ---------------------------------------------------------------------------


def is_minuscule(rs: RootSystem, lam) -> bool:
    """All weights form a single Weyl orbit."""
    lam = tuple(lam)
    if lam == rs.zero():
        return False
    if rs.rank == 1:
        return lam[0] == 1
    return rs.dominant_weights_below(lam) == [lam]


def is_quasi_minuscule(rs: RootSystem, lam) -> bool:
    """All nonzero weights form a single Weyl orbit."""
    lam = tuple(lam)
    if lam == rs.zero():
        return False
    if rs.rank == 1:
        return lam[0] <= 2
    doms = set(rs.dominant_weights_below(lam))
    return doms <= {lam, rs.zero()}


def is_wmf(rs: RootSystem, lam) -> bool:
    """Weight multiplicity free: every multiplicity is one, equivalently the
    orbit sizes of the dominant weights add up to the dimension."""
    lam = tuple(lam)
    if rs.rank == 1:
        return True  # sl2 weights k, k-2, ..., -k each occur once
    total = sum(rs.orbit_size(mu) for mu in rs.dominant_weights_below(lam))
    return total == rs.weyl_dim(lam)


def enumerate_dominant_weights(rs: RootSystem, max_dim: int) -> list:
    """All nonzero dominant weights with Weyl dimension <= max_dim."""
    zero = rs.zero()
    seen = {zero}
    frontier = [zero]
    out = []
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                cand = tuple(x + (1 if j == i else 0) for j, x in enumerate(w))
                if cand in seen:
                    continue
                seen.add(cand)
                if rs.weyl_dim(cand) <= max_dim:
                    out.append(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(out)


def center_kernel_index(rs: RootSystem, lam) -> int:
    """Index [P : Q + Z*lam]: order of the center kernel of V_lam, i.e. the
    mu_k by which the simply connected group is divided in the image."""
    n = rs.rank
    rows = [list(r) for r in rs.cartan] + [list(lam)]
    # integer row echelon; product of pivots is the lattice index
    index = 1
    mat = [row[:] for row in rows]
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            return 0
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            while mat[i][col] != 0:
                q = mat[r][col] // mat[i][col]
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[i])]
                mat[r], mat[i] = mat[i], mat[r]
        index *= abs(mat[r][col])
        r += 1
    return index


def _fundamental_index(lam) -> int | None:
    """i (0-based) if lam = varpi_i, else None."""
    nz = [i for i, x in enumerate(lam) if x != 0]
    if len(nz) == 1 and lam[nz[0]] == 1:
        return nz[0]
    return None


def wmf_family(rs: RootSystem, lam) -> str:
    """Which row family of the minuscule/wmf classification a pair belongs to."""
    n = rs.rank
    lam = tuple(lam)
    fund = _fundamental_index(lam)
    if rs.letter == "A":
        if fund is not None:
            return "A-fund"
        nz = [i for i, x in enumerate(lam) if x != 0]
        if len(nz) == 1 and nz[0] in (0, n - 1):
            return "A-sym"
        return "other"
    if rs.letter == "B":
        if fund == 0:
            return "B-std"
        if fund == n - 1:
            return "B-spin"
        return "other"
    if rs.letter == "C":
        if fund == 0:
            return "C-std"
        if n == 3 and fund == 2:
            return "C3-wedge3"
        return "other"
    if rs.letter == "D":
        if fund == 0:
            return "D-std"
        if fund in (n - 2, n - 1):
            return "D-halfspin"
        return "other"
    if rs.letter == "E" and n == 6 and fund in (0, 5):
        return "E6-27"
    if rs.letter == "E" and n == 7 and fund == 6:
        return "E7-56"
    if rs.letter == "G" and fund == 0:
        return "G2-7"
    return "other"


def image_group_label(rs: RootSystem, lam) -> str:
    """Image of the simply connected group in Gl(V_lam), in the notation of
    the classification tables."""
    n = rs.rank
    d = center_kernel_index(rs, lam)
    family = wmf_family(rs, lam)
    if rs.letter == "A":
        return f"Sl{n + 1}" + (f"/mu{d}" if d > 1 else "")
    if rs.letter == "B":
        return f"Spin{2 * n + 1}" if d == 1 else f"SO{2 * n + 1}"
    if rs.letter == "C":
        return f"Sp{2 * n}" if d == 1 else f"PSp{2 * n}"
    if rs.letter == "D":
        if family == "D-std":
            return f"SO{2 * n}"
        if family == "D-halfspin":
            return f"Spin{2 * n}"
        return f"Spin{2 * n}" if d == 1 else f"SO{2 * n}"
    if rs.letter == "E":
        return f"E{n}"
    if rs.letter == "F":
        return "F4"
    return "G2"


@dataclass(frozen=True)
class WmfEntry:
    letter: str
    rank: int
    weight: tuple
    dim: int
    minuscule: bool
    quasi_minuscule: bool
    fs: str
    family: str
    group: str

    @property
    def is_standard(self) -> bool:
        """Standard representation of a classical group (Sp/SO defining rep)."""
        return self.family in ("B-std", "C-std", "D-std")

    def to_json(self) -> dict:
        return {
            "type": f"{self.letter}{self.rank}",
            "weight": list(self.weight),
            "dim": self.dim,
            "minuscule": self.minuscule,
            "quasi_minuscule": self.quasi_minuscule,
            "fs": self.fs,
            "family": self.family,
            "group": self.group,
        }


def classify_wmf(max_rank: int, max_dim: int, include_exceptional: bool = True):
    """All weight multiplicity free irreducibles of the simple types with
    rank <= max_rank and dimension <= max_dim, with Frobenius-Schur types
    computed by the Sym^2/Alt^2 decomposition route."""
    rows = []
    for letter, n in canonical_simple_types(max_rank, include_exceptional):
        rs = root_system(letter, n)
        for lam in enumerate_dominant_weights(rs, max_dim):
            if not is_wmf(rs, lam):
                continue
            rows.append(
                WmfEntry(
                    letter=letter,
                    rank=n,
                    weight=lam,
                    dim=rs.weyl_dim(lam),
                    minuscule=is_minuscule(rs, lam),
                    quasi_minuscule=is_quasi_minuscule(rs, lam),
                    fs=fs_type(rs, lam),
                    family=wmf_family(rs, lam),
                    group=image_group_label(rs, lam),
                )
            )
    rows.sort(key=lambda r: (r.letter, r.rank, r.weight))
    return rows


def quasi_minuscule_dim_search(dim: int, max_rank: int) -> list:
    """Quasi-minuscule irreducibles of exactly the given dimension, over all
    simple types of rank <= max_rank."""
    matches = []
    for letter, n in canonical_simple_types(max_rank, include_exceptional=True):
        rs = root_system(letter, n)
        for lam in enumerate_dominant_weights(rs, dim):
            if rs.weyl_dim(lam) == dim and is_quasi_minuscule(rs, lam):
                matches.append((f"{letter}{n}", lam))
    return matches


def orbit_rank_bound(rs: RootSystem, w) -> bool:
    """|orbit(w)| >= rank for any nonzero weight."""
    if tuple(w) == rs.zero():
        raise ValueError("w must be nonzero")
    return rs.orbit_size(w) >= rs.rank


def root_multiple_condition(rs: RootSystem, lam) -> bool:
    """Some weight of V_lam is a nonzero rational multiple of a root."""
    for w in rs.weight_system(lam):
        if w == rs.zero():
            continue
        for root in rs.positive_roots:
            a = root.wcoords
            # proportionality over the fundamental coordinates
            ratio = None
            ok = True
            for x, y in zip(w, a):
                if y == 0:
                    if x != 0:
                        ok = False
                        break
                    continue
                r = Fraction(x, y)
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ok = False
                    break
            if ok and ratio not in (None, 0):
                return True
    return False


# ---------------------------------------------------------------------------
# table emitters
# ---------------------------------------------------------------------------

MINUSCULE_TABLE_LAYOUT = [
    # family, G, dim W, symplectic?, orthogonal?
    ("A-fund", "Sl_n/mu_(k,n)", "C(n,k) for 1<=k<=n", "n = 2k not in 4Z", "n = 2k in 4Z"),
    ("B-spin", "Spin_2n+1", "2^n", "n = 1,2 mod 4", "n = 0,3 mod 4"),
    ("C-std", "Sp_2n", "2n", "yes", "no"),
    ("D-std", "SO_2n", "2n", "no", "yes"),
    ("D-halfspin", "Spin_2n", "2^(n-1)", "n = 2 mod 4", "n = 0 mod 4"),
    ("E6-27", "E6", "27", "no", "no"),
    ("E7-56", "E7", "56", "yes", "no"),
]

WMF_TABLE_LAYOUT = [
    ("A-sym", "Sl_n/mu_(k,n)", "C(n+k-1,k) for k>1", "no", "no"),
    ("B-std", "SO_2n+1", "2n+1", "no", "yes"),
    ("C3-wedge3", "Sp_6", "14", "yes", "no"),
    ("G2-7", "G_2", "7", "no", "yes"),
]


def wmf_tables_csv(max_rank: int, max_dim: int) -> str:
    """CSV mirror of the two classification tables, instance rows grouped by
    family after the layout header rows."""
    rows = classify_wmf(max_rank, max_dim)
    lines = ["table,family,G,dimW,symplectic,orthogonal"]
    for fam, g, dimw, sy, orth in MINUSCULE_TABLE_LAYOUT:
        lines.append(f"minuscule,{fam},{g},{dimw},{sy},{orth}")
    for fam, g, dimw, sy, orth in WMF_TABLE_LAYOUT:
        lines.append(f"wmf,{fam},{g},{dimw},{sy},{orth}")
    for r in rows:
        lines.append(
            f"instance,{r.family},{r.group},{r.dim},"
            f"{'yes' if r.fs == 'symplectic' else 'no'},"
            f"{'yes' if r.fs == 'orthogonal' else 'no'}"
        )
    return "\n".join(lines) + "\n"
