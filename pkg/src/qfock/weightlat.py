"""Signed tuples, their weight lattice, and the combinatorial Bruhat order.

A shape (m, n) splits positions 1..m+n into a covariant sector (1..m) and a
dual sector (m+1..m+n).  A signed tuple f assigns an integer letter to each
position; its weight is sum_{i<=m} eps_{f(i)} - sum_{j>m} eps_{f(j)} in the
free abelian group on {eps_r : r in Z}.

The dominance order on weights declares mu <= nu when nu - mu is a
nonnegative integer combination of the differences eps_r - eps_{r+1}.
The Bruhat order on tuples compares all tail weights in dominance order.

Permutations are 0-based one-line tuples; (a*b)(i) = a(b(i)); tuples carry a
right action (f.sigma)(i) = f(sigma(i)).  Parabolic subgroups of S_m x S_n
are generated by adjacent transpositions s_i with label i != m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class WindowEscape(Exception):
    """Raised when a computation needs letters outside the ambient window."""


@dataclass(frozen=True)
class Shape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n == 0:
            raise ValueError("shape needs m, n >= 0 with m + n >= 1")

    @property
    def size(self) -> int:
        return self.m + self.n

    def sector(self, pos: int) -> int:
        """0 for the covariant sector, 1 for the dual sector (pos is 1-based)."""
        if not 1 <= pos <= self.size:
            raise ValueError(f"position {pos} out of range for {self}")
        return 0 if pos <= self.m else 1

    def __str__(self) -> str:
        return f"{self.m}|{self.n}"


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty window")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, letter: int) -> bool:
        return self.lo <= letter <= self.hi

    def letters(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class SignedTuple:
    shape: Shape
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.shape.size:
            raise ValueError("entry count does not match shape")

    def __getitem__(self, pos: int) -> int:
        """1-based position access, matching the mathematical indexing."""
        return self.entries[pos - 1]

    def act(self, perm: tuple[int, ...]) -> "SignedTuple":
        """Right action (f.sigma)(i) = f(sigma(i))."""
        return SignedTuple(self.shape, tuple(self.entries[j] for j in perm))

    def negate(self) -> "SignedTuple":
        return SignedTuple(self.shape, tuple(-e for e in self.entries))

    def in_window(self, w: Window) -> bool:
        return all(e in w for e in self.entries)

    def __str__(self) -> str:
        m = self.shape.m
        left = ",".join(str(e) for e in self.entries[:m])
        right = ",".join(str(e) for e in self.entries[m:])
        return f"{left}|{right}"

    @classmethod
    def parse(cls, text: str, shape: Shape | None = None) -> "SignedTuple":
        """Parse "a,b|c" into a tuple, inferring the shape from the bar."""
        left, _, right = text.partition("|")
        lefts = [int(x) for x in left.split(",") if x.strip() != ""]
        rights = [int(x) for x in right.split(",") if x.strip() != ""]
        inferred = Shape(len(lefts), len(rights))
        if shape is not None and shape != inferred:
            raise ValueError(f"tuple {text} does not match shape {shape}")
        return cls(inferred, tuple(lefts + rights))


# ---------------------------------------------------------------------------
# weights


def weight(f: SignedTuple) -> dict[int, int]:
    """The weight of f as a sparse dict letter -> multiplicity (signed)."""
    return weight_tail(f, 1)


@lru_cache(maxsize=None)
def weight_tail(f: SignedTuple, j: int) -> dict[int, int]:
    """The weight of the suffix f(j), f(j+1), ..., signs per sector.

    Cached; callers must treat the returned dict as read-only.
    """
    wt: dict[int, int] = {}
    for pos in range(j, f.shape.size + 1):
        s = -1 if f.shape.sector(pos) else 1
        r = f[pos]
        b = wt.get(r, 0) + s
        if b:
            wt[r] = b
        else:
            wt.pop(r, None)
    return wt


def weight_key(wt: dict[int, int]) -> tuple:
    return tuple(sorted(wt.items()))


def dominance_leq(mu: dict[int, int], nu: dict[int, int]) -> bool:
    """mu <= nu iff nu - mu is a nonnegative sum of eps_r - eps_{r+1} terms.

    Equivalently the difference has total sum zero and all partial sums,
    accumulated from the smallest letter upward, nonnegative.
    """
    diff: dict[int, int] = dict(nu)
    for r, a in mu.items():
        b = diff.get(r, 0) - a
        if b:
            diff[r] = b
        else:
            diff.pop(r, None)
    if not diff:
        return True
    if sum(diff.values()) != 0:
        return False
    run = 0
    for r in sorted(diff):
        run += diff[r]
        if run < 0:
            return False
    return run == 0


@lru_cache(maxsize=None)
def bruhat_leq(g: SignedTuple, f: SignedTuple) -> bool:
    """The combinatorial Bruhat order: same weight, dominated tail weights.

    >>> sh = Shape(1, 1)
    >>> bruhat_leq(SignedTuple(sh, (0, 0)), SignedTuple(sh, (1, 1)))
    True
    >>> bruhat_leq(SignedTuple(sh, (1, 1)), SignedTuple(sh, (0, 0)))
    False
    """
    if g.shape != f.shape:
        raise ValueError("tuples of different shapes are incomparable")
    if weight(g) != weight(f):
        return False
    for j in range(2, f.shape.size + 1):
        if not dominance_leq(weight_tail(g, j), weight_tail(f, j)):
            return False
    return True


# ---------------------------------------------------------------------------
# permutations (0-based one-line tuples)


def identity_perm(k: int) -> tuple[int, ...]:
    return tuple(range(k))


def perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a*b)(i) = a(b(i))."""
    return tuple(a[j] for j in b)


def perm_inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def perm_length(a: tuple[int, ...]) -> int:
    """Inversion count, the Coxeter length."""
    return sum(1 for i, j in itertools.combinations(range(len(a)), 2) if a[i] > a[j])


def apply_s(a: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Right multiply by the adjacent transposition s_i (1-based label)."""
    lst = list(a)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def is_right_ascent(a: tuple[int, ...], i: int) -> bool:
    """l(a * s_i) > l(a), for the 1-based label i."""
    return a[i - 1] < a[i]


def reduced_word(a: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word (s_{j_1}, ..., s_{j_r}) for a, as 1-based labels.

    >>> reduced_word((2, 0, 1))
    (2, 1)
    >>> reduced_word(identity_perm(4))
    ()
    """
    word = []
    cur = a
    while True:
        for i in range(1, len(cur)):
            if cur[i - 1] > cur[i]:
                word.append(i)
                cur = apply_s(cur, i)
                break
        else:
            break
    return tuple(reversed(word))


# ---------------------------------------------------------------------------
# parabolic subgroups of S_m x S_n


@dataclass(frozen=True)
class Parabolic:
    shape: Shape
    generators: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "generators", frozenset(self.generators))
        for i in self.generators:
            if not 1 <= i <= self.shape.size - 1 or i == self.shape.m:
                raise ValueError(f"generator s_{i} is not admissible for shape {self.shape}")

    @classmethod
    def trivial(cls, shape: Shape) -> "Parabolic":
        return cls(shape, frozenset())

    @classmethod
    def full(cls, shape: Shape) -> "Parabolic":
        gens = {i for i in range(1, shape.size) if i != shape.m}
        return cls(shape, frozenset(gens))

    def intervals(self) -> tuple[tuple[int, int], ...]:
        """Maximal symmetrized position intervals [a, b], 1-based inclusive."""
        gens = sorted(self.generators)
        out = []
        while gens:
            a = gens[0]
            b = a
            while gens and gens[0] == b:
                gens.pop(0)
                b += 1
            out.append((a, b))
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(f"s{i}" for i in sorted(self.generators)) or "e"


@lru_cache(maxsize=None)
def par_elements(par: Parabolic) -> dict[tuple[int, ...], int]:
    """All elements of the parabolic subgroup, mapped to their lengths."""
    k = par.shape.size
    start = identity_perm(k)
    seen = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for i in par.generators:
                q = apply_s(p, i)
                if q not in seen:
                    seen[q] = seen[p] + 1
                    nxt.append(q)
        frontier = nxt
    return seen


def longest_element(par: Parabolic) -> tuple[tuple[int, ...], int]:
    elems = par_elements(par)
    w0 = max(elems, key=lambda p: (elems[p], p))
    return w0, elems[w0]


def group_qfactorial(par: Parabolic):
    """[|W|] = the product of [k]! over the interval factors of the parabolic.

    Poincare polynomial identity: sum_{sigma} q^{l(w0) - 2 l(sigma)} = [|W|].
    """
    from .laurent import LaurentPoly, q_fact

    res = LaurentPoly.one()
    for a, b in par.intervals():
        res = res * q_fact(b - a + 1)
    return res


def is_antidominant(f: SignedTuple, par: Parabolic) -> bool:
    """Weakly increasing on covariant intervals, weakly decreasing on dual ones."""
    for i in par.generators:
        if i < f.shape.m:
            if f[i] > f[i + 1]:
                return False
        else:
            if f[i] < f[i + 1]:
                return False
    return True


def antidominant_rep(f: SignedTuple, par: Parabolic) -> tuple[SignedTuple, tuple[int, ...], int]:
    """The antidominant tuple in the orbit f.W and the minimal sorter.

    Returns (f0, tau, l(tau)) with f0 = f.act(tau) antidominant and tau of
    minimal length among permutations in W with that property (stable sort).
    """
    k = f.shape.size
    tau = list(range(k))
    for a, b in par.intervals():
        idx = list(range(a - 1, b))
        reverse = a > f.shape.m
        idx.sort(key=lambda j: -f.entries[j] if reverse else f.entries[j])
        tau[a - 1 : b] = idx
    tau_t = tuple(tau)
    return f.act(tau_t), tau_t, perm_length(tau_t)


def stabilizer(f: SignedTuple, par: Parabolic) -> Parabolic:
    """The parabolic {s_i in W : f(i) = f(i+1)}.

    For antidominant f this is the full stabilizer of f inside W.
    """
    gens = frozenset(i for i in par.generators if f[i] == f[i + 1])
    return Parabolic(f.shape, gens)


def coset_reps(sub: Parabolic, par: Parabolic) -> list[tuple[tuple[int, ...], int]]:
    """Minimal-length representatives of the right cosets sub\\W.

    Returned sorted by (length, one-line form); the last entry is the longest
    minimal representative.  sub must be generated by a subset of par's
    generators.
    """
    if not sub.generators <= par.generators:
        raise ValueError("stabilizer is not a standard parabolic of the group")
    elems = par_elements(par)
    sub_elems = par_elements(Parabolic(par.shape, sub.generators))
    buckets: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    for p, lp in elems.items():
        key = min(perm_mul(u, p) for u in sub_elems)
        best = buckets.get(key)
        if best is None or (lp, p) < (best[1], best[0]):
            buckets[key] = (p, lp)
    reps = sorted(buckets.values(), key=lambda t: (t[1], t[0]))
    if len(reps) * len(sub_elems) != len(elems):
        raise AssertionError("coset decomposition lost elements")
    return reps


# ---------------------------------------------------------------------------
# blocks


def window_tuples(shape: Shape, w: Window):
    """All signed tuples of the shape with letters inside the window."""
    for entries in itertools.product(w.letters(), repeat=shape.size):
        yield SignedTuple(shape, entries)


@lru_cache(maxsize=None)
def block(f: SignedTuple, w: Window) -> list[SignedTuple]:
    """The weight block of f inside the window, in a fixed linear extension.

    Elements are listed compatibly with the Bruhat order (smaller first);
    ties are broken lexicographically on the entry tuples, so the output is
    deterministic.  Cached; callers must treat the returned list as
    read-only.
    """
    if not f.in_window(w):
        raise WindowEscape(f"tuple {f} lies outside window {w}")
    target = weight(f)
    members = [g for g in window_tuples(f.shape, w) if weight(g) == target]
    below: dict[SignedTuple, set[SignedTuple]] = {g: set() for g in members}
    for g, h in itertools.permutations(members, 2):
        if bruhat_leq(g, h):
            below[h].add(g)
    out: list[SignedTuple] = []
    remaining = set(members)
    while remaining:
        ready = [g for g in remaining if not (below[g] & remaining)]
        nxt = min(ready, key=lambda g: g.entries)
        out.append(nxt)
        remaining.remove(nxt)
    return out


# ---------------------------------------------------------------------------
# weight <-> tuple dictionary for gl(m|n)


def weight_to_tuple(shape: Shape, lam: tuple[int, ...]) -> SignedTuple:
    """The tuple of a gl(m|n) integral weight under the rho-shifted bijection.

    f(i) = lam_i + m - i + 1 on the covariant sector and
    f(j) = -lam_j + j - m on the dual sector.

    >>> weight_to_tuple(Shape(1, 1), (0, 0)).entries
    (1, 1)
    """
    if len(lam) != shape.size:
        raise ValueError("weight length does not match shape")
    m = shape.m
    ent = [lam[i - 1] + m - i + 1 for i in range(1, shape.m + 1)]
    ent += [-lam[j - 1] + j - m for j in range(shape.m + 1, shape.size + 1)]
    return SignedTuple(shape, tuple(ent))


def tuple_to_weight(f: SignedTuple) -> tuple[int, ...]:
    """Inverse of weight_to_tuple.

    >>> sh = Shape(2, 1)
    >>> tuple_to_weight(weight_to_tuple(sh, (3, -1, 4)))
    (3, -1, 4)
    """
    m = f.shape.m
    lam = [f[i] - (m - i + 1) for i in range(1, m + 1)]
    lam += [(j - m) - f[j] for j in range(m + 1, f.shape.size + 1)]
    return tuple(lam)


def is_typical(f: SignedTuple) -> bool:
    """No letter shared between the two sectors."""
    m = f.shape.m
    return not (set(f.entries[:m]) & set(f.entries[m:]))
