"""Endomorphisms of B_n and their composition monoid.

Maps act on the right: the composite fg applies f first, then g.  Every
endomorphism is stored as its full image vector over B_n table ids, tagged as
an automorphism, the zero constant, or a constant onto a diagonal idempotent.

The monoid is enumerated two independent ways: structurally (all n!
automorphisms plus the n + 1 idempotent-valued constants) and, for small n, by
exhaustive backtracking over all multiplicative self-maps.  The two must agree;
the second exists to check the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .brandt import THETA, build_brandt, element_to_id, id_to_element
from .core import ResourceLimitError, SemigroupTable, restrict

AUTOMORPHISM = "automorphism"
ZERO_CONSTANT = "zero_constant"
NONZERO_CONSTANT = "nonzero_constant"

STRUCTURAL_MAX_N = 6
ORACLE_MAX_N = 3

Perm = tuple[int, ...]


def check_perm(sigma, n: int) -> None:
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma!r} is not a permutation of 1..{n}")


def perm_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def perm_compose(sigma, tau) -> tuple[int, ...]:
    """Apply sigma first, then tau."""
    return tuple(tau[s - 1] for s in sigma)


def transposition(n: int, a: int, b: int) -> tuple[int, ...]:
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"transposition needs two distinct points in 1..{n}")
    sigma = list(range(1, n + 1))
    sigma[a - 1], sigma[b - 1] = b, a
    return tuple(sigma)


def full_cycle(n: int) -> tuple[int, ...]:
    """The n-cycle sending 1 -> 2 -> ... -> n -> 1."""
    return tuple(range(2, n + 1)) + (1,)


def perm_cycles(sigma) -> list[tuple[int, ...]]:
    """Disjoint cycles of length >= 2, each starting at its smallest point."""
    seen = set()
    cycles = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = sigma[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = sigma[nxt - 1]
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
    return cycles


def perm_label(sigma) -> str:
    cycles = perm_cycles(sigma)
    if not cycles:
        return "id"
    return "".join("(" + ",".join(map(str, cyc)) + ")" for cyc in cycles)


@lru_cache(maxsize=None)
def _brandt_product(n: int):
    return build_brandt(n).product


@dataclass(frozen=True)
class Endomorphism:
    """A multiplicative self-map of B_n, as its image vector over table ids.

    kind is one of AUTOMORPHISM (with perm set), NONZERO_CONSTANT (with value
    i for the constant onto (i, i)) or ZERO_CONSTANT.
    """

    n: int
    image: tuple[int, ...]
    kind: str
    perm: tuple[int, ...] | None = None
    value: int | None = None

    @property
    def label(self) -> str:
        if self.kind == AUTOMORPHISM:
            return "phi_" + perm_label(self.perm)
        if self.kind == NONZERO_CONSTANT:
            return f"xi_({self.value},{self.value})"
        return "xi_theta"

    def __call__(self, eid: int) -> int:
        return self.image[eid]


def phi_of_perm(sigma, n: int) -> Endomorphism:
    """The automorphism (i, j) -> (i sigma, j sigma), fixing the zero."""
    check_perm(sigma, n)
    image = [0] * (n * n + 1)
    for i in range(1, n + 1):
        si = sigma[i - 1]
        for j in range(1, n + 1):
            image[element_to_id((i, j), n)] = element_to_id((si, sigma[j - 1]), n)
    return Endomorphism(n, tuple(image), AUTOMORPHISM, perm=tuple(sigma))


def constant_map(target, n: int) -> Endomorphism:
    """The constant map onto target, which must be idempotent.

    Constants onto (i, j) with i != j are rejected: they would break
    multiplicativity, since (i, j) + (i, j) is the zero.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    size = n * n + 1
    if target is THETA:
        return Endomorphism(n, (0,) * size, ZERO_CONSTANT)
    i, j = target
    if i != j:
        raise ValueError(f"constant onto non-idempotent {target} is not multiplicative")
    tid = element_to_id((i, i), n)
    return Endomorphism(n, (tid,) * size, NONZERO_CONSTANT, value=i)


def _tag_image(n: int, image) -> tuple[str, tuple[int, ...] | None, int | None]:
    """Classify an image vector as (kind, perm, value); raises if it fits no kind."""
    size = n * n + 1
    first = image[0]
    if all(v == first for v in image):
        if first == 0:
            return ZERO_CONSTANT, None, None
        e = id_to_element(first, n)
        if e is not THETA and e[0] == e[1]:
            return NONZERO_CONSTANT, None, e[0]
        raise ValueError(f"constant image onto non-idempotent id {first}")
    if sorted(image) == list(range(size)):
        # recover the permutation from the diagonal, then re-check the whole vector
        sigma = []
        for i in range(1, n + 1):
            e = id_to_element(image[element_to_id((i, i), n)], n)
            if e is THETA or e[0] != e[1]:
                raise ValueError("bijective image does not permute the diagonal")
            sigma.append(e[0])
        sigma = tuple(sigma)
        check_perm(sigma, n)
        if phi_of_perm(sigma, n).image != tuple(image):
            raise ValueError("bijective image is not induced by a permutation")
        return AUTOMORPHISM, sigma, None
    raise ValueError("image is neither constant nor bijective")


def from_image(n: int, image) -> Endomorphism:
    """Build a verified endomorphism: checks multiplicativity on all pairs, then classifies."""
    size = n * n + 1
    image = tuple(image)
    if len(image) != size:
        raise ValueError(f"image vector has length {len(image)}, expected {size}")
    for v in image:
        if not 0 <= v < size:
            raise ValueError(f"image value {v} out of range [0, {size})")
    prod = _brandt_product(n)
    for x in range(size):
        fx = image[x]
        row_x = prod[x]
        for y in range(size):
            if image[row_x[y]] != prod[fx][image[y]]:
                raise ValueError(f"map is not multiplicative at ({x}, {y})")
    kind, sigma, value = _tag_image(n, image)
    return Endomorphism(n, image, kind, perm=sigma, value=value)


def compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """Right-action composite: x -> (x f) g."""
    if f.n != g.n:
        raise ValueError("cannot compose endomorphisms of different degrees")
    image = tuple(g.image[v] for v in f.image)
    kind, sigma, value = _tag_image(f.n, image)
    return Endomorphism(f.n, image, kind, perm=sigma, value=value)


def classify(f: Endomorphism) -> str:
    """Re-verify multiplicativity from scratch and return the kind tag."""
    return from_image(f.n, f.image).kind


def canonical_sort_key(f: Endomorphism):
    """Automorphisms by permutation (identity first), then constants by value, zero last."""
    if f.kind == AUTOMORPHISM:
        return (0, f.perm)
    if f.kind == NONZERO_CONSTANT:
        return (1, f.value)
    return (2, 0)


class EndoMonoid:
    """All endomorphisms of B_n under composition, with a fixed element order.

    Element ids: the n! automorphisms sorted by permutation image (identity
    first), then the constants onto (1,1)..(n,n), then the zero constant last.
    """

    def __init__(self, n: int, elements):
        self.n = n
        self.elements = tuple(elements)
        self._index = {f.image: k for k, f in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate endomorphisms")
        rows = []
        for f in self.elements:
            row = []
            for g in self.elements:
                image = tuple(g.image[v] for v in f.image)
                row.append(self._index[image])
            rows.append(row)
        self.table = SemigroupTable.from_rows(rows, [f.label for f in self.elements])

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, f: Endomorphism) -> int:
        try:
            return self._index[f.image]
        except KeyError:
            raise ValueError("endomorphism does not belong to this monoid") from None

    def perm_id(self, sigma) -> int:
        """Id of the automorphism induced by sigma."""
        return self.index_of(phi_of_perm(sigma, self.n))

    def constant_id(self, i: int) -> int:
        """Id of the constant onto (i, i)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"no constant onto ({i},{i}) for n={self.n}")
        return math.factorial(self.n) + (i - 1)

    @property
    def zero_id(self) -> int:
        """Id of the zero constant (always last)."""
        return len(self.elements) - 1

    @property
    def automorphism_ids(self) -> range:
        return range(math.factorial(self.n))

    @property
    def constant_ids(self) -> range:
        """Ids of all n + 1 constants, the zero constant included."""
        return range(math.factorial(self.n), len(self.elements))

    def aut_subtable(self) -> SemigroupTable:
        """Subtable on the automorphisms (a copy of the symmetric group S_n)."""
        return restrict(self.table, self.automorphism_ids)

    def sidecar(self) -> dict:
        """JSON-ready description of every element."""
        return {
            "n": self.n,
            "size": len(self.elements),
            "elements": [
                {
                    "id": k,
                    "label": f.label,
                    "kind": f.kind,
                    "image": list(f.image),
                    "perm": None if f.perm is None else list(f.perm),
                    "value": f.value,
                }
                for k, f in enumerate(self.elements)
            ],
        }


def enumerate_endomorphisms_structural(n: int, max_n: int = STRUCTURAL_MAX_N) -> EndoMonoid:
    """End(B_n) from its known shape: n! automorphisms and n + 1 constants.

    Sizes grow factorially, so n is capped (default 6) to keep the table
    buildable; raise the cap explicitly at your own risk.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the factorial enumeration cap n <= {max_n}")
    elements = [phi_of_perm(sigma, n) for sigma in permutations(range(1, n + 1))]
    elements += [constant_map((i, i), n) for i in range(1, n + 1)]
    elements.append(constant_map(THETA, n))
    return EndoMonoid(n, elements)


def enumerate_endomorphisms_oracle(n: int, max_n: int = ORACLE_MAX_N) -> list[Endomorphism]:
    """Every multiplicative self-map of B_n, found by exhaustive backtracking.

    Assigns images in table-id order and rejects a partial map as soon as some
    fully-assigned triple violates f(x + y) = f(x) + f(y).  The image of the
    zero is restricted up front to idempotents, which the law itself forces.
    Independent of the structural enumeration; results sorted canonically.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the oracle enumeration cap n <= {max_n}")
    prod = _brandt_product(n)
    size = n * n + 1

    hitters = [[] for _ in range(size)]
    for x in range(size):
        for y in range(size):
            hitters[prod[x][y]].append((x, y))
    idem = [e for e in range(size) if prod[e][e] == e]

    image = [0] * size
    found: list[tuple[int, ...]] = []

    def consistent(e: int) -> bool:
        v = image[e]
        for x in range(e + 1):
            p = prod[x][e]
            if p <= e and image[p] != prod[image[x]][v]:
                return False
            p = prod[e][x]
            if p <= e and image[p] != prod[v][image[x]]:
                return False
        for x, y in hitters[e]:
            if x <= e and y <= e and v != prod[image[x]][image[y]]:
                return False
        return True

    def assign(e: int) -> None:
        if e == size:
            found.append(tuple(image))
            return
        for v in idem if e == 0 else range(size):
            image[e] = v
            if consistent(e):
                assign(e + 1)

    assign(0)
    endos = [from_image(n, img) for img in found]
    endos.sort(key=canonical_sort_key)
    return endos
