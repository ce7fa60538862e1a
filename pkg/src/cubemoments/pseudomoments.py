"""The balanced pseudoexpectation on {-1,1}^n and its moment matrix.

The degree-(k) moment sequence is
    a_k = [k even] * (-1)^(k/2) * prod_{i < k/2} (2i+1)/(n-2i-1),
the unique S_n-invariant solution of k a_(k-1) + (n-k) a_(k+1) = 0 with
a_0 = 1, i.e. of the constraint that sum x_i should act as zero.  The
pseudomoment matrix Y is indexed by subsets S, T of [n] with
|S|, |T| <= floor(n/2) and has entries Y[S,T] = a_|S symdiff T|.

Multilinear polynomials live in the quotient by x_i^2 = 1, so monomials are
subset masks and monomial products are symmetric differences.  h_S denotes
the image of the monomial x^S under isotypic projection onto the two-row
component of shape (n-d, d), d = |S|; its coefficients have a hypergeometric
closed form cross-checked here against the group-averaging definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import combinatorics as cb
from . import exactmat as xm
from .characters import char_class_function
from .report import Report
from .scalars import Q, QZERO

BUILD_MAX_N = 16        # dense exact storage ceiling
BALANCED_CLOSED_MAX_N = 20
BALANCED_ENUM_MAX_N = 14
ISOTYPIC_BRUTE_MAX_N = 8
DECOMPOSITION_MAX_N = 8


@lru_cache(maxsize=None)
def _a_values(n: int) -> tuple:
    vals = [Q(1)]
    for k in range(1, n + 1):
        if k % 2:
            vals.append(QZERO)
        else:
            half = k // 2
            v = Q((-1) ** half)
            for i in range(half):
                v = v * Q(2 * i + 1, n - 2 * i - 1)
            vals.append(v)
    return tuple(vals)


def a_coeff(n: int, k: int):
    """Moment of a degree-k monomial under the balanced pseudoexpectation."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not (0 <= k <= n):
        raise ValueError(f"moment index k={k} outside [0, {n}]")
    return _a_values(n)[k]


def a_recursion_check(n: int) -> Report:
    """Defining three-term recursion plus the formal-binomial form of a_k."""
    report = Report()
    a = _a_values(n)
    report.expect(a[0] == 1, f"a_0 = {a[0]} should be 1")
    for k in range(1, n):
        lhs = k * a[k - 1] + (n - k) * a[k + 1]
        report.expect(lhs == 0, f"recursion fails at n={n}, k={k}: {lhs}")
    for k in range(1, n + 1, 2):
        report.expect(a[k] == 0, f"odd moment a_{k} = {a[k]} should vanish")
    for k in range(0, n + 1, 2):
        expected = (-1) ** (k // 2) * cb.formal_half_binomial(n, k // 2) / cb.binomial(n, k)
        report.expect(
            a[k] == expected,
            f"formal binomial ratio fails at n={n}, k={k}: {a[k]} != {expected}",
        )
    if n % 2 == 0 and n <= BALANCED_CLOSED_MAX_N:
        for k in range(0, n + 1):
            mask = (1 << k) - 1
            report.expect(
                a[k] == balanced_measure_moment(n, mask),
                f"balanced measure moment differs at n={n}, k={k}",
            )
    return report


# ---------------------------------------------------------------------------
# the pseudomoment matrix


@dataclass
class PseudomomentMatrix:
    """Dense exact matrix indexed by subsets of [n] of size <= floor(n/2),
    rows and columns in canonical (size, mask) order."""

    n: int
    subsets: list
    index: dict
    rows: list

    @property
    def size(self) -> int:
        return len(self.subsets)

    @property
    def d_max(self) -> int:
        return cb.d_max(self.n)

    def entry(self, s_mask: int, t_mask: int):
        return self.rows[self.index[s_mask]][self.index[t_mask]]

    def degree_offsets(self) -> list:
        """[(d, start, stop)] row ranges of the degree blocks."""
        out = []
        start = 0
        for d in range(self.d_max + 1):
            count = cb.binomial(self.n, d)
            out.append((d, start, start + count))
            start += count
        return out


def build_Y(n: int) -> PseudomomentMatrix:
    """The pseudomoment matrix Y with Y[S,T] = a_|S symdiff T|."""
    if not (2 <= n <= BUILD_MAX_N):
        raise ValueError(f"dense exact storage supports 2 <= n <= {BUILD_MAX_N}, got {n}")
    subsets = cb.enumerate_subsets(n, cb.d_max(n))
    a = _a_values(n)
    rows = [[a[(s ^ t).bit_count()] for t in subsets] for s in subsets]
    return PseudomomentMatrix(n, subsets, {s: i for i, s in enumerate(subsets)}, rows)


# ---------------------------------------------------------------------------
# multilinear polynomials


class MultilinearPoly:
    """Multilinear polynomial on the hypercube: subset mask -> coefficient.

    Multiplication reduces by x_i^2 = 1, so masks combine by xor."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        cb.check_n(n)
        self.n = n
        self.coeffs = {}
        if coeffs:
            limit = 1 << n
            for mask, c in coeffs.items():
                if not (0 <= mask < limit):
                    raise ValueError(f"monomial mask {mask} outside subsets of [{n}]")
                if c != 0:
                    self.coeffs[mask] = self.coeffs.get(mask, QZERO) + c
            self.coeffs = {m: c for m, c in self.coeffs.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearPoly)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        self._check(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, QZERO) + c
        return MultilinearPoly(self.n, out)

    def __sub__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return self + (-1) * other

    def __neg__(self) -> "MultilinearPoly":
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, MultilinearPoly):
            self._check(other)
            out = {}
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    key = m1 ^ m2
                    out[key] = out.get(key, QZERO) + c1 * c2
            return MultilinearPoly(self.n, out)
        return MultilinearPoly(self.n, {m: c * other for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((m.bit_count() for m in self.coeffs), default=0)

    def relabel(self, perm) -> "MultilinearPoly":
        """Apply a permutation of the n coordinates (0-based image tuple)."""
        return MultilinearPoly(
            self.n, {cb.perm_image_mask(perm, m): c for m, c in self.coeffs.items()}
        )

    def _check(self, other: "MultilinearPoly") -> None:
        if self.n != other.n:
            raise ValueError("polynomials on different hypercubes")

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{c}*x{cb.elements_of_mask(m)}" for m, c in sorted(self.coeffs.items())
        )
        return f"MultilinearPoly(n={self.n}, {terms or '0'})"


def x_monomial(n: int, mask: int, coeff=1) -> MultilinearPoly:
    return MultilinearPoly(n, {mask: Q(coeff)})


def x_sum(n: int) -> MultilinearPoly:
    """The linear form x_1 + ... + x_n."""
    return MultilinearPoly(n, {1 << i: Q(1) for i in range(n)})


def pseudo_expect(n: int, poly: MultilinearPoly):
    """Apply the balanced pseudoexpectation monomial-by-monomial."""
    if poly.n != n:
        raise ValueError(f"polynomial lives on n={poly.n}, expected {n}")
    a = _a_values(n)
    return sum((c * a[m.bit_count()] for m, c in poly.coeffs.items()), QZERO)


# ---------------------------------------------------------------------------
# the balanced measure (even n): uniform on zero-sum sign vectors


def balanced_measure_moment(n: int, mask: int):
    """E[x^S] under the uniform measure on balanced sign vectors,
    (-1)^(|S|/2) C(n/2, |S|/2) / C(n, |S|) for even |S|, zero for odd."""
    if n % 2 or n < 2:
        raise ValueError(f"the balanced measure needs even n >= 2, got {n}")
    if n > BALANCED_CLOSED_MAX_N:
        raise ValueError(f"guarded at n <= {BALANCED_CLOSED_MAX_N}, got {n}")
    if not (0 <= mask < (1 << n)):
        raise ValueError(f"subset mask {mask} outside subsets of [{n}]")
    size = mask.bit_count()
    if size % 2:
        return QZERO
    m = size // 2
    return Q((-1) ** m * cb.binomial(n // 2, m), cb.binomial(n, size))


def balanced_measure_moment_enum(n: int, mask: int):
    """The same moment by enumerating all C(n, n/2) balanced sign vectors."""
    if n % 2 or n < 2:
        raise ValueError(f"the balanced measure needs even n >= 2, got {n}")
    if n > BALANCED_ENUM_MAX_N:
        raise ValueError(f"enumeration guarded at n <= {BALANCED_ENUM_MAX_N}, got {n}")
    total = 0
    for plus_mask in cb.subsets_of_size(n, n // 2):
        # x_i = -1 exactly on positions outside plus_mask
        total += -1 if (mask & ~plus_mask).bit_count() % 2 else 1
    return Q(total, cb.binomial(n, n // 2))


# ---------------------------------------------------------------------------
# isotypic projections h_S


def isotypic_dimension(n: int, d: int) -> int:
    return cb.two_row_tableau_count(n, d)


def isotypic_coefficient(n: int, d: int, overlap: int):
    """Coefficient of x^B in h_S for |S| = |B| = d, |S cap B| = overlap:
    dim * (-1)^(d + overlap) / multinomial(n; d, d-overlap, n-2d+overlap)."""
    if not (0 <= d <= cb.d_max(n)):
        raise ValueError(f"need 0 <= d <= n/2, got n={n}, d={d}")
    if not (max(0, 2 * d - n) <= overlap <= d):
        raise ValueError(f"impossible overlap {overlap} for size {d}")
    dim = isotypic_dimension(n, d)
    sign = -1 if (d + overlap) % 2 else 1
    return Q(sign * dim, cb.multinomial(n, (d, d - overlap, n - 2 * d + overlap)))


def isotypic_h(n: int, s_mask: int) -> MultilinearPoly:
    """Projection of x^S onto the two-row isotypic component of its degree,
    materialized from the closed-form coefficients."""
    d = s_mask.bit_count()
    coeff_by_overlap = [isotypic_coefficient(n, d, v) for v in range(max(0, 2 * d - n), d + 1)]
    lo = max(0, 2 * d - n)
    coeffs = {}
    for b in cb.subsets_of_size(n, d):
        coeffs[b] = coeff_by_overlap[(b & s_mask).bit_count() - lo]
    return MultilinearPoly(n, coeffs)


def isotypic_h_bruteforce(n: int, s_mask: int) -> MultilinearPoly:
    """The defining group average (dim/n!) sum_pi chi(pi) x^(pi(S)), n <= 8."""
    cb.check_n(n, cap=ISOTYPIC_BRUTE_MAX_N)
    d = s_mask.bit_count()
    chi = char_class_function(n, d).as_dict()
    sums = {}
    for perm in cb.permutations_iter(n):
        image = cb.perm_image_mask(perm, s_mask)
        sums[image] = sums.get(image, 0) + chi[cb.cycle_type_of_perm(perm)]
    scale = Q(isotypic_dimension(n, d), math.factorial(n))
    return MultilinearPoly(n, {m: scale * v for m, v in sums.items()})


def E_hS_squared(n: int, d: int):
    """Closed form for the pseudoexpectation of h_S^2, |S| = d:
    (n-2d+1)/(n-d+1) * prod_{i<d} (n-2i)/(n-2i-1), strictly positive."""
    if not (0 <= d <= cb.d_max(n)):
        raise ValueError(f"need 0 <= d <= n/2, got n={n}, d={d}")
    v = Q(n - 2 * d + 1, n - d + 1)
    for i in range(d):
        v = v * Q(n - 2 * i, n - 2 * i - 1)
    return v


def E_hS_squared_direct(n: int, d: int):
    """The same value by contraction: since h_S is a projection of x^S,
    the pseudoexpectation of h_S^2 equals that of h_S * x^S."""
    s_mask = (1 << d) - 1
    h = isotypic_h(n, s_mask)
    return pseudo_expect(n, h * x_monomial(n, s_mask))


# ---------------------------------------------------------------------------
# finite differences of the even moment sequence


def finite_difference_a(n: int, a: int, k: int):
    """Closed form a_2k * prod_{i<a} (n-2i)/(n-2k-2i-1) for the a-fold
    alternating difference of f(k) = a_2k.  Needs 2(k+a) <= n; at
    2(k+a) = n+1 both routes leave the moment domain."""
    if a < 0 or k < 0 or 2 * (k + a) > n:
        raise ValueError(f"need a, k >= 0 and 2(k+a) <= n, got n={n}, a={a}, k={k}")
    v = a_coeff(n, 2 * k)
    for i in range(a):
        v = v * Q(n - 2 * i, n - 2 * k - 2 * i - 1)
    return v


def finite_difference_a_direct(n: int, a: int, k: int):
    """The literal alternating sum sum_j (-1)^j C(a,j) a_2(k+j)."""
    if a < 0 or k < 0 or 2 * (k + a) > n:
        raise ValueError(f"need a, k >= 0 and 2(k+a) <= n, got n={n}, a={a}, k={k}")
    return sum(
        ((-1) ** j * cb.binomial(a, j)) * a_coeff(n, 2 * (k + j)) for j in range(a + 1)
    )


# ---------------------------------------------------------------------------
# degree decomposition of the function space on the hypercube


def specht_x_basis(n: int, d: int) -> list:
    """Column-difference polynomials prod_a (x_i_a - x_j_a) over standard
    two-row tableaux of shape (n-d, d): a basis of one copy of the
    corresponding irreducible inside the multilinear functions."""
    out = []
    for tableau in cb.standard_two_row_tableaux(n, d):
        poly = MultilinearPoly(n, {0: Q(1)})
        for top, bottom in cb.tableau_column_pairs(tableau):
            factor = MultilinearPoly(
                n, {1 << (top - 1): Q(1), 1 << (bottom - 1): Q(-1)}
            )
            poly = poly * factor
        out.append(poly)
    return out


def hypercube_decomposition_check(n: int) -> Report:
    """The multilinear function space splits as sums of (sum x)^t times the
    two-row pieces: counts the dimensions and certifies exact full rank 2^n
    of the assembled coefficient matrix (n <= 8)."""
    cb.check_n(n, cap=DECOMPOSITION_MAX_N)
    report = Report()
    dim_total = sum(
        (n - 2 * d + 1) * isotypic_dimension(n, d) for d in range(cb.d_max(n) + 1)
    )
    report.expect(
        dim_total == 2 ** n,
        f"dimension count at n={n}: {dim_total} != {2 ** n}",
    )
    all_masks = cb.enumerate_subsets(n, n)
    position = {m: i for i, m in enumerate(all_masks)}
    sumx = x_sum(n)
    vectors = []
    for d in range(cb.d_max(n) + 1):
        for w in specht_x_basis(n, d):
            poly = w
            for _ in range(n - 2 * d + 1):
                row = [QZERO] * (2 ** n)
                for mask, c in poly.coeffs.items():
                    row[position[mask]] = c
                vectors.append(row)
                poly = poly * sumx
    report.expect(
        len(vectors) == 2 ** n,
        f"assembled {len(vectors)} vectors at n={n}, expected {2 ** n}",
    )
    r = xm.rank(vectors)
    report.expect(
        r == 2 ** n,
        f"decomposition rank at n={n}: {r} != {2 ** n}",
    )
    return report
