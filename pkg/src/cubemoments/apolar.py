"""Apolar polynomial algebra over the simplex frame.

The frame v_1, ..., v_n is any spanning set of n unit vectors in dimension
n-1 with pairwise inner products -1/(n-1) (rows of its Gram matrix M sum to
zero).  All polynomials here are homogeneous forms written in the frame
coordinates <v_i, z>; a monomial is a sorted multiset of frame indices and
every coefficient is an exact rational, so no irrational geometry ever
enters.  The apolar pairing of two products of linear forms is the permanent
of the matrix of pairwise Gram entries divided by (degree)!, extended
bilinearly; it is positive definite on actual polynomials, and its kernel on
formal multisets is exactly the ideal generated by sum_i <v_i, z>, which is
what makes equals_zero a semantic zero test.

The harmonic pieces: specht_basis(n, d) returns the column-difference
products attached to standard two-row tableaux, a basis of the space
annihilated by every squared frame derivative <v_k, d/dz>^2, and hS_span is
the frame-side image of the isotypic projection h_S with the same
closed-form coefficients as on the hypercube side.
"""

from __future__ import annotations

import math

from . import combinatorics as cb
from . import exactmat as xm
from .pseudomoments import isotypic_coefficient, isotypic_dimension
from .report import Report
from .scalars import Q, QZERO

PERMANENT_MAX_SIZE = 12
JOHNSON_MAX_N = 12
PROJECTION_MAX_N = 8


def frame_gram_entry(n: int, i: int, j: int):
    """<v_i, v_j>: 1 on the diagonal, -1/(n-1) off it (indices 1-based)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"frame indices {i}, {j} outside [1, {n}]")
    return Q(1) if i == j else Q(-1, n - 1)


class SpanPoly:
    """Homogeneous form in the frame coordinates: sorted index tuple -> coeff."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs=None):
        if n < 2:
            raise ValueError(f"frame needs n >= 2, got {n}")
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        self.n = n
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                key = tuple(key)
                if len(key) != degree or tuple(sorted(key)) != key:
                    raise ValueError(f"monomial {key} is not a sorted degree-{degree} multiset")
                if key and not (1 <= key[0] and key[-1] <= n):
                    raise ValueError(f"monomial {key} uses indices outside [1, {n}]")
                if c != 0:
                    self.coeffs[key] = self.coeffs.get(key, QZERO) + c
            self.coeffs = {k: c for k, c in self.coeffs.items() if c != 0}

    def is_structurally_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpanPoly)
            and (self.n, self.degree) == (other.n, other.degree)
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "SpanPoly") -> "SpanPoly":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, QZERO) + c
        return SpanPoly(self.n, self.degree, out)

    def __sub__(self, other: "SpanPoly") -> "SpanPoly":
        return self + (-1) * other

    def __neg__(self) -> "SpanPoly":
        return (-1) * self

    def scaled(self, c) -> "SpanPoly":
        return SpanPoly(self.n, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SpanPoly):
            if self.n != other.n:
                raise ValueError("frame polynomials on different frames")
            out = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    key = tuple(sorted(k1 + k2))
                    out[key] = out.get(key, QZERO) + c1 * c2
            return SpanPoly(self.n, self.degree + other.degree, out)
        return self.scaled(other)

    __rmul__ = __mul__

    def relabel(self, perm) -> "SpanPoly":
        """Permute frame indices by a 0-based image tuple."""
        return SpanPoly(
            self.n,
            self.degree,
            {
                tuple(sorted(perm[i - 1] + 1 for i in key)): c
                for key, c in self.coeffs.items()
            },
        )

    def _check(self, other: "SpanPoly") -> None:
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("frame polynomials of different frame or degree")

    def __repr__(self) -> str:
        terms = ", ".join(f"{c}*v{list(k)}" for k, c in sorted(self.coeffs.items()))
        return f"SpanPoly(n={self.n}, deg={self.degree}, {terms or '0'})"


def span_monomial(n: int, indices, coeff=1) -> SpanPoly:
    """Product of frame linear forms prod <v_i, z> over a multiset of indices."""
    key = tuple(sorted(indices))
    return SpanPoly(n, len(key), {key: Q(coeff)})


def frame_sum(n: int) -> SpanPoly:
    """sum_i <v_i, z>, the linear form whose multiples the pairing kills."""
    return SpanPoly(n, 1, {(i,): Q(1) for i in range(1, n + 1)})


# ---------------------------------------------------------------------------
# permanents and the apolar pairing


def permanent(rows):
    """Exact permanent by subset dynamic programming, O(2^m m); m <= 12."""
    m = len(rows)
    if m > PERMANENT_MAX_SIZE:
        raise ValueError(f"permanent guarded at size {PERMANENT_MAX_SIZE}, got {m}")
    if any(len(r) != m for r in rows):
        raise ValueError("permanent needs a square matrix")
    if m == 0:
        return Q(1)
    dp = [QZERO] * (1 << m)
    dp[0] = Q(1)
    for mask in range(1, 1 << m):
        row = rows[mask.bit_count() - 1]
        acc = QZERO
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            prev = dp[mask ^ low]
            if prev != 0 and row[j] != 0:
                acc = acc + prev * row[j]
            rest ^= low
        dp[mask] = acc
    return dp[-1]


def _common_profile(a_key, b_key):
    """Multiset-intersection profile of two sorted index tuples: the sorted
    list of (multiplicity in A, multiplicity in B) over shared values."""
    common = []
    i = j = 0
    while i < len(a_key) and j < len(b_key):
        if a_key[i] < b_key[j]:
            i += 1
        elif a_key[i] > b_key[j]:
            j += 1
        else:
            v = a_key[i]
            ma = mb = 0
            while i < len(a_key) and a_key[i] == v:
                ma += 1
                i += 1
            while j < len(b_key) and b_key[j] == v:
                mb += 1
                j += 1
            common.append((ma, mb))
    common.sort()
    return tuple(common)


_pattern_cache: dict = {}


def _pattern_permanent(n: int, degree: int, profile):
    """Permanent of the Gram pattern matrix for monomials with the given
    overlap profile; depends only on (n, degree, profile), so memoized."""
    key = (n, degree, profile)
    cached = _pattern_cache.get(key)
    if cached is not None:
        return cached
    c = Q(-1, n - 1)
    a_vals, b_vals = [], []
    fresh = 0
    for ma, mb in profile:
        fresh += 1
        a_vals.extend([fresh] * ma)
        b_vals.extend([fresh] * mb)
    while len(a_vals) < degree:
        fresh += 1
        a_vals.append(fresh)
    while len(b_vals) < degree:
        fresh += 1
        b_vals.append(fresh)
    rows = [[Q(1) if x == y else c for y in b_vals] for x in a_vals]
    value = permanent(rows)
    _pattern_cache[key] = value
    return value


def apolar_ip(p: SpanPoly, q: SpanPoly):
    """Apolar pairing <p, q> = (1/deg!) p(d/dz) q, extended bilinearly from
    permanents of Gram entries on products of linear forms.  Forms of
    different degrees pair to zero by convention."""
    if p.n != q.n:
        raise ValueError("frame polynomials on different frames")
    if p.degree != q.degree:
        return QZERO
    n, degree = p.n, p.degree
    total = QZERO
    for a_key, a_c in p.coeffs.items():
        for b_key, b_c in q.coeffs.items():
            total = total + a_c * b_c * _pattern_permanent(
                n, degree, _common_profile(a_key, b_key)
            )
    return total / math.factorial(degree)


def derive(p: SpanPoly, j: int) -> SpanPoly:
    """Directional frame derivative <v_j, d/dz> p.

    On a monomial it replaces each factor <v_i, z> in turn by <v_j, v_i>.
    Differentiating a degree-0 form would need the degree -1 zero space,
    which is deliberately not represented: that case raises.
    """
    if p.degree == 0:
        raise ValueError("cannot differentiate a degree-0 frame polynomial")
    if not (1 <= j <= p.n):
        raise ValueError(f"frame index {j} outside [1, {p.n}]")
    out: dict = {}
    for key, c in p.coeffs.items():
        for pos, i in enumerate(key):
            if pos > 0 and key[pos - 1] == i:
                continue  # same value handled once with its multiplicity
            mult = key.count(i)
            reduced = key[:pos] + key[pos + 1 :]
            add = c * mult * frame_gram_entry(p.n, j, i)
            out[reduced] = out.get(reduced, QZERO) + add
    return SpanPoly(p.n, p.degree - 1, out)


def equals_zero(p: SpanPoly) -> bool:
    """Semantic zero test: the pairing is positive definite modulo the ideal
    of sum_i <v_i, z>, so p vanishes as a polynomial iff <p, p> = 0."""
    return apolar_ip(p, p) == 0


def apply_operator(q: SpanPoly, r: SpanPoly) -> SpanPoly:
    """q(d/dz) r via iterated frame derivatives, one monomial at a time."""
    if q.degree > r.degree:
        raise ValueError("operator degree exceeds target degree")
    total = SpanPoly(r.n, r.degree - q.degree)
    for key, c in q.coeffs.items():
        term = r
        for i in key:
            term = derive(term, i)
        total = total + term.scaled(c)
    return total


def adjointness_check(p: SpanPoly, q: SpanPoly, r: SpanPoly) -> Report:
    """Multiplication by q and application of q(d/dz) are adjoint:
    <p q, r> = (a! / (a+b)!) <p, q(d/dz) r> with a = deg p, b = deg q,
    deg r = a + b."""
    report = Report()
    a, b = p.degree, q.degree
    if r.degree != a + b:
        raise ValueError(f"degree mismatch: deg r = {r.degree} != {a} + {b}")
    lhs = apolar_ip(p * q, r)
    rhs = Q(math.factorial(a), math.factorial(a + b)) * apolar_ip(p, apply_operator(q, r))
    report.expect(lhs == rhs, f"adjointness fails: {lhs} != {rhs}")
    return report


# ---------------------------------------------------------------------------
# harmonic spaces


def specht_basis(n: int, d: int) -> list:
    """Column-difference products for standard two-row tableaux, in tableau
    order: a basis of the degree-d simplex-harmonic space."""
    out = []
    for tableau in cb.standard_two_row_tableaux(n, d):
        poly = SpanPoly(n, 0, {(): Q(1)})
        for top, bottom in cb.tableau_column_pairs(tableau):
            factor = SpanPoly(n, 1, {(top,): Q(1), (bottom,): Q(-1)})
            poly = poly * factor
        out.append(poly)
    return out


def is_frame_harmonic(p: SpanPoly) -> bool:
    """Whether every squared frame derivative <v_k, d/dz>^2 kills p.  Second
    derivatives of forms of degree <= 1 vanish identically."""
    if p.degree <= 1:
        return True
    for k in range(1, p.n + 1):
        if not equals_zero(derive(derive(p, k), k)):
            return False
    return True


def hS_span(n: int, s_mask: int) -> SpanPoly:
    """Frame-side isotypic projection of the monomial over S: the same
    closed-form coefficients as the hypercube-side h_S."""
    d = s_mask.bit_count()
    if d > cb.d_max(n):
        raise ValueError(f"|S| = {d} exceeds floor(n/2) = {cb.d_max(n)}")
    coeffs = {}
    for b in cb.subsets_of_size(n, d):
        key = cb.elements_of_mask(b)
        coeffs[key] = isotypic_coefficient(n, d, (b & s_mask).bit_count())
    return SpanPoly(n, d, coeffs)


def sigma_sq(n: int, d: int):
    """Scale tying hypercube pseudoexpectations to frame pairings:
    sigma_d^2 = d! ((n-1)/n)^d prod_{i<d} (n-2i)/(n-2i-1)."""
    if not (0 <= d <= cb.d_max(n)):
        raise ValueError(f"need 0 <= d <= n/2, got n={n}, d={d}")
    v = Q(math.factorial(d)) * Q(n - 1, n) ** d
    for i in range(d):
        v = v * Q(n - 2 * i, n - 2 * i - 1)
    return v


def beta(n: int, d: int, k: int):
    """Pairing of two degree-d frame monomials whose index sets share k
    elements: permanent of the canonical pattern over the frame Gram, / d!."""
    if not (0 <= k <= d <= cb.d_max(n)):
        raise ValueError(f"need 0 <= k <= d <= n/2, got n={n}, d={d}, k={k}")
    if 2 * d - k > n:
        raise ValueError(f"pattern needs 2d-k <= n, got n={n}, d={d}, k={k}")
    a_idx = range(1, d + 1)
    b_idx = list(range(1, k + 1)) + list(range(d + 1, 2 * d - k + 1))
    return apolar_ip(span_monomial(n, a_idx), span_monomial(n, b_idx))


def johnson_slice_gram(n: int, d: int) -> list:
    """The claimed Gram over (d-1)-subsets: diagonal n-d+1, entry 1 between
    subsets meeting in d-2 points, zero otherwise (rows in canonical order).
    Positive definiteness is certified by exact elimination pivots."""
    if not (1 <= d <= cb.d_max(n)):
        raise ValueError(f"need 1 <= d <= n/2, got n={n}, d={d}")
    if n > JOHNSON_MAX_N:
        raise ValueError(f"guarded at n <= {JOHNSON_MAX_N}, got {n}")
    subsets = cb.subsets_of_size(n, d - 1)
    out = []
    for s in subsets:
        row = []
        for t in subsets:
            if s == t:
                row.append(Q(n - d + 1))
            elif (s & t).bit_count() == d - 2:
                row.append(Q(1))
            else:
                row.append(QZERO)
        out.append(row)
    return out


def harmonic_projection_consistency(n: int, d: int) -> Report:
    """hS_span really is the apolar-orthogonal projection of the frame
    monomial over S onto the harmonic space: solve the Specht Gram system
    exactly and compare (n <= 8)."""
    cb.check_n(n, cap=PROJECTION_MAX_N)
    if not (0 <= d <= cb.d_max(n)):
        raise ValueError(f"need 0 <= d <= n/2, got n={n}, d={d}")
    report = Report()
    basis = specht_basis(n, d)
    dim = isotypic_dimension(n, d)
    report.expect(len(basis) == dim, f"basis size {len(basis)} != {dim}")
    gram = [[apolar_ip(bi, bj) for bj in basis] for bi in basis]
    report.expect(
        xm.rank(gram) == dim,
        f"Specht Gram at n={n}, d={d} is singular",
    )
    for s in cb.subsets_of_size(n, d):
        mono = span_monomial(n, cb.elements_of_mask(s))
        rhs = [[apolar_ip(bi, mono)] for bi in basis]
        solution = xm.solve_consistent(gram, rhs)
        projection = SpanPoly(n, d)
        for coeff_row, bi in zip(solution, basis):
            projection = projection + bi.scaled(coeff_row[0])
        difference = projection - hS_span(n, s)
        report.expect(
            equals_zero(difference),
            f"projection mismatch at n={n}, S={cb.elements_of_mask(s)}",
        )
    return report
