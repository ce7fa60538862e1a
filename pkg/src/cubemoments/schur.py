"""Schur complements of exact Gram matrices, without pseudoinverses.

For a symmetric matrix M split into blocks by a leading index range, the
complement M22 - M21 M11^+ M12 is computed here by solving the consistent
system M11 X = M12 with fraction-free elimination and forming M22 - M21 X.
When M is the Gram matrix of vectors (a_1..a_m, b_1..b_n), any two solutions
differ by kernel columns of M11, and those pair to zero against M21, so the
complement never depends on the choice; it equals the Gram matrix of the
b_j projected orthogonally off the span of the a_i.  That Gramian reading
is what drives the iterated elimination of the pseudomoment matrix: after
eliminating the degree blocks below k, the leading block is exactly
sigma_k^2 times the apolar Gram of the harmonic projections h_S over
|S| = k, and it lies in the Johnson scheme (entries depend only on |S cap
T|).  A failure of consistency or of either structural claim is reported
exactly, never approximated.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import combinatorics as cb
from . import exactmat as xm
from .apolar import apolar_ip, hS_span, sigma_sq
from .pseudomoments import build_Y
from .report import Report
from .rng import SplitMix64
from .scalars import Q, QZERO

ITERATED_MAX_N = 8


@dataclass
class BlockedMatrix:
    """A symmetric exact matrix with a designated leading block of size head."""

    matrix: list
    head: int

    def __post_init__(self):
        size = len(self.matrix)
        if any(len(row) != size for row in self.matrix):
            raise ValueError("blocked matrix must be square")
        if not xm.is_symmetric(self.matrix):
            raise ValueError("blocked matrix must be symmetric")
        if not (0 <= self.head <= size):
            raise ValueError(f"head {self.head} outside [0, {size}]")


def schur_complement(blocked: BlockedMatrix) -> list:
    """M22 - M21 M11^+ M12 via a consistent solve on the leading block.

    Raises InconsistentBlockError when M11 X = M12 has no solution, which
    cannot happen for a PSD leading block (Gram case)."""
    m = blocked.matrix
    h = blocked.head
    size = len(m)
    if h == 0:
        return [row[:] for row in m]
    if h == size:
        return []
    a = [row[:h] for row in m[:h]]
    b = [row[h:] for row in m[:h]]  # head x tail
    c = [row[h:] for row in m[h:]]
    x = xm.solve_consistent(a, b)
    tail = size - h
    out = []
    for i in range(tail):
        row = []
        for j in range(tail):
            acc = c[i][j]
            for k in range(h):
                if b[k][i] != 0 and x[k][j] != 0:
                    acc = acc - b[k][i] * x[k][j]
            row.append(acc)
        out.append(row)
    return out


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a != 0 and b != 0), QZERO)


def _gram(vectors) -> list:
    return [[_dot(u, v) for v in vectors] for u in vectors]


def gram_schur_property_check(seed: int, trials: int = 100, dims=(2, 2, 4)) -> Report:
    """The Schur complement of a Gram matrix equals the Gram matrix of the
    projected tail vectors, computed here as explicit rational vectors
    b_j - sum_k t_kj a_k with A t_j = (<a_k, b_j>)_k.

    Random integer vectors with entries in [-3, 3]; every few trials mix in
    the degenerate shapes: duplicated leading vectors (singular A), all-zero
    leading vectors (complement = Gram of the b's), and tails inside the
    leading span (zero complement).
    """
    rng = SplitMix64(seed)
    lead_count, tail_count, ambient = dims
    report = Report()
    for trial in range(trials):
        a_vecs = [
            [Q(rng.randint(-3, 3)) for _ in range(ambient)] for _ in range(lead_count)
        ]
        b_vecs = [
            [Q(rng.randint(-3, 3)) for _ in range(ambient)] for _ in range(tail_count)
        ]
        zero_leads = trial % 7 == 3
        span_tails = trial % 11 == 5
        if zero_leads:
            a_vecs = [[QZERO] * ambient for _ in range(lead_count)]
        elif trial % 5 == 2 and lead_count >= 2:
            a_vecs[1] = a_vecs[0][:]
        if span_tails and not zero_leads:
            b_vecs = []
            for _ in range(tail_count):
                combo = [QZERO] * ambient
                for a in a_vecs:
                    c = rng.randint(-2, 2)
                    combo = [x + c * y for x, y in zip(combo, a)]
                b_vecs.append(combo)

        gram = _gram(a_vecs + b_vecs)
        complement = schur_complement(BlockedMatrix(gram, lead_count))

        lead_gram = [row[:lead_count] for row in gram[:lead_count]]
        cross = [
            [_dot(a_vecs[k], b_vecs[j]) for j in range(tail_count)]
            for k in range(lead_count)
        ]
        coeffs = xm.solve_consistent(lead_gram, cross)
        projected = []
        for j in range(tail_count):
            vec = list(b_vecs[j])
            for k in range(lead_count):
                t = coeffs[k][j]
                if t != 0:
                    vec = [x - t * y for x, y in zip(vec, a_vecs[k])]
            projected.append(vec)
        report.expect(
            xm.mat_eq(complement, _gram(projected)),
            f"complement != projected Gram at trial {trial} (seed {seed})",
        )
        if span_tails and not zero_leads:
            report.expect(
                all(v == 0 for row in complement for v in row),
                f"span-tail complement nonzero at trial {trial}",
            )
        if zero_leads:
            report.expect(
                xm.mat_eq(complement, _gram(b_vecs)),
                f"zero-lead complement is not Gram(b) at trial {trial}",
            )
    return report


def volume_identity_check(seed: int, trials: int = 50) -> Report:
    """det(M) = det(M11) * det(complement) for Gram instances, the
    generalized base-times-height formula; singular instances included
    (both sides collapse to zero)."""
    rng = SplitMix64(seed)
    report = Report()
    for trial in range(trials):
        count = 4
        # every fourth family lives in a 2-dimensional ambient space, which
        # forces singular Grams
        ambient = 2 if trial % 4 == 3 else count
        vecs = [
            [Q(rng.randint(-3, 3)) for _ in range(ambient)] for _ in range(count)
        ]
        gram = _gram(vecs)
        head = rng.randint(1, count - 1)
        complement = schur_complement(BlockedMatrix(gram, head))
        lead = [row[:head] for row in gram[:head]]
        lhs = xm.det(gram)
        rhs = xm.det(lead) * xm.det(complement)
        report.expect(
            lhs == rhs, f"volume identity fails at trial {trial}: {lhs} != {rhs}"
        )
    return report


def iterated_schur_on_Y(n: int, steps: int = None):
    """Eliminate the degree blocks of Y in order d = 0, 1, ...; at each step
    the current leading block must equal sigma_k^2 times the apolar Gram of
    the harmonic projections over size-k subsets, must lie in the Johnson
    scheme (entries a function of |S cap T| alone), and must be PSD by exact
    pivots.  Returns (leading blocks per step, report)."""
    cb.check_n(n, cap=ITERATED_MAX_N)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if steps is None:
        steps = cb.d_max(n)
    if not (0 <= steps <= cb.d_max(n)):
        raise ValueError(f"need 0 <= steps <= d_max = {cb.d_max(n)}, got {steps}")
    report = Report()
    current = [row[:] for row in build_Y(n).rows]
    blocks = []
    for k in range(steps + 1):
        h = cb.binomial(n, k)
        lead = [row[:h] for row in current[:h]]
        blocks.append(lead)

        masks = cb.subsets_of_size(n, k)
        by_overlap: dict = {}
        johnson = True
        for i in range(h):
            for j in range(h):
                ov = (masks[i] & masks[j]).bit_count()
                ref = by_overlap.setdefault(ov, lead[i][j])
                if ref != lead[i][j]:
                    johnson = False
        report.expect(
            johnson, f"step {k} block leaves the Johnson scheme at n={n}"
        )

        scale = sigma_sq(n, k)
        rep_s = (1 << k) - 1
        span_s = hS_span(n, rep_s)
        for ov, entry in sorted(by_overlap.items()):
            rep_t = ((1 << ov) - 1) | (((1 << (k - ov)) - 1) << k)
            expected = scale * apolar_ip(span_s, hS_span(n, rep_t))
            report.expect(
                entry == expected,
                f"step {k} overlap {ov}: block entry {entry} != {expected} at n={n}",
            )

        psd, witness = xm.psd_pivots(lead)
        report.expect(psd, f"step {k} block not PSD at n={n}: {witness}")

        if k < steps:
            current = schur_complement(BlockedMatrix(current, h))
    return blocks, report
