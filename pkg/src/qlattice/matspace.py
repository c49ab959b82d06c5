"""Matrices over F_q, Gauss elimination, canonical subspaces, enumeration.

A subspace of F_q^n is represented by the unique row reduced echelon form of
any spanning matrix, so equality of subspaces is structural equality of
:class:`Rref` values.  Column indices are 1-based throughout; the zero
subspace is the 0 x n empty rref.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations, product

from .algebra import GF, gf
from .errors import TooLargeError

#: Default ceiling on the number of elements any enumeration may produce.
DEFAULT_MAX_SIZE = 500_000


@dataclass(frozen=True)
class Mat:
    """A plain k x n matrix over F_q; rows are tuples of ints in [0, q)."""

    field: GF
    n: int
    rows: tuple

    @property
    def k(self):
        return len(self.rows)

    def __str__(self):
        if not self.rows:
            return f"(empty 0x{self.n})"
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


@dataclass(frozen=True)
class Rref:
    """A matrix in row reduced echelon form: the canonical name of its row
    space.  ``pivots`` are the 1-based columns carrying the leading ones.
    """

    field: GF
    n: int
    rows: tuple
    pivots: tuple

    @property
    def dim(self):
        return len(self.rows)

    @property
    def k(self):
        return len(self.rows)

    def __str__(self):
        if not self.rows:
            return f"(zero subspace of F_{self.field.q}^{self.n})"
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


#: A subspace IS its canonical rref.
Subspace = Rref


def _eliminate(field, rows, n):
    """Full Gauss elimination; returns (reduced nonzero rows, 1-based pivots)."""
    mul, sub, inv = field.mul, field.sub, field.inv
    work = [list(r) for r in rows]
    k = len(work)
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, k):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        a = prow[col]
        if a != 1:
            ai = inv(a)
            for t in range(col, n):
                prow[t] = mul(ai, prow[t])
        for i in range(k):
            if i != rank and work[i][col]:
                fctr = work[i][col]
                wrow = work[i]
                for t in range(col, n):
                    wrow[t] = sub(wrow[t], mul(fctr, prow[t]))
        pivots.append(col + 1)
        rank += 1
        if rank == k:
            break
    return tuple(tuple(r) for r in work[:rank]), tuple(pivots)


def rref_left(m):
    """Left-to-right Gauss elimination: the unique rref with the same row
    space.  Zero rows are discarded; idempotent on rrefs."""
    rows, pivots = _eliminate(m.field, m.rows, m.n)
    return Rref(m.field, m.n, rows, pivots)


def span(field, vectors, n):
    """The subspace spanned by the given row vectors of F_q^n."""
    return rref_left(Mat(field, n, tuple(tuple(v) for v in vectors)))


def zero_subspace(field, n):
    return Rref(field, n, (), ())


def full_space(field, n):
    rows = tuple(tuple(1 if t == i else 0 for t in range(n)) for i in range(n))
    return Rref(field, n, rows, tuple(range(1, n + 1)))


def rank_of(field, rows, n):
    """Rank by forward elimination; does not modify its input."""
    mul, sub, inv = field.mul, field.sub, field.inv
    work = [list(r) for r in rows if any(r)]
    k = len(work)
    rank = 0
    for col in range(n):
        if rank == k:
            break
        piv = None
        for i in range(rank, k):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        ai = inv(prow[col])
        for i in range(rank + 1, k):
            if work[i][col]:
                fctr = mul(work[i][col], ai)
                wrow = work[i]
                for t in range(col, n):
                    wrow[t] = sub(wrow[t], mul(fctr, prow[t]))
        rank += 1
    return rank


def left_pivots(x):
    """Columns where some vector of the subspace has its first nonzero
    coordinate; equals the pivot set of the rref."""
    return frozenset(x.pivots)


def right_pivots(x):
    """Columns where some vector of the subspace has its last nonzero
    coordinate; computed by mirror-image (right-to-left) elimination."""
    rev = [row[::-1] for row in x.rows]
    _, piv = _eliminate(x.field, rev, x.n)
    return frozenset(x.n + 1 - p for p in piv)


def in_rowspace(x, vec):
    """Whether the vector lies in the row space of the rref x."""
    sub, mul = x.field.sub, x.field.mul
    v = list(vec)
    for row, p in zip(x.rows, x.pivots):
        c = v[p - 1]
        if c:
            for t in range(p - 1, x.n):
                v[t] = sub(v[t], mul(c, row[t]))
    return not any(v)


def subspace_leq(a, b):
    """Containment a <= b in the subspace lattice."""
    if a.field != b.field or a.n != b.n:
        raise ValueError("subspaces live in different ambient spaces")
    return all(in_rowspace(b, row) for row in a.rows)


def subspace_count(q, n):
    """Number of subspaces of F_q^n, by the two-term recurrence
    G(m+1) = 2 G(m) + (q^m - 1) G(m-1)."""
    if n == 0:
        return 1
    prev, cur = 1, 2
    for m in range(1, n):
        prev, cur = cur, 2 * cur + (q**m - 1) * prev
    return cur


def enumerate_subspaces(field, n, max_size=None):
    """Yield every subspace of F_q^n exactly once.

    Order is fixed: dimension ascending, then pivot set lexicographic, then
    the free entries running through an odometer (row-major positions, last
    position fastest).
    """
    limit = DEFAULT_MAX_SIZE if max_size is None else max_size
    total = subspace_count(field.q, n)
    if total > limit:
        raise TooLargeError(
            f"F_{field.q}^{n} has {total} subspaces, above the ceiling {limit}")
    els = tuple(field.elements())
    for k in range(n + 1):
        for pivots in combinations(range(1, n + 1), k):
            pivset = set(pivots)
            free = [(i, j) for i in range(k)
                    for j in range(pivots[i], n)
                    if j + 1 not in pivset]
            base = [[1 if j + 1 == pivots[i] else 0 for j in range(n)]
                    for i in range(k)]
            for values in product(els, repeat=len(free)):
                rows = [list(r) for r in base]
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield Rref(field, n, tuple(tuple(r) for r in rows), pivots)


def is_valid_rref(x):
    """Structural check of the rref conditions; used by tests."""
    if list(x.pivots) != sorted(set(x.pivots)):
        return False
    if len(x.rows) != len(x.pivots):
        return False
    for i, (row, p) in enumerate(zip(x.rows, x.pivots)):
        if len(row) != x.n or any(not 0 <= e < x.field.q for e in row):
            return False
        if any(row[t] for t in range(p - 1)) or row[p - 1] != 1:
            return False
        for ii in range(len(x.rows)):
            if x.rows[ii][p - 1] != (1 if ii == i else 0):
                return False
    return True


def parse_matrix(text):
    """Parse the matrix text format: a "q n k" header line, then k rows of
    n space-separated integers in [0, q)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad matrix header {lines[0]!r}; expected 'q n k'")
    q, n, k = (int(tok) for tok in head)
    field = gf(q)
    if len(lines) - 1 != k:
        raise ValueError(f"expected {k} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = tuple(int(tok) for tok in ln.split())
        if len(row) != n:
            raise ValueError(f"row {ln!r} does not have {n} entries")
        if any(not 0 <= e < q for e in row):
            raise ValueError(f"row {ln!r} has entries outside [0, {q})")
        rows.append(row)
    return Mat(field, n, tuple(rows))


def format_matrix(m):
    """Inverse of :func:`parse_matrix`."""
    lines = [f"{m.field.q} {m.n} {len(m.rows)}"]
    lines.extend(" ".join(str(e) for e in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def lexically_first_basis(field, rows, n):
    """1-based indices of the greedy top-to-bottom independent rows: keep a
    row iff it is independent of the rows kept so far."""
    sub, mul, inv = field.sub, field.mul, field.inv
    kept = []
    reduced = []  # (0-based pivot col, normalized row)
    for idx, row in enumerate(rows, start=1):
        r = list(row)
        for pc, pr in reduced:
            c = r[pc]
            if c:
                for t in range(pc, n):
                    r[t] = sub(r[t], mul(c, pr[t]))
        pc = next((t for t in range(n) if r[t]), None)
        if pc is None:
            continue
        ai = inv(r[pc])
        if ai != 1:
            for t in range(pc, n):
                r[t] = mul(ai, r[t])
        reduced.append((pc, r))
        kept.append(idx)
    return kept


def express_in_rows(field, basis_rows, target, n):
    """Coefficients c with sum(c_l * basis_rows[l]) = target, or None.

    The basis rows must be linearly independent; the coefficients are then
    unique.
    """
    s = len(basis_rows)
    if s == 0:
        return () if not any(target) else None
    aug = [tuple(basis_rows[l]) + tuple(1 if t == l else 0 for t in range(s))
           for l in range(s)]
    rrows, rpiv = _eliminate(field, aug, n + s)
    sub, mul, neg = field.sub, field.mul, field.neg
    work = list(target) + [0] * s
    for prow, p in zip(rrows, rpiv):
        c = work[p - 1]
        if c:
            for t in range(p - 1, n + s):
                work[t] = sub(work[t], mul(c, prow[t]))
    if any(work[:n]):
        return None
    return tuple(neg(v) for v in work[n:])


def pivot_count_upto(x, j):
    """Number of pivot columns of x that are <= j."""
    return bisect_right(x.pivots, j)
