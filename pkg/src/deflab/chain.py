"""Chain complexes of presentation 2-complexes pushed to finite quotients.

Conventions, fixed once and used consistently:

* push_to_quotient(x, q) is the matrix R of right multiplication by the
  projected element in the regular representation, R[h][k] = coefficient of
  k in h*x.  With ordinary matrix products R is a ring homomorphism.
* Boundary matrices act on column vectors.  The basis of the degree-d module
  (ZQ)^f is (slot, group element) with elements in canonical order, identity
  first; the (slot i, slot j) block of a boundary is the transpose of the
  push of the corresponding group-ring entry.  d1 composed after d2 is the
  zero matrix, verified at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompatibleRestriction, InvalidQuotient
from .groupring import GroupRingElement, fox_derivative
from .linalg import mat_shape, zero_matrix


@dataclass(frozen=True)
class ChainComplex:
    """Free modules of the given ranks over a quotient of order q.

    boundaries[i] is the matrix of the map from degree i+1 to degree i,
    shape (ranks[i]*q) x (ranks[i+1]*q), integer entries.
    """

    ranks: tuple
    boundaries: tuple
    quotient_order: int

    def __post_init__(self):
        q = self.quotient_order
        assert q >= 1
        assert len(self.boundaries) == len(self.ranks) - 1
        for i, b in enumerate(self.boundaries):
            assert mat_shape(b) == (self.ranks[i] * q, self.ranks[i + 1] * q)
        for lower, upper in zip(self.boundaries, self.boundaries[1:]):
            assert _mul_is_zero(lower, upper), "boundary composition is nonzero"

    @property
    def dims(self):
        return [r * self.quotient_order for r in self.ranks]

    def to_json(self):
        return {
            "ranks": list(self.ranks),
            "quotient_order": self.quotient_order,
            "boundaries": [[list(row) for row in b] for b in self.boundaries],
        }


def _mul_is_zero(a, b):
    (n, k), (k2, m) = mat_shape(a), mat_shape(b)
    assert k == k2
    if 0 in (n, k, m):
        return True
    aa = np.array(a, dtype=np.int64)
    bb = np.array(b, dtype=np.int64)
    bound = np.abs(aa).max() * np.abs(bb).max() * k
    assert bound < 2**62, "entries too large for the fast zero check"
    return not np.any(aa @ bb)


def push_to_quotient(x, q):
    """q x q integer matrix of right multiplication by the image of x."""
    n = q.order
    m = zero_matrix(n, n)
    for w, c in x.terms:
        g = q.project_word(w)
        for h in range(n):
            m[h][q.mult[h][g]] += c
    return m


def _transpose_block(block):
    return [list(row) for row in zip(*block)] if block else []


def presentation_chain_complex(p, q):
    """Degree-2 chain complex (ranks 1, e1, e2) pushed to the quotient q."""
    for r in p.relators:
        if q.project_word(r) != 0:
            raise InvalidQuotient("not a quotient: a relator has nonzero image")
    e1 = p.num_generators
    e2 = p.num_relators
    n = q.order

    d1 = zero_matrix(n, e1 * n)
    for i in range(e1):
        xi = GroupRingElement.of_word(_gen_word(i)) - GroupRingElement.one()
        block = _transpose_block(push_to_quotient(xi, q))
        _paste(d1, block, 0, i, n)

    d2 = zero_matrix(e1 * n, e2 * n)
    for j, r in enumerate(p.relators):
        for i in range(e1):
            der = fox_derivative(r, i)
            if not der:
                continue
            block = _transpose_block(push_to_quotient(der, q))
            _paste(d2, block, i, j, n)

    return ChainComplex(ranks=(1, e1, e2), boundaries=(d1, d2), quotient_order=n)


def _gen_word(i):
    from .words import Word

    return Word(((i, 1),))


def _paste(target, block, row_block, col_block, n):
    for a in range(n):
        row = target[row_block * n + a]
        base = col_block * n
        brow = block[a]
        for b in range(n):
            row[base + b] = brow[b]


def restrict_to_subgroup(c, record, quotient):
    """View a complex over G/N as a complex over H/N for N <= H <= G.

    quotient is the FiniteGroup the complex was built over; record describes
    H inside the same presentation.  Ranks multiply by [G:H], the underlying
    matrices are re-blocked through a transversal basis (a permutation of
    the old basis), so total sizes and homology are unchanged.
    """
    q = quotient.order
    assert q == c.quotient_order
    k = record.index
    if k == 1:
        return c
    if q % k:
        raise IncompatibleRestriction("index does not divide the quotient order")
    # image of H in the quotient, via its Schreier generator words
    table = record.table
    seeds = []
    from .coset import _schreier_generator_pairs
    from .words import Word

    pairs, _ = _schreier_generator_pairs(table)
    transversal = record.transversal
    for cs, g in pairs:
        w = transversal[cs] * Word(((g, 1),)) * transversal[table.action[g][cs]].inverse()
        seeds.append(quotient.project_word(w))
    sub_elements = quotient.subgroup_closure(seeds)
    qprime = q // k
    if len(sub_elements) != qprime:
        raise IncompatibleRestriction(
            "quotient kernel is not contained in the subgroup"
        )
    sub_index = {e: i for i, e in enumerate(sub_elements)}
    # right-coset transversal: E with Q = union of (H/N) t, identity first
    reps = []
    covered = set()
    for e in range(q):
        if e not in covered:
            reps.append(e)
            for h in sub_elements:
                covered.add(quotient.mult[h][e])
    assert len(reps) == k and reps[0] == 0
    # old basis position (slot, g) -> new basis position ((slot, t), h)
    # where g = h * t, h in H/N, t in E
    where = [None] * q
    for t_idx, t in enumerate(reps):
        for h in sub_elements:
            g = quotient.mult[h][t]
            assert where[g] is None
            where[g] = (t_idx, sub_index[h])
    perm = [0] * q  # old element position -> new position within a rank block
    for g in range(q):
        t_idx, h_idx = where[g]
        perm[g] = t_idx * qprime + h_idx

    def reindex(matrix, rank_rows, rank_cols):
        rows, cols = rank_rows * q, rank_cols * q
        out = zero_matrix(rows, cols)
        rmap = [
            (i // q) * q + perm[i % q] for i in range(rows)
        ]
        cmap = [
            (j // q) * q + perm[j % q] for j in range(cols)
        ]
        for i in range(rows):
            src = matrix[i]
            dst_i = rmap[i]
            row_out = out[dst_i]
            for j in range(cols):
                row_out[cmap[j]] = src[j]
        return out

    new_ranks = tuple(r * k for r in c.ranks)
    new_boundaries = tuple(
        reindex(b, c.ranks[i], c.ranks[i + 1]) for i, b in enumerate(c.boundaries)
    )
    return ChainComplex(
        ranks=new_ranks, boundaries=new_boundaries, quotient_order=qprime
    )


def collapse_to_point(c):
    """Coinvariants: push the complex along Q -> 1.

    Each q x q block of a boundary is right multiplication by some ring
    element, whose augmentation is the column sum over the identity column
    of the block; the collapsed matrix has one entry per block.
    """
    q = c.quotient_order
    out_boundaries = []
    for idx, b in enumerate(c.boundaries):
        rows = c.ranks[idx]
        cols = c.ranks[idx + 1]
        m = zero_matrix(rows, cols)
        for i in range(rows):
            for j in range(cols):
                m[i][j] = sum(b[i * q + a][j * q] for a in range(q))
        out_boundaries.append(m)
    return ChainComplex(
        ranks=c.ranks, boundaries=tuple(out_boundaries), quotient_order=1
    )
