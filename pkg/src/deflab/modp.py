"""Mod-p cohomology of finite quotients.

Two routes: a truncated bar-cochain complex for a finite group given by its
multiplication table (the oracle), and the transpose of the presentation
chain complex pushed to a finite quotient by a normal subgroup.  Positions 0
and 1 of the dual complex give dim H^0 and dim H^1 of the subgroup; the
position-2 homology of the truncated complex is reported as-is, since it
contains an extra summand beyond dim H^2 that finite-level data cannot
split off in general.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import presentation_chain_complex
from .coset import subgroup_record
from .errors import (
    LimitExceeded,
    NonNormalSubgroup,
    NonPrimeModulus,
    OrderCapExceeded,
)
from .linalg import is_prime, rank_mod_p
from .quotient import FiniteGroup, core_quotient


@dataclass(frozen=True)
class CohomologyDims:
    """dim H^0, H^1, H^2 with trivial F_p coefficients."""

    p: int
    dims: tuple
    group_order: int

    def to_json(self):
        return {"p": self.p, "dims": list(self.dims), "group_order": self.group_order}


def bar_cohomology_dims(group, p, max_order=64):
    """Cohomology dims of a finite group from the truncated bar complex.

    Cochains are F_p-valued functions on tuples of group elements in degrees
    <= 3, enough to read off H^0, H^1 and H^2.
    """
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    n = group.order
    if n > max_order:
        raise OrderCapExceeded(f"group order {n} exceeds the cap {max_order}")
    mult = group.mult
    # d1: C^1 -> C^2, (d1 f)(g, h) = f(h) - f(gh) + f(g)
    d1 = []
    for g in range(n):
        for h in range(n):
            row = [0] * n
            row[h] += 1
            row[mult[g][h]] -= 1
            row[g] += 1
            d1.append(row)
    # d2: C^2 -> C^3, (d2 f)(g,h,l) = f(h,l) - f(gh,l) + f(g,hl) - f(g,h)
    d2 = []
    for g in range(n):
        for h in range(n):
            for l in range(n):
                row = [0] * (n * n)
                row[h * n + l] += 1
                row[mult[g][h] * n + l] -= 1
                row[g * n + mult[h][l]] += 1
                row[g * n + h] -= 1
                d2.append(row)
    r1 = rank_mod_p(d1, p)
    r2 = rank_mod_p(d2, p)
    h0 = 1  # d0 vanishes for trivial coefficients
    h1 = n - r1
    h2 = n * n - r2 - r1
    return CohomologyDims(p=p, dims=(h0, h1, h2), group_order=n)


@dataclass(frozen=True)
class DualComplexReport:
    """Homology dims of the transposed mod-p presentation complex.

    dims = (h0, h1, h2_truncated); positions 0 and 1 equal dim H^0(N, F_p)
    and dim H^1(N, F_p).  h2_truncated exceeds dim H^2(N, F_p) by the
    dimension of the reduced degree-2 kernel; jbar_dim carries that excess
    when an independent bar-complex reference for the subgroup exists (the
    whole group is finite and within the cap), else None.
    """

    p: int
    index: int
    dims: tuple
    jbar_dim: int | None
    euler_identity_residual: int

    def to_json(self):
        return {
            "p": self.p,
            "index": self.index,
            "dims": list(self.dims),
            "h2_label": "h2 of the truncated dual complex",
            "jbar_dim": self.jbar_dim,
            "euler_identity_residual": self.euler_identity_residual,
        }


def dual_complex_dims(p, record, prime, cap=64, bar_crosscheck=True):
    """Dualized presentation complex over F_p[G/N] for a normal subgroup N.

    Builds the degree-2 chain complex pushed to the quotient by N, transposes
    it, and reads homology dimensions at positions 0, 1, 2 from mod-p ranks.
    The alternating sum of the cochain space dimensions minus homology dims
    is returned as a residual that is identically zero (rank-nullity).
    """
    if not is_prime(prime):
        raise NonPrimeModulus(f"{prime} is not prime")
    if not record.is_normal:
        raise NonNormalSubgroup("dual complex needs a normal subgroup")
    k = record.index
    if k > cap:
        raise OrderCapExceeded(f"quotient order {k} exceeds the cap {cap}")
    _, quotient = core_quotient(record, max_order=cap + 1)
    assert quotient.order == k, "normal subgroup must equal its core"
    complex_ = presentation_chain_complex(p, quotient)
    e1, e2 = p.num_generators, p.num_relators
    d1, d2 = complex_.boundaries
    r1 = rank_mod_p(d1, prime)
    r2 = rank_mod_p(d2, prime)
    h0 = k - r1
    h1 = (e1 * k - r2) - r1
    h2t = e2 * k - r2
    residual = (h0 - h1 + h2t) - k * (1 - e1 + e2)
    jbar = None
    if bar_crosscheck:
        finite = _finite_subgroup_realization(p, record, cap)
        if finite is not None:
            ref = bar_cohomology_dims(finite, prime, max_order=cap)
            assert ref.dims[0] == h0 and ref.dims[1] == h1, (
                "dual complex disagrees with the bar oracle in low degrees"
            )
            jbar = h2t - ref.dims[2]
            assert jbar >= 0
    return DualComplexReport(
        p=prime,
        index=k,
        dims=(h0, h1, h2t),
        jbar_dim=jbar,
        euler_identity_residual=residual,
    )


def _finite_subgroup_realization(p, record, cap):
    """Multiplication table of the subgroup itself, when the whole group is
    finite and small enough to realize regularly."""
    try:
        regular = subgroup_record(p, (), limit=4 * cap + 8)
    except LimitExceeded:
        return None
    order = regular.index
    if order > cap * record.index:
        return None
    members = [
        e for e in range(order) if record.table.trace(0, regular.transversal[e]) == 0
    ]
    if len(members) * record.index != order:
        return None
    pos = {e: i for i, e in enumerate(members)}
    gmult = [
        [regular.table.trace(a, regular.transversal[b]) for b in range(order)]
        for a in range(order)
    ]
    mult = tuple(
        tuple(pos[gmult[a][b]] for b in members) for a in members
    )
    return FiniteGroup(mult=mult, gen_images=())
