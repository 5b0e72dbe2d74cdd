"""Finitely presented group-ring modules and generator-drop certificates.

Kernel witnesses are inputs, never searched for; membership in the kernel of
the degree-2 boundary is verified modulo a supplied finite quotient (a
necessary condition), and the emitted report states that verification level.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .chain import presentation_chain_complex
from .coset import SubgroupRecord
from .errors import SeparationExhausted, WitnessNotInKernel, ZeroWitness
from .groupring import GroupRingElement
from .linalg import cokernel_invariants, rank_mod_p, rank_over_Q
from .lowindex import low_index_subgroups
from .quotient import core_record
from .schreier import rewrite_subgroup_presentation


@dataclass(frozen=True)
class ModulePresentation:
    """Quotient of (ZG)^free_rank by the submodule the relation tuples generate."""

    ambient: object  # Presentation for G
    free_rank: int
    relations: tuple  # tuples of GroupRingElement, each of length free_rank

    def __post_init__(self):
        for rel in self.relations:
            assert len(rel) == self.free_rank, "relation tuple has wrong arity"


@dataclass(frozen=True)
class KernelWitness:
    """A tuple rho in (ZG)^r with its support words and coefficient gcd."""

    rho: tuple  # GroupRingElement per coordinate

    def __post_init__(self):
        if not any(self.rho):
            raise ZeroWitness("witness must be a nonzero tuple")

    @property
    def supports(self):
        seen = []
        for a in self.rho:
            for w in a.support():
                if w not in seen:
                    seen.append(w)
        return tuple(seen)

    @property
    def gcd(self):
        g = 0
        for a in self.rho:
            g = gcd(g, a.coefficient_gcd())
        return g


def primitivize(w):
    """Divide every coefficient by the common gcd; afterwards the gcd is 1."""
    d = w.gcd
    if d == 1:
        return w
    rho = tuple(
        GroupRingElement(tuple((word, c // d) for word, c in a.terms)) for a in w.rho
    )
    return KernelWitness(rho=rho)


def coinvariant_rank_lower_bound(m, record, field="Q"):
    """Generator-count lower bound for the module restricted to the subgroup.

    Restrict to H (index k), then kill the H-action: the result is the
    abelian group Z^(r*k) modulo the coset-collapsed images of g*relation
    for g over a transversal.  Its minimal generator count over the chosen
    field (a prime, "Q", or "Z" for the exact abelian count) never exceeds
    the H-rank of the module.
    """
    table = record.table
    k = table.index
    r = m.free_rank
    columns = []
    for t in range(k):
        for rel in m.relations:
            vec = [0] * (r * k)
            for i, a in enumerate(rel):
                for w, c in a.terms:
                    coset = table.trace(t, w)
                    vec[i * k + coset] += c
            columns.append(vec)
    if not columns:
        return r * k
    matrix = [list(row) for row in zip(*columns)]  # (r*k) x (#columns)
    if field == "Q":
        return r * k - rank_over_Q(matrix)
    if field == "Z":
        free, torsion = cokernel_invariants(matrix, r * k)
        return free + len(torsion)
    return r * k - rank_mod_p(matrix, int(field))


def separating_subgroup(support, p, max_index):
    """A normal subgroup of index <= max_index whose cosets separate support.

    Candidates are normal cores of low-index subgroups and pairwise
    intersections of those cores, searched by increasing index budget; the
    canonically least separating subgroup at the smallest sufficient budget
    wins.  Raises SeparationExhausted when nothing within budget works.
    """
    from .errors import LimitExceeded

    words = []
    for w in support:
        if w not in words:
            words.append(w)
    for bound in range(1, max_index + 1):
        if bound < len(words):
            continue  # too few cosets to separate
        normals = {}
        for rec in low_index_subgroups(p, bound):
            if rec.is_normal:
                normals.setdefault(rec.table.action_key(), rec)
            else:
                try:
                    core, _ = core_record(rec, max_order=bound)
                except LimitExceeded:
                    continue
                normals.setdefault(core.table.action_key(), core)
        candidates = sorted(
            normals.values(), key=lambda r: (r.index, r.table.action_key())
        )
        for a in range(len(candidates)):
            for b in range(a + 1, len(candidates)):
                inter = _intersect(candidates[a], candidates[b], bound)
                if inter is not None and inter.table.action_key() not in normals:
                    normals[inter.table.action_key()] = inter
        candidates = sorted(
            normals.values(), key=lambda r: (r.index, r.table.action_key())
        )
        for rec in candidates:
            cosets = {rec.table.trace(0, w) for w in words}
            if len(cosets) == len(words):
                return rec
    raise SeparationExhausted(
        f"no normal subgroup of index <= {max_index} separates the "
        f"{len(words)} support elements"
    )


def _intersect(r1, r2, max_index):
    """Orbit of the pair (0, 0) in the product action, as a coset table."""
    from .coset import CosetTable, _standardize, schreier_transversal

    p = r1.table.origin
    ngens = p.num_generators
    t1, t2 = r1.table, r2.table
    inv1, inv2 = t1.inverse_action, t2.inverse_action
    start = (0, 0)
    index = {start: 0}
    order = [start]
    for pair in order:
        for g in range(ngens):
            for nxt in (
                (t1.action[g][pair[0]], t2.action[g][pair[1]]),
                (inv1[g][pair[0]], inv2[g][pair[1]]),
            ):
                if nxt not in index:
                    if len(order) >= max_index:
                        return None
                    index[nxt] = len(order)
                    order.append(nxt)
    rows = []
    for pair in order:
        row = []
        for g in range(ngens):
            row.append(index[(t1.action[g][pair[0]], t2.action[g][pair[1]])])
            row.append(index[(inv1[g][pair[0]], inv2[g][pair[1]])])
        rows.append(row)
    table = CosetTable(index=len(rows), action=_standardize(ngens, rows), origin=p)
    table.verify()
    return schreier_transversal(table)


@dataclass(frozen=True)
class CertificateReport:
    """Everything the generator-drop certificate pipeline establishes."""

    presentation: object
    witness: KernelWitness
    witness_gcd: int
    subgroup_index: int
    subgroup: SubgroupRecord
    schreier_generators: int
    schreier_relators: int
    drop_bound: int  # u, with u < e2 * index
    mu2_bound: int  # 1 + u - (Schreier generator count)
    coinvariant_lower_bound: int
    primitive_coordinates: tuple  # (slot, coset, coefficient) with gcd 1
    verification_quotient_order: int

    def to_json(self):
        p = self.presentation
        return {
            "witness": [
                [[p.word_to_text(w), c] for w, c in a.terms] for a in self.witness.rho
            ],
            "gcd": self.witness_gcd,
            "subgroup_index": self.subgroup_index,
            "drop_bound_u": self.drop_bound,
            "relation_count": self.schreier_relators,
            "generator_count": self.schreier_generators,
            "mu2_bound": self.mu2_bound,
            "coinvariant_lower_bound": self.coinvariant_lower_bound,
            "primitive_coordinates": [list(c) for c in self.primitive_coordinates],
            "verification_quotient_order": self.verification_quotient_order,
            "verification_level": (
                "kernel membership checked modulo a finite quotient of order "
                f"{self.verification_quotient_order} (necessary condition only)"
            ),
        }


def rank_drop_certificate(p, witness, q, max_index=12):
    """Certify a generator drop for the restricted relation module.

    Steps: verify the witness lies in ker d2 after pushing to the quotient q;
    primitivize; find a normal separating subgroup H for the support; the
    restricted module then needs at most u = e2*[G:H] - 1 generators because
    the separated witness is a primitive vector of the transversal lattice.
    The amended partial resolution over H (u in degree 2 over the Schreier
    generator count) gives the mu2 bound 1 + u - generators.
    """
    e2 = p.num_relators
    if len(witness.rho) != e2:
        raise ValueError("witness arity must match the relator count")
    complex_ = presentation_chain_complex(p, q)
    n = q.order
    vec = [0] * (e2 * n)
    for j, a in enumerate(witness.rho):
        for w, c in a.terms:
            vec[j * n + q.project_word(w)] += c
    d2 = complex_.boundaries[1]
    for row in d2:
        if sum(x * y for x, y in zip(row, vec)):
            raise WitnessNotInKernel(
                "boundary image of the witness is nonzero in this quotient"
            )
    original_gcd = witness.gcd
    prim = primitivize(witness)
    sep = separating_subgroup(prim.supports, p, max_index)
    k = sep.index
    u = e2 * k - 1
    coords = []
    for i, a in enumerate(prim.rho):
        for w, c in a.terms:
            coords.append((i, sep.table.trace(0, w), c))
    assert len({(i, t) for i, t, _ in coords}) == len(coords), (
        "separation failed: two support words share a coset"
    )
    g = 0
    for _, _, c in coords:
        g = gcd(g, abs(c))
    assert g == 1, "primitivized witness must have coprime coefficients"
    module = ModulePresentation(ambient=p, free_rank=e2, relations=(tuple(prim.rho),))
    coinv = coinvariant_rank_lower_bound(module, sep, field="Q")
    assert coinv <= u, "coinvariant bound exceeds the certified drop"
    sub = rewrite_subgroup_presentation(p, sep)
    gens = sub.presentation.num_generators
    rels = sub.presentation.num_relators
    assert rels == e2 * k and u < rels
    return CertificateReport(
        presentation=p,
        witness=prim,
        witness_gcd=original_gcd,
        subgroup_index=k,
        subgroup=sep,
        schreier_generators=gens,
        schreier_relators=rels,
        drop_bound=u,
        mu2_bound=1 + u - gens,
        coinvariant_lower_bound=coinv,
        primitive_coordinates=tuple(coords),
        verification_quotient_order=n,
    )
