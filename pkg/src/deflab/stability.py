"""The stabilization experiment: deficiency intervals across finite covers.

For each subgroup H of index k <= n the report brackets delta(H) and
classifies the identity delta(H) - 1 = k * (delta(G) - 1):

* certified-holds: both intervals are points and the identity is exact;
* consistent: the intervals permit the identity;
* violated-upper: upper(H) - 1 < k * (lower(G) - 1), which contradicts the
  Schreier inequality and therefore signals an internal error if it ever
  fires on sound bounds;
* inconclusive: lower(H) - 1 > k * (upper(G) - 1), the excess direction the
  bounds cannot settle.

Without a certificate all rows are computed from the simplified base
presentation so the Schreier inequality holds between reported lower bounds
by construction (asserted).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import __version__ as _tool_version
from .intervals import (
    CERT_NONE,
    DeficiencyInterval,
    deficiency_interval,
    resolve_certificate,
)
from .linalg import cokernel_invariants, partial_euler_mu
from .lowindex import low_index_subgroups
from .schreier import rewrite_subgroup_presentation
from .tietze import tietze_simplify

STATUS_CERTIFIED = "certified-holds"
STATUS_CONSISTENT = "consistent"
STATUS_VIOLATED = "violated-upper"
STATUS_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StabilityRow:
    index: int
    ordinal: int
    schreier_generators: int
    schreier_relators: int
    b1: int
    torsion: tuple
    interval: DeficiencyInterval
    identity_status: str

    def to_json(self):
        return {
            "index": self.index,
            "ordinal": self.ordinal,
            "schreier_generators": self.schreier_generators,
            "schreier_relators": self.schreier_relators,
            "b1": self.b1,
            "torsion": list(self.torsion),
            "interval": self.interval.to_json(),
            "identity_status": self.identity_status,
        }


@dataclass(frozen=True)
class StabilityReport:
    group: str
    presentation: str
    base_interval: DeficiencyInterval
    rows: tuple
    verdict: str
    enumeration_complete: bool = True

    def to_json(self):
        return {
            "group": self.group,
            "presentation": self.presentation,
            "base_interval": self.base_interval.to_json(),
            "rows": [row.to_json() for row in self.rows],
            "verdict": self.verdict,
            "enumeration_complete": self.enumeration_complete,
            "tool_version": _tool_version,
        }


def _classify(k, base, sub):
    target_low = k * (base.lower - 1)
    target_high = k * (base.upper - 1)
    if (
        base.is_point
        and sub.is_point
        and sub.lower - 1 == k * (base.lower - 1)
    ):
        return STATUS_CERTIFIED
    if sub.upper - 1 < target_low:
        return STATUS_VIOLATED
    if sub.lower - 1 > target_high:
        return STATUS_INCONCLUSIVE
    return STATUS_CONSISTENT


def _abelian_data(p):
    matrix = p.abelianized_relator_matrix()
    if not matrix:
        return p.num_generators, []
    columns = [list(row) for row in zip(*matrix)]
    free, torsion = cokernel_invariants(columns, p.num_generators)
    return free, torsion


def stability_report(
    p, max_index, aspherical=False, effort=50, group_name="group", max_nodes=2_000_000
):
    """Enumerate all subgroups of index <= max_index and test stabilization."""
    certificate = resolve_certificate(p, aspherical)
    if certificate == CERT_NONE:
        base_pres = tietze_simplify(p, effort)
        # simplification can expose a certifiable one-relator form
        certificate = resolve_certificate(base_pres, False)
        base_interval = deficiency_interval(base_pres, aspherical=False, effort=0)
    else:
        base_pres = p
        base_interval = deficiency_interval(p, aspherical=aspherical, effort=effort)
    records, complete = low_index_subgroups(
        base_pres, max_index, max_nodes=max_nodes, on_budget="partial"
    )
    rows = []
    ordinals = {}
    for rec in records:
        k = rec.index
        ordinals[k] = ordinals.get(k, 0) + 1
        sub = rewrite_subgroup_presentation(base_pres, rec)
        sp = sub.presentation
        b1, torsion = _abelian_data(sp)
        if certificate != CERT_NONE:
            value = sp.deficiency_datum()  # 1 - k*chi, achieved by this presentation
            interval = DeficiencyInterval(
                lower=value, upper=value, certificate=certificate
            )
        else:
            lower = tietze_simplify(sp, effort).deficiency_datum()
            upper = b1
            interval = DeficiencyInterval(
                lower=lower, upper=upper, certificate=CERT_NONE
            )
        assert interval.lower - 1 >= k * (base_interval.lower - 1), (
            "Schreier inequality violated by reported lower bounds"
        )
        status = _classify(k, base_interval, interval)
        assert status != STATUS_VIOLATED, (
            "violated-upper row: contradicts the Schreier inequality, "
            "which means a bound above is unsound"
        )
        rows.append(
            StabilityRow(
                index=k,
                ordinal=ordinals[k],
                schreier_generators=sp.num_generators,
                schreier_relators=sp.num_relators,
                b1=b1,
                torsion=tuple(torsion),
                interval=interval,
                identity_status=status,
            )
        )
    statuses = {row.identity_status for row in rows}
    if STATUS_VIOLATED in statuses:
        verdict = STATUS_VIOLATED
    elif STATUS_INCONCLUSIVE in statuses:
        verdict = STATUS_INCONCLUSIVE
    elif statuses == {STATUS_CERTIFIED}:
        verdict = STATUS_CERTIFIED
    else:
        verdict = STATUS_CONSISTENT
    from .presentation import serialize_presentation

    return StabilityReport(
        group=group_name,
        presentation=serialize_presentation(base_pres),
        base_interval=base_interval,
        rows=tuple(rows),
        verdict=verdict,
        enumeration_complete=complete,
    )


@dataclass(frozen=True)
class NuReport:
    base: object
    cover: object
    multiplicative: bool

    def to_json(self):
        return {
            "base": {
                "n": self.base.n,
                "ranks": self.base.ranks,
                "chi": self.base.chi,
                "nu_candidate": (-1) ** self.base.n * self.base.chi,
            },
            "cover": {
                "n": self.cover.n,
                "ranks": self.cover.ranks,
                "chi": self.cover.chi,
                "nu_candidate": (-1) ** self.cover.n * self.cover.chi,
            },
            "multiplicative": self.multiplicative,
        }


def nu_bookkeeping(cell_counts, n, cover_index):
    """(-1)^n chi for base cell counts and for the index-k cover counts.

    The cover of an n-complex with f_i cells has k*f_i cells, so its signed
    Euler characteristic is exactly k times the base value; the verdict
    records that the multiplicativity holds at the cell-count level.
    """
    assert n >= 1
    base = partial_euler_mu(list(cell_counts), n)
    cover = partial_euler_mu([cover_index * f for f in cell_counts], n)
    nu_base = (-1) ** n * base.chi
    nu_cover = (-1) ** n * cover.chi
    return NuReport(
        base=base, cover=cover, multiplicative=nu_cover == cover_index * nu_base
    )
