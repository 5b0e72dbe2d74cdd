"""Todd-Coxeter coset enumeration and Schreier transversals.

Tables use 0-based cosets internally (coset 0 is the subgroup); the JSON
serialization is 1-based.  Canonical numbering everywhere: cosets are
renumbered by first appearance when scanning rows in order over the positive
generator columns, which makes every downstream report byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import LimitExceeded
from .presentation import Presentation
from .words import Word

_UNDEF = -1


def _letters_of(word):
    """Word as a sequence of letter codes 2*g (positive) / 2*g+1 (inverse)."""
    return [2 * g if s == 1 else 2 * g + 1 for g, s in word]


def _inv_letter(l):
    return l ^ 1


@dataclass(frozen=True)
class CosetTable:
    """Permutation action of the generators on the cosets of a subgroup.

    action[g][c] is the coset reached from c by generator g; every relator
    of the origin presentation acts as the identity and the action is
    transitive with coset 0 equal to the subgroup.
    """

    index: int
    action: tuple  # per generator, a tuple of length index
    origin: Presentation

    def __post_init__(self):
        n = self.index
        assert n >= 1
        assert len(self.action) == self.origin.num_generators
        for perm in self.action:
            assert len(perm) == n and sorted(perm) == list(range(n)), (
                "generator action is not a bijection"
            )

    @cached_property
    def inverse_action(self):
        inv = []
        for perm in self.action:
            q = [0] * self.index
            for i, j in enumerate(perm):
                q[j] = i
            inv.append(tuple(q))
        return tuple(inv)

    def trace(self, coset, word):
        inv = self.inverse_action
        c = coset
        for g, s in word:
            c = self.action[g][c] if s == 1 else inv[g][c]
        return c

    def verify(self):
        """Check relator actions are the identity and the action is transitive."""
        for r in self.origin.relators:
            for c in range(self.index):
                assert self.trace(c, r) == c, "relator does not act trivially"
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for c in frontier:
                for perm in self.action:
                    d = perm[c]
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        assert len(seen) == self.index, "action is not transitive"

    def action_key(self):
        return tuple(tuple(perm) for perm in self.action)

    def to_json(self):
        return {
            "index": self.index,
            "action": [[c + 1 for c in perm] for perm in self.action],
        }


@dataclass(frozen=True)
class SubgroupRecord:
    """Coset table plus Schreier transversal and normality flag."""

    table: CosetTable
    transversal: tuple  # Words; entry 0 is the empty word
    is_normal: bool

    @property
    def index(self):
        return self.table.index

    def to_json(self):
        p = self.table.origin
        data = self.table.to_json()
        data["transversal"] = [p.word_to_text(t) for t in self.transversal]
        data["is_normal"] = self.is_normal
        return data


def _standardize(ngens, rows):
    """Renumber cosets by first appearance in row-major positive-column scan."""
    n = len(rows)
    rename = {0: 0}
    order = [0]
    for c in order:
        for g in range(ngens):
            d = rows[c][2 * g]
            if d not in rename:
                rename[d] = len(rename)
                order.append(d)
    assert len(rename) == n, "table not transitive"
    action = []
    for g in range(ngens):
        perm = [0] * n
        for c in range(n):
            perm[rename[c]] = rename[rows[c][2 * g]]
        action.append(tuple(perm))
    return tuple(action)


class _Enumerator:
    """HLT-style enumeration with a union-find over provisional cosets."""

    def __init__(self, ngens, limit):
        self.ngens = ngens
        self.limit = limit
        self.parent = []
        self.rows = []
        self.created = 0
        self.add_coset()

    def add_coset(self):
        if self.created >= self.limit:
            raise LimitExceeded(
                f"coset enumeration exceeded the budget of {self.limit} cosets"
            )
        self.created += 1
        self.parent.append(len(self.parent))
        self.rows.append([_UNDEF] * (2 * self.ngens))
        return len(self.parent) - 1

    def find(self, c):
        while self.parent[c] != c:
            self.parent[c] = self.parent[self.parent[c]]
            c = self.parent[c]
        return c

    def step(self, c, l):
        c = self.find(c)
        d = self.rows[c][l]
        if d == _UNDEF:
            d = self.add_coset()
            self.rows[c][l] = d
            self.rows[d][_inv_letter(l)] = c
        return self.find(d)

    def follow(self, c, letters):
        for l in letters:
            c = self.step(c, l)
        return c

    def unify(self, c1, c2):
        stack = [(c1, c2)]
        while stack:
            a, b = stack.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.parent[b] = a
            for l in range(2 * self.ngens):
                nb = self.rows[b][l]
                if nb == _UNDEF:
                    continue
                na = self.rows[a][l]
                if na == _UNDEF:
                    self.rows[a][l] = nb
                    self.rows[self.find(nb)][_inv_letter(l)] = a
                else:
                    stack.append((na, nb))

    def live_rows(self):
        live = [c for c in range(len(self.parent)) if self.find(c) == c]
        rename = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = []
            for l in range(2 * self.ngens):
                d = self.rows[c][l]
                assert d != _UNDEF, "table incomplete after enumeration"
                row.append(rename[self.find(d)])
            rows.append(row)
        return rows


def todd_coxeter(p, subgens=(), limit=100_000):
    """Enumerate cosets of the subgroup generated by subgens.

    Raises LimitExceeded when more than `limit` cosets get defined before the
    table closes (possibly infinite index, or budget too small).
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    ngens = p.num_generators
    enum = _Enumerator(ngens, limit)
    rel_letters = [_letters_of(r) for r in p.relators]
    for w in subgens:
        enum.unify(enum.follow(0, _letters_of(w)), 0)
    scan = 0
    while scan < len(enum.parent):
        c = enum.find(scan)
        if c == scan:
            for letters in rel_letters:
                enum.unify(enum.follow(c, letters), c)
            # fill in free directions so the table closes even without relators
            for l in range(2 * ngens):
                enum.step(c, l)
        scan += 1
    rows = enum.live_rows()
    table = CosetTable(
        index=len(rows), action=_standardize(ngens, rows), origin=p
    )
    table.verify()
    return table


def schreier_transversal(t):
    """Prefix-closed BFS transversal over positive generator letters.

    With canonical table numbering the BFS discovers cosets in numeric order,
    so transversal[i] maps coset 0 to coset i and prefixes are transversal
    entries themselves.
    """
    n = t.index
    transversal = [None] * n
    transversal[0] = Word()
    for c in range(n):
        assert transversal[c] is not None, "table numbering is not canonical"
        for g in range(t.origin.num_generators):
            d = t.action[g][c]
            if transversal[d] is None:
                transversal[d] = transversal[c] * Word(((g, 1),))
    return SubgroupRecord(
        table=t, transversal=tuple(transversal), is_normal=_is_normal(t)
    )


def _schreier_generator_pairs(t):
    """(coset, generator) pairs that are not spanning-tree edges."""
    n = t.index
    seen = [False] * n
    seen[0] = True
    tree = set()
    for c in range(n):
        for g in range(t.origin.num_generators):
            d = t.action[g][c]
            if not seen[d]:
                seen[d] = True
                tree.add((c, g))
    return [
        (c, g)
        for c in range(n)
        for g in range(t.origin.num_generators)
        if (c, g) not in tree
    ], tree


def _is_normal(t):
    """Conjugation test: g^-1 s g stays in the subgroup for every Schreier
    generator s and group generator g (equal finite index forces equality)."""
    record_pairs, _ = _schreier_generator_pairs(t)
    n = t.index
    transversal = [None] * n
    transversal[0] = Word()
    for c in range(n):
        for g in range(t.origin.num_generators):
            d = t.action[g][c]
            if transversal[d] is None:
                transversal[d] = transversal[c] * Word(((g, 1),))
    for c, g in record_pairs:
        d = t.action[g][c]
        s = transversal[c] * Word(((g, 1),)) * transversal[d].inverse()
        for x in range(t.origin.num_generators):
            conj = Word(((x, -1),)) * s * Word(((x, 1),))
            if t.trace(0, conj) != 0:
                return False
    return True


def subgroup_record(p, subgens=(), limit=100_000):
    """Convenience: enumerate and package a full SubgroupRecord."""
    return schreier_transversal(todd_coxeter(p, subgens, limit))


def cyclic_cover_record(p, k, weights=None):
    """Record of the index-k kernel of the map sending generator i to
    weights[i] in Z/k; weights default to (1, 0, ..., 0).

    Every relator must map to 0 and the weights must generate Z/k, otherwise
    ValueError.  Used to sample covers of every index without a search.
    """
    if k < 1:
        raise ValueError("index must be >= 1")
    ngens = p.num_generators
    if weights is None:
        weights = [1] + [0] * (ngens - 1)
    g = k
    for wgt in weights:
        g = gcd(g, wgt)
    if g != 1:
        raise ValueError("weights do not generate Z/k")
    for r in p.relators:
        if sum(r.exponent_sum(i) * weights[i] for i in range(ngens)) % k:
            raise ValueError("relator has nonzero image in Z/k")
    rows = []
    for c in range(k):
        row = []
        for g_ in range(ngens):
            row.append((c + weights[g_]) % k)
            row.append((c - weights[g_]) % k)
        rows.append(row)
    table = CosetTable(index=k, action=_standardize(ngens, rows), origin=p)
    table.verify()
    return schreier_transversal(table)
