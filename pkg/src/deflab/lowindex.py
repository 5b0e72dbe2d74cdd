"""Backtracking enumeration of all subgroups of index <= n.

The search fills partial coset tables in row-major scan order, introducing
new coset numbers only in increasing order, so every complete table is in
standard form and each subgroup of index <= n is emitted exactly once (all
subgroups, not conjugacy classes).  Relator traces prune the search and
force deductions.
"""

from __future__ import annotations

from .coset import CosetTable, _standardize, schreier_transversal
from .errors import LimitExceeded

_UNDEF = -1


def _letters_of(word):
    return [2 * g if s == 1 else 2 * g + 1 for g, s in word]


class _Search:
    def __init__(self, p, max_index, max_nodes):
        self.p = p
        self.ngens = p.num_generators
        self.ncols = 2 * self.ngens
        self.max_index = max_index
        self.max_nodes = max_nodes
        self.nodes = 0
        self.rel_letters = [_letters_of(r) for r in p.relators]
        self.found = []

    def run(self):
        table = [[_UNDEF] * self.ncols]
        self.extend(table)
        return self.found

    def extend(self, table):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise LimitExceeded(
                f"low-index search exceeded {self.max_nodes} nodes"
            )
        pos = self.first_undefined(table)
        if pos is None:
            self.emit(table)
            return
        c, l = pos
        m = len(table)
        linv = l ^ 1
        candidates = [d for d in range(m) if table[d][linv] == _UNDEF]
        if m < self.max_index:
            candidates.append(m)
        for d in candidates:
            work = [row[:] for row in table]
            if d == m:
                work.append([_UNDEF] * self.ncols)
            work[c][l] = d
            work[d][linv] = c
            if self.deduce(work):
                self.extend(work)

    def first_undefined(self, table):
        for c, row in enumerate(table):
            for l in range(self.ncols):
                if row[l] == _UNDEF:
                    return c, l
        return None

    def deduce(self, table):
        """Propagate relator closures; False on contradiction."""
        changed = True
        while changed:
            changed = False
            for letters in self.rel_letters:
                k = len(letters)
                for c in range(len(table)):
                    # walk forward until undefined
                    fwd = c
                    i = 0
                    while i < k:
                        nxt = table[fwd][letters[i]]
                        if nxt == _UNDEF:
                            break
                        fwd = nxt
                        i += 1
                    if i == k:
                        if fwd != c:
                            return False
                        continue
                    # walk backward from the end until undefined
                    bwd = c
                    j = k
                    while j > i + 1:
                        prv = table[bwd][letters[j - 1] ^ 1]
                        if prv == _UNDEF:
                            break
                        bwd = prv
                        j -= 1
                    if j == i + 1:
                        l = letters[i]
                        if table[fwd][l] == _UNDEF and table[bwd][l ^ 1] == _UNDEF:
                            table[fwd][l] = bwd
                            table[bwd][l ^ 1] = fwd
                            changed = True
                        elif table[fwd][l] == _UNDEF or table[bwd][l ^ 1] == _UNDEF:
                            return False
                        elif table[fwd][l] != bwd:
                            return False
        return True

    def emit(self, table):
        rows = [row[:] for row in table]
        t = CosetTable(
            index=len(rows),
            action=_standardize(self.ngens, rows),
            origin=self.p,
        )
        t.verify()
        self.found.append(t)


def low_index_subgroups(p, max_index, max_nodes=2_000_000, on_budget="raise"):
    """All subgroups of index <= max_index, one SubgroupRecord each,
    canonically ordered by (index, action).

    on_budget: "raise" (default) raises LimitExceeded when the node budget
    runs out; "partial" returns (records_found_so_far, complete_flag).
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    search = _Search(p, max_index, max_nodes)
    complete = True
    try:
        search.run()
    except LimitExceeded:
        if on_budget == "raise":
            raise
        complete = False
    tables = search.found
    tables.sort(key=lambda t: (t.index, t.action_key()))
    records = [schreier_transversal(t) for t in tables]
    if on_budget == "partial":
        return records, complete
    return records
