import random

import pytest

from deflab.chain import (
    collapse_to_point,
    presentation_chain_complex,
    push_to_quotient,
    restrict_to_subgroup,
)
from deflab.corpus import corpus_presentation
from deflab.coset import subgroup_record
from deflab.errors import InvalidQuotient
from deflab.groupring import GroupRingElement
from deflab.linalg import betti_numbers, mat_mul, mat_is_zero
from deflab.lowindex import low_index_subgroups
from deflab.presentation import Presentation, parse_presentation, parse_word
from deflab.quotient import FiniteGroup, core_record
from deflab.words import Word


def rand_element(rng, ngens, maxterms=4):
    d = {}
    for _ in range(rng.randrange(maxterms + 1)):
        w = Word(
            tuple(
                (rng.randrange(ngens), rng.choice((1, -1)))
                for _ in range(rng.randrange(5))
            )
        )
        d[w] = d.get(w, 0) + rng.randrange(-3, 4)
    return GroupRingElement.from_dict(d)


def test_push_units():
    q = FiniteGroup.cyclic(3)
    ident = push_to_quotient(GroupRingElement.one(), q)
    assert ident == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert push_to_quotient(GroupRingElement.zero(), q) == [[0] * 3] * 3


def test_push_c2_example():
    q = FiniteGroup.cyclic(2)
    x = GroupRingElement.one() - GroupRingElement.of_word(Word(((0, 1),)))
    assert push_to_quotient(x, q) == [[1, -1], [-1, 1]]


def test_push_is_ring_homomorphism():
    rng = random.Random(23)
    s3 = parse_presentation("< a, b | a^2, b^3, a b a b >")
    rec = subgroup_record(s3, [parse_word("a", s3)])
    _, q = core_record(rec)
    assert q.order == 6
    for _ in range(60):
        x = rand_element(rng, 2)
        y = rand_element(rng, 2)
        px, py = push_to_quotient(x, q), push_to_quotient(y, q)
        assert push_to_quotient(x + y, q) == [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(px, py)
        ]
        assert push_to_quotient(x * y, q) == mat_mul(px, py)


def test_torus_over_trivial():
    p = corpus_presentation("torus")
    c = presentation_chain_complex(p, FiniteGroup.trivial(2))
    assert c.ranks == (1, 2, 1)
    assert c.boundaries[1] == [[0], [0]]
    assert c.boundaries[0] == [[0, 0]]


def test_a5_over_trivial():
    p = parse_presentation("< a | a^5 >")
    c = presentation_chain_complex(p, FiniteGroup.trivial(1))
    assert c.boundaries[1] == [[5]]


def test_composition_zero_is_construction_invariant():
    # 100 randomized (presentation, quotient of order <= 24) pairs
    rng = random.Random(29)
    built = 0
    while built < 100:
        ngens = rng.randrange(1, 4)
        gens = tuple("abc"[:ngens])
        rels = []
        for _ in range(rng.randrange(1, 4)):
            w = Word(
                tuple(
                    (rng.randrange(ngens), rng.choice((1, -1)))
                    for _ in range(rng.randrange(1, 7))
                )
            )
            if w.cyclically_reduced():
                rels.append(w)
        p = Presentation(gens, tuple(rels))
        if p.num_relators == 0:
            continue
        quotients = [FiniteGroup.trivial(ngens)]
        try:
            recs = low_index_subgroups(p, 3, max_nodes=40_000)
        except Exception:
            recs = []
        for rec in recs[:3]:
            try:
                _, q = core_record(rec, max_order=24)
            except Exception:
                continue
            quotients.append(q)
        for q in quotients:
            c = presentation_chain_complex(p, q)  # asserts d1 @ d2 == 0
            assert mat_is_zero(mat_mul(c.boundaries[0], c.boundaries[1]))
            built += 1
            if built >= 100:
                break


def test_invalid_quotient_rejected():
    p = parse_presentation("< a | a^5 >")
    with pytest.raises(InvalidQuotient):
        presentation_chain_complex(p, FiniteGroup.cyclic(3, ngens=1))


def test_restriction_bookkeeping_and_homology():
    torus = corpus_presentation("torus")
    rec4 = subgroup_record(torus, [parse_word("a^2", torus), parse_word("b^2", torus)])
    _, q4 = core_record(rec4)
    assert q4.order == 4
    c = presentation_chain_complex(torus, q4)

    whole = low_index_subgroups(torus, 1)[0]
    assert restrict_to_subgroup(c, whole, q4) is c  # H = G unchanged

    h = subgroup_record(torus, [parse_word("a", torus), parse_word("b^2", torus)])
    rc = restrict_to_subgroup(c, h, q4)
    assert rc.ranks == (2, 4, 2) and rc.quotient_order == 2
    assert sum(len(b) * len(b[0]) for b in rc.boundaries) == sum(
        len(b) * len(b[0]) for b in c.boundaries
    )
    assert betti_numbers(c, "Q").b == betti_numbers(rc, "Q").b


def test_restriction_incompatible_pair():
    from deflab.errors import IncompatibleRestriction

    torus = corpus_presentation("torus")
    rec2 = subgroup_record(torus, [parse_word("a^2", torus), parse_word("b", torus)])
    _, q2 = core_record(rec2)
    # subgroup <a, b^2> does not contain the kernel of G -> G/<<a^2, b>>
    other = subgroup_record(torus, [parse_word("a", torus), parse_word("b^2", torus)])
    with pytest.raises(IncompatibleRestriction):
        restrict_to_subgroup(presentation_chain_complex(torus, q2), other, q2)


def test_collapse_recovers_group_level_homology():
    p = corpus_presentation("trefoil")
    rec = subgroup_record(p, [parse_word("a", p), parse_word("b a", p)])
    _, q = core_record(rec)
    c = presentation_chain_complex(p, q)
    # collapsing the full complex gives the complex over the trivial quotient
    full = collapse_to_point(c)
    assert full.quotient_order == 1 and full.ranks == c.ranks
    trivial = presentation_chain_complex(p, FiniteGroup.trivial(2))
    assert full.boundaries == trivial.boundaries


def test_restriction_preserves_integral_homology():
    # Betti numbers and torsion both survive the re-blocking permutation
    p = corpus_presentation("trefoil")
    rec = None
    for r in low_index_subgroups(p, 4):
        if r.is_normal and r.index == 4:
            rec = r
            break
    assert rec is not None
    _, q = core_record(rec)
    c = presentation_chain_complex(p, q)
    rc = restrict_to_subgroup(c, rec, q)
    bo, br = betti_numbers(c, "Q"), betti_numbers(rc, "Q")
    assert bo.b == br.b and bo.torsion == br.torsion


def test_chain_complex_serializable():
    import json

    p = corpus_presentation("torus")
    c = presentation_chain_complex(p, FiniteGroup.trivial(2))
    data = json.loads(json.dumps(c.to_json()))
    assert data["ranks"] == [1, 2, 1]
    assert data["boundaries"][1] == [[0], [0]]
