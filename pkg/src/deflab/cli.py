"""Command-line interface.

Inputs are presentation files in the angle-bracket grammar; `corpus:NAME`
anywhere a file is expected loads a built-in presentation.  All commands
emit deterministic JSON on stdout (or --out).  Exit codes: 0 when every
report row is certified-holds or consistent, 2 when a violation row is
present (violated-upper or inconclusive), 1 for operational errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import __version__
from .chain import presentation_chain_complex
from .corpus import CORPUS, corpus_presentation
from .errors import DeflabError
from .groupring import GroupRingElement
from .intervals import deficiency_interval
from .linalg import betti_numbers
from .lowindex import low_index_subgroups
from .modcert import KernelWitness, rank_drop_certificate
from .modp import dual_complex_dims
from .presentation import parse_presentation, parse_word, serialize_presentation
from .quotient import FiniteGroup, core_record
from .schreier import rewrite_subgroup_presentation
from .stability import STATUS_CERTIFIED, STATUS_CONSISTENT, stability_report


def _dump(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_presentation(spec):
    if spec.startswith("corpus:"):
        name = spec.split(":", 1)[1]
        if name not in CORPUS:
            raise DeflabError(f"unknown corpus entry {name!r}")
        return corpus_presentation(name), name
    with open(spec) as fh:
        return parse_presentation(fh.read()), spec


def _parse_index_spec(spec):
    out = set()
    for part in spec.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(part))
    return out


def _resolve_quotient(p, spec):
    """'trivial' or 'core:K:J' (the J-th subgroup of index K, 1-based)."""
    if spec == "trivial":
        return FiniteGroup.trivial(p.num_generators)
    if spec.startswith("core:"):
        _, k, j = spec.split(":")
        k, j = int(k), int(j)
        records = [r for r in low_index_subgroups(p, k) if r.index == k]
        if not 1 <= j <= len(records):
            raise DeflabError(
                f"index-{k} subgroup ordinal {j} out of range (1..{len(records)})"
            )
        _, group = core_record(records[j - 1])
        return group
    raise DeflabError(f"bad quotient spec {spec!r}")


def cmd_parse(args):
    p, _ = _load_presentation(args.presentation)
    _dump(
        {
            "generators": list(p.generators),
            "relators": [p.word_to_text(r) for r in p.relators],
            "canonical": serialize_presentation(p),
        },
        args.out,
    )
    return 0


def cmd_subgroups(args):
    p, _ = _load_presentation(args.presentation)
    records = low_index_subgroups(p, args.max_index)
    _dump([r.to_json() for r in records], args.out)
    return 0


def cmd_schreier(args):
    p, _ = _load_presentation(args.presentation)
    wanted = _parse_index_spec(args.index_spec)
    out = []
    for rec in low_index_subgroups(p, max(wanted)):
        if rec.index not in wanted:
            continue
        sub = rewrite_subgroup_presentation(p, rec)
        out.append(
            {
                "index": rec.index,
                "presentation": serialize_presentation(sub.presentation),
                "generator_map": [
                    p.word_to_text(w) for w in sub.generator_map
                ],
            }
        )
    _dump(out, args.out)
    return 0


def cmd_homology(args):
    p, _ = _load_presentation(args.presentation)
    quotient = _resolve_quotient(p, args.quotient)
    complex_ = presentation_chain_complex(p, quotient)
    if args.field == "Q":
        betti = betti_numbers(complex_, "Q")
    else:
        betti = betti_numbers(complex_, int(args.field))
    _dump(
        {
            "quotient_order": quotient.order,
            "ranks": list(complex_.ranks),
            "field": betti.field,
            "betti": betti.b,
            "torsion": betti.torsion,
        },
        args.out,
    )
    return 0


def cmd_deficiency(args):
    p, _ = _load_presentation(args.presentation)
    interval = deficiency_interval(p, aspherical=args.aspherical)
    _dump(interval.to_json(), args.out)
    return 0


def cmd_stability(args):
    p, name = _load_presentation(args.presentation)
    report = stability_report(
        p, args.max_index, aspherical=args.aspherical, group_name=name
    )
    _dump(report.to_json(), args.out)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                [
                    "group",
                    "index",
                    "ordinal",
                    "schreier_generators",
                    "schreier_relators",
                    "b1",
                    "torsion",
                    "lower",
                    "upper",
                    "certificate",
                    "identity_status",
                ]
            )
            for row in report.rows:
                writer.writerow(
                    [
                        report.group,
                        row.index,
                        row.ordinal,
                        row.schreier_generators,
                        row.schreier_relators,
                        row.b1,
                        ";".join(str(t) for t in row.torsion),
                        row.interval.lower,
                        row.interval.upper,
                        row.interval.certificate,
                        row.identity_status,
                    ]
                )
    ok = all(
        row.identity_status in (STATUS_CERTIFIED, STATUS_CONSISTENT)
        for row in report.rows
    )
    return 0 if ok else 2


def cmd_cert(args):
    p, _ = _load_presentation(args.presentation)
    with open(args.witness) as fh:
        data = json.load(fh)
    rho = []
    for coordinate in data["rho"]:
        terms = {}
        for word_text, coeff in coordinate:
            w = parse_word(word_text, p)
            terms[w] = terms.get(w, 0) + int(coeff)
        rho.append(GroupRingElement.from_dict(terms))
    witness = KernelWitness(rho=tuple(rho))
    quotient = _resolve_quotient(p, data.get("quotient", args.quotient))
    report = rank_drop_certificate(
        p, witness, quotient, max_index=data.get("max_index", args.max_index)
    )
    _dump(report.to_json(), args.out)
    return 0


def cmd_modp(args):
    p, _ = _load_presentation(args.presentation)
    records = [
        r
        for r in low_index_subgroups(p, args.normal_index)
        if r.index == args.normal_index and r.is_normal
    ]
    out = [dual_complex_dims(p, r, args.p).to_json() for r in records]
    _dump(out, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deflab",
        description="exact deficiency/homology experiments on finite presentations",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.add_argument("presentation", help="presentation file or corpus:NAME")
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.set_defaults(fn=fn)
        return sp

    add("parse", cmd_parse, help="parse and echo a presentation")

    sp = add("subgroups", cmd_subgroups, help="enumerate low-index subgroups")
    sp.add_argument("--max-index", type=int, required=True)

    sp = add("schreier", cmd_schreier, help="rewrite subgroup presentations")
    sp.add_argument(
        "--index-spec", required=True, help="indices to rewrite, e.g. 2 or 1-3 or 2,4"
    )

    sp = add("homology", cmd_homology, help="Betti numbers over a finite quotient")
    sp.add_argument(
        "--quotient", default="trivial", help="'trivial' or core:INDEX:ORDINAL"
    )
    sp.add_argument("--field", default="Q", help="'Q' or a prime")

    sp = add("deficiency", cmd_deficiency, help="certified deficiency interval")
    sp.add_argument("--aspherical", action="store_true")

    sp = add("stability", cmd_stability, help="stabilization report over covers")
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--aspherical", action="store_true")
    sp.add_argument("--csv", help="also write a CSV row dump here")

    sp = add("cert", cmd_cert, help="generator-drop certificate from a witness file")
    sp.add_argument("--witness", required=True, help="witness JSON file")
    sp.add_argument("--quotient", default="trivial")
    sp.add_argument("--max-index", type=int, default=6)

    sp = add("modp", cmd_modp, help="dual-complex mod-p report for normal subgroups")
    sp.add_argument("-p", type=int, required=True, help="prime")
    sp.add_argument("--normal-index", type=int, required=True)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DeflabError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
