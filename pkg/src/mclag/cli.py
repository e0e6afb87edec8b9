"""Command-line front end: ``mclag verify | homology | coinv | dump-complex``."""
from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from .errors import MclagError, UnknownJob, UnsupportedGenus
from .fgab import FgAbelianGroup
from .report import DEFAULT_GENUS_CAP, JOBS, load_expect_file, verify


def _cmd_verify(args) -> int:
    expect = load_expect_file(args.expect_file) if args.expect_file else None
    jobs = list(JOBS) if args.job == "all" else [args.job]
    reports = [verify(j, args.genus, genus_cap=args.genus_cap, expect=expect) for j in jobs]
    if args.format == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(r.to_markdown() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_homology(args) -> int:
    from .homology import homology_h0, homology_h1, s2l_representation
    from .presentations import sl_presentation, trivial_representation

    if not 3 <= args.genus <= args.genus_cap:
        raise UnsupportedGenus(args.genus)
    pres = sl_presentation(args.genus)
    rep = s2l_representation(args.genus) if args.coeff == "s2l" else trivial_representation(pres)
    group = (homology_h0 if args.degree == 0 else homology_h1)(pres, rep)
    _emit(args, group, f"H{args.degree}(SL({args.genus},Z);{args.coeff})")
    return 0


def _cmd_coinv(args) -> int:
    from .coinvariants import coinvariants, wedge2_s2l_module
    from .report import torelli_coinvariants

    g = args.genus
    if not 3 <= g <= args.genus_cap:
        raise UnsupportedGenus(g)
    if args.module == "wedge2-s2l":
        acting = args.acting or "sl"
        if acting == "s2l":
            # S^2 L is abelian, so it acts trivially on its own exterior square
            group = FgAbelianGroup(comb(g * (g + 1) // 2, 2))
        elif acting in ("sl", "gl"):
            group = coinvariants(wedge2_s2l_module(g, acting))
        elif acting == "ursp":
            group = coinvariants(wedge2_s2l_module(g, "gl"))
        else:
            print(f"acting set {acting} is not defined on ∧²S2L", file=sys.stderr)
            return 2
    else:
        acting = args.acting or "s2l"
        if acting == "sl":
            print("use gl, s2l, ursp or ursp-plus-remark for the Torelli model", file=sys.stderr)
            return 2
        group = torelli_coinvariants(g, acting)
    _emit(args, group, f"coinvariants of {args.module} under {acting} (g = {g})")
    return 0


def _cmd_dump_complex(args) -> int:
    from .homology import chain_boundaries, s2l_representation
    from .presentations import sl_presentation, trivial_representation

    pres = sl_presentation(args.genus)
    rep = s2l_representation(args.genus) if args.coeff == "s2l" else trivial_representation(pres)
    d1, d2 = chain_boundaries(pres, rep)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"sl{args.genus}_{args.coeff}"
    for name, m in (("d1", d1), ("d2", d2)):
        path = out / f"{stem}_{name}.txt"
        path.write_text(m.to_text())
        print(f"{path}: {m.rows} x {m.cols}")
    return 0


def _emit(args, group, title: str) -> None:
    if args.format == "json":
        print(json.dumps({"quantity": title, "group": group.to_dict(), "text": str(group)},
                         ensure_ascii=False))
    else:
        print(f"{title} = {group}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mclag", description=__doc__)
    p.add_argument("--genus-cap", type=int, default=DEFAULT_GENUS_CAP,
                   help="largest genus accepted (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification job")
    v.add_argument("--job", required=True, help=f"one of: all, {', '.join(JOBS)}")
    v.add_argument("--genus", type=int, required=True)
    v.add_argument("--format", choices=["json", "md"], default="md")
    v.add_argument("--expect-file", help="JSON {job: {genus: {quantity: value}}} overrides")
    v.set_defaults(func=_cmd_verify)

    h = sub.add_parser("homology", help="H0 or H1 of SL(g, Z)")
    h.add_argument("--group", choices=["sl"], default="sl")
    h.add_argument("--genus", type=int, required=True)
    h.add_argument("--coeff", choices=["trivial", "s2l"], default="s2l")
    h.add_argument("--degree", type=int, choices=[0, 1], default=1)
    h.add_argument("--format", choices=["json", "md"], default="md")
    h.set_defaults(func=_cmd_homology)

    c = sub.add_parser("coinv", help="coinvariants of ∧²S2L or of H1 of the Torelli group")
    c.add_argument("--module", choices=["wedge2-s2l", "torelli-h1"], required=True)
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--acting", choices=["sl", "s2l", "gl", "ursp", "ursp-plus-remark"],
                   help="acting generating set (default: sl for wedge2-s2l, s2l for torelli-h1)")
    c.add_argument("--format", choices=["json", "md"], default="md")
    c.set_defaults(func=_cmd_coinv)

    d = sub.add_parser("dump-complex", help="write d1/d2 of the SL(g, Z) complex as text")
    d.add_argument("--genus", type=int, required=True)
    d.add_argument("--coeff", choices=["trivial", "s2l"], default="s2l")
    d.add_argument("--out-dir", default=".")
    d.set_defaults(func=_cmd_dump_complex)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnknownJob, UnsupportedGenus) as exc:
        print(f"mclag: {exc}", file=sys.stderr)
        return 2
    except MclagError as exc:
        print(f"mclag: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
