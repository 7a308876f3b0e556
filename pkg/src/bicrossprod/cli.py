"""Command line front end.

    bicross verify        --pair gallery:group-s3
    bicross report        --pair gallery:mirror-sweedler --out report.json
    bicross build         --pair pair.json
    bicross dualize       --pair gallery:mirror-sweedler [--pairing pairing.json]
    bicross gallery
    bicross check-duality --pair gallery:mirror-sweedler

Exit status is 0 when every requested check passes, 1 when a check fails and
2 when an input cannot be parsed or does not fit the requested field.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .bicross import bicrossproduct, check_group_pair, pair_from_json, pair_to_json, verify_matched
from .exactlin import conductor, parse_field
from .hopf_core import hopf_from_json, hopf_to_json, verify_hopf
from .report import Report

SCHEMA_ERROR = 2
CHECK_FAILED = 1


class SchemaError(Exception):
    pass


def _hex(s: str) -> int:
    try:
        return int(s, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex seed: {s!r}")


def _field(s: str) -> int:
    try:
        return parse_field(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicross", description="Exact checks for bicrossproducts of finite and multiplier Hopf algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, pair=True):
        if pair:
            sp.add_argument("--pair", required=True, help="path to a pair.v1/hopf.v1 file, or gallery:<name>")
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.add_argument("--samples", type=int, default=100, help="sample budget for sampled checks (default 100)")
        sp.add_argument("--seed", type=_hex, default=0xB1C8, help="hex seed for sampled checks (default B1C8)")
        sp.add_argument("--field", type=_field, help="Q or Q(zeta_n); inputs outside it are rejected")

    common(sub.add_parser("verify", help="verify the matched pair axioms (or Hopf axioms for a hopf.v1 file)"))
    common(sub.add_parser("report", help="modular data of the bicrossproduct as modular_report.v1"))
    common(sub.add_parser("build", help="emit the bicrossproduct as hopf.v1"))
    d = sub.add_parser("dualize", help="emit the dual pair as pair.v1")
    common(d)
    d.add_argument("--pairing", help="also write the pairing between the two bicrossproducts (pairing.v1)")
    common(sub.add_parser("gallery", help="list the built-in pairs"), pair=False)
    common(sub.add_parser("check-duality", help="check that the dual pair's bicrossproduct is the dual Hopf algebra"))
    return p


# ---------------------------------------------------------------------------
# inputs


def _hopf_conductor(h) -> int:
    n = 1
    vals = []
    for i in range(h.dim):
        for j in range(h.dim):
            vals.extend(h.mul_basis(i, j).values())
        vals.extend(h.comul_basis(i).values())
        vals.extend(h.S({i: 1}).values())
    vals.extend(h.counit)
    for v in vals:
        c = conductor(v)
        n = n * c // gcd(n, c)
    return n


def _reduced(n: int) -> int:
    # Q(zeta_2m) = Q(zeta_m) for odd m
    return n // 2 if n % 4 == 2 else n


def _check_field(field: int | None, *algebras) -> None:
    if field is None:
        return
    for h in algebras:
        c = _hopf_conductor(h)
        if _reduced(field) % _reduced(c):
            raise SchemaError(f"{h.name or 'input'} has coefficients outside the requested field (conductor {c})")


def load_input(spec: str):
    """Returns ("pair", MatchedPair | SecondTypePair), ("lazy", LazyGroupPair) or ("hopf", HopfData)."""
    from . import gallery

    if spec.startswith("gallery:"):
        name = spec[len("gallery:"):]
        if name in gallery.LAZY:
            return "lazy", gallery.LAZY[name]()
        try:
            return "pair", gallery.build(name)
        except KeyError as e:
            raise SchemaError(e.args[0])
    try:
        with open(spec, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError(f"cannot read {spec}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise SchemaError(f"{spec}: invalid JSON ({e.msg})")
    if not isinstance(doc, dict):
        raise SchemaError(f"{spec}: expected a JSON object")
    schema = doc.get("schema")
    try:
        if schema == "pair.v1":
            return "pair", pair_from_json(doc)
        if schema == "hopf.v1":
            return "hopf", hopf_from_json(doc)
    except (KeyError, ValueError, TypeError, IndexError) as e:
        raise SchemaError(f"{spec}: malformed {schema} document ({type(e).__name__}: {e})")
    raise SchemaError(f"{spec}: unsupported schema {schema!r}")


def _algebras(obj):
    if obj.kind == "first":
        return obj.A, obj.B
    return obj.C, obj.D


def _need_first(kind, obj, verb):
    if kind != "pair" or obj.kind != "first":
        raise SchemaError(f"{verb} needs a finite first-type pair")


# ---------------------------------------------------------------------------
# verbs


def _verify(kind, obj, args):
    if kind == "lazy":
        from .mult_group import verify_lazy_pair

        rep = verify_lazy_pair(obj, samples=args.samples, seed=args.seed)
        return {"pair": obj.name, "ok": rep.ok, "checks": rep.to_json()}, rep.ok
    if kind == "hopf":
        _check_field(args.field, obj)
        rep = verify_hopf(obj, samples=args.samples, seed=args.seed)
        return {"hopf": obj.name, "dim": obj.dim, "ok": rep.ok, "checks": rep.to_json()}, rep.ok
    _check_field(args.field, *_algebras(obj))
    rep = verify_matched(obj, samples=args.samples, seed=args.seed)
    if obj.kind == "first" and obj.group is not None:
        rep.extend(check_group_pair(obj.group), "group: ")
    return {"pair": obj.name, "dim": _algebras(obj)[0].dim * _algebras(obj)[1].dim, "ok": rep.ok, "checks": rep.to_json()}, rep.ok


def _report(kind, obj, args):
    from .bicross_integrals import full_report, modular_report_json

    _need_first(kind, obj, "report")
    _check_field(args.field, obj.A, obj.B)
    rep, bmd, info = full_report(obj)
    return modular_report_json(obj, rep, bmd, info), rep.ok


def _build(kind, obj, args):
    if kind != "pair":
        raise SchemaError("build needs a finite pair")
    _check_field(args.field, *_algebras(obj))
    return hopf_to_json(bicrossproduct(obj)), True


def _dualize(kind, obj, args):
    from .duality import dual_bicross_pairing, dualize_pair

    _need_first(kind, obj, "dualize")
    _check_field(args.field, obj.A, obj.B)
    dp = dualize_pair(obj)
    if args.pairing:
        _write(dual_bicross_pairing(obj, dp).to_json(), args.pairing)
    return pair_to_json(dp), True


def _gallery(args):
    from . import gallery

    rows = []
    for name in gallery.gallery_names():
        p = gallery.build(name)
        rows.append({"name": name, "A": p.A.name, "B": p.B.name, "dim": p.A.dim * p.B.dim, "core": name in gallery.GALLERY})
    for name in sorted(gallery.LAZY):
        rows.append({"name": name, "dim": None, "core": False, "lazy": True})
    return {"pairs": rows}, True


def _check_duality(kind, obj, args):
    from .duality import (
        dual_of_group_pair_check,
        dual_y_characters,
        dualize_pair,
        eta_pairing_check,
        mirror_dual_check,
        star_duality,
        verify_dual_bicrossproduct,
    )

    _need_first(kind, obj, "check-duality")
    _check_field(args.field, obj.A, obj.B)
    dp = dualize_pair(obj)
    rep = Report()
    rep.extend(verify_dual_bicrossproduct(obj, dp))
    rep.extend(dual_y_characters(obj, dp), "characters: ")
    rep.extend(star_duality(obj, dp), "star: ")
    if obj.group is not None:
        rep.extend(dual_of_group_pair_check(obj, dp), "group: ")
    if getattr(obj, "mirror", False):
        rep.extend(mirror_dual_check(obj, dp), "mirror: ")
        rep.extend(eta_pairing_check(obj, dp), "mirror: ")
    return {"pair": obj.name, "ok": rep.ok, "checks": rep.to_json()}, rep.ok


VERBS = {
    "verify": _verify,
    "report": _report,
    "build": _build,
    "dualize": _dualize,
    "check-duality": _check_duality,
}


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False, default=str) + "\n"


def _write(doc, path):
    text = _dump(doc)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "gallery":
            doc, ok = _gallery(args)
        else:
            kind, obj = load_input(args.pair)
            doc, ok = VERBS[args.verb](kind, obj, args)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return SCHEMA_ERROR
    _write(doc, args.out)
    return 0 if ok else CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
