"""Command-line front end: ``rootsuper <verb> [options]``.

Every verb prints one JSON document on stdout.  Exit codes: ``0`` success or
pass, ``1`` a verification or construction failed (the report is printed),
``2`` usage or input-data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from . import __version__
from .catalog import TypeLabel, build
from .classify import ClassificationError, classify_lfrss
from .extaffine import (
    RADICAL_BOUND,
    EarsDatum,
    ExcludedTypeError,
    HypothesisError,
    MixedLayersError,
    StructureError,
    check_radical_generation,
    quotient_ears,
    structure_construct,
    structure_decompose,
    verify_ears_axioms,
)
from .form import format_rational
from .lattice import RadicalGroup
from .rootsys import (
    STRING_BOUND,
    BaseDatum,
    RootSet,
    RootStringError,
    root_string,
    verify_axioms,
    verify_base,
    weyl_orbit,
)
from .serialize import (
    DataError,
    dumps,
    ears_from_json,
    ears_to_json,
    element_from_vector,
    model_to_json,
    radical_element_from_json,
    rootset_from_json,
    rootset_to_json,
    structure_from_json,
    structure_to_json,
    vector_to_json,
)

VERBS = ("build", "verify", "classify", "string", "orbit", "base", "construct-ears", "decompose-ears",
         "quotient", "check-radical")


class _Fail(Exception):
    """A verified failure: print ``payload`` and exit with status 1."""

    def __init__(self, payload: Any):
        super().__init__("verification failed")
        self.payload = payload


def _load(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise DataError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise DataError(f"malformed JSON in {path}: {e}") from e


def _json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DataError(f"{what} is not valid JSON: {e}") from e


def _label(text: str, lam: Optional[str]) -> TypeLabel:
    try:
        if lam is not None and text.count(",") == 1 and text.rstrip().endswith(")"):
            text = text.rstrip()[:-1] + f",{lam})"  # "D(2,1)" with --lambda
        label = TypeLabel.parse(text)
        if lam is not None:
            label = TypeLabel(label.family, label.params, Fraction(lam)).validate()
        return label
    except (ValueError, ZeroDivisionError) as e:
        raise DataError(str(e)) from e


def parse_radical(text: str) -> RadicalGroup:
    """``"free_rank,torsion..."``: ``"1"`` is ℤ, ``"0,2,2"`` is ℤ/2 ⊕ ℤ/2, ``"0"`` the trivial group."""
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty")
        return RadicalGroup(parts[0], tuple(parts[1:]))
    except ValueError as e:
        raise DataError(f"bad --radical {text!r}: expected 'free_rank,torsion...' ({e})") from e


def _is_ears(data: Any) -> bool:
    return isinstance(data, dict) and "quotient" in data


# -- verbs ---------------------------------------------------------------------


def _cmd_build(args) -> Any:
    try:
        return model_to_json(build(_label(args.type, args.lam)))
    except ValueError as e:
        raise DataError(str(e)) from e


def _cmd_verify(args) -> Any:
    data = _load(args.file)
    if _is_ears(data):
        try:
            report = verify_ears_axioms(ears_from_json(data), bound=args.bound)
        except MixedLayersError as e:
            raise DataError(str(e)) from e
    else:
        report = verify_axioms(rootset_from_json(data), bound=args.bound)
    out = report.to_json()
    if not report.passed:
        raise _Fail(out)
    return out


def _cmd_classify(args) -> Any:
    R = rootset_from_json(_load(args.file))
    try:
        res = classify_lfrss(R)
    except ClassificationError as e:
        raise _Fail({"error": str(e)})
    basis = res.model.rootset.basis
    return {
        "label": str(res.label),
        "scalar": format_rational(res.scalar),
        "basis_map": [{"model": vector_to_json(a, basis), "image": vector_to_json(b, R.basis)}
                      for a, b in zip(res.model.base.elements, res.images)],
    }


def _cmd_string(args) -> Any:
    R = rootset_from_json(_load(args.file))
    alpha = element_from_vector(_json_arg(args.alpha, "--alpha"), R.basis)
    beta = element_from_vector(_json_arg(args.beta, "--beta"), R.basis)
    try:
        s = root_string(R, alpha, beta, bound=args.bound)
    except RootStringError as e:
        raise _Fail({"error": str(e), "reason": e.reason})
    except ValueError as e:
        raise DataError(str(e)) from e
    return {"p": s.p, "q": s.q, "members": [vector_to_json(m, R.basis) for m in s.members]}


def _cmd_orbit(args) -> Any:
    R = rootset_from_json(_load(args.file))
    seed = element_from_vector(_json_arg(args.seed, "--seed"), R.basis)
    if seed not in R:
        raise DataError("the seed is not a root")
    return {"orbit": [vector_to_json(x, R.basis) for x in weyl_orbit(R, seed)]}


def _cmd_base(args) -> Any:
    data = _load(args.file)
    R = rootset_from_json(data)
    raw = _json_arg(args.base, "--base") if args.base else data.get("base")
    if raw is None:
        raise DataError('no base given: pass --base or include a "base" field')
    kind = args.kind or data.get("base_kind", "base")
    try:
        datum = BaseDatum(tuple(element_from_vector(v, R.basis) for v in raw), kind)
    except ValueError as e:
        raise DataError(str(e)) from e
    report = verify_base(R, datum)
    out = report.to_json()
    if not report.passed:
        raise _Fail(out)
    return out


def _cmd_construct(args) -> Any:
    g = parse_radical(args.radical)
    label = _label(args.type, args.lam)
    d = structure_from_json(_load(args.layers), g, label=label)
    try:
        E = structure_construct(d, g)
    except StructureError as e:
        raise _Fail({"error": str(e), "violated": list(e.conditions)})
    except ExcludedTypeError as e:
        raise _Fail({"error": str(e)})
    except MixedLayersError as e:
        raise DataError(str(e)) from e
    return ears_to_json(E)


def _cmd_decompose(args) -> Any:
    E = ears_from_json(_load(args.file))
    try:
        return structure_to_json(structure_decompose(E))
    except StructureError as e:
        raise _Fail({"error": str(e), "violated": list(e.conditions)})
    except (ExcludedTypeError, ClassificationError) as e:
        raise _Fail({"error": str(e)})
    except MixedLayersError as e:
        raise DataError(str(e)) from e


def _cmd_quotient(args) -> Any:
    data = _load(args.file)
    E = ears_from_json(data) if _is_ears(data) else EarsDatum.from_rootset(rootset_from_json(data))
    return rootset_to_json(quotient_ears(E))


def _cmd_check_radical(args) -> Any:
    data = _load(args.file)
    E = ears_from_json(data) if _is_ears(data) else EarsDatum.from_rootset(rootset_from_json(data))
    a = radical_element_from_json(_json_arg(args.element, "--element"), E.radical)
    try:
        n = check_radical_generation(E, a, bound=args.bound)
    except (ExcludedTypeError, ClassificationError) as e:
        raise _Fail({"refused": True, "error": str(e)})
    except ValueError as e:
        raise DataError(str(e)) from e
    return {"n": n, "bound": args.bound, "conclusive": n is not None}


# -- parser --------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootsuper", description="Root supersystems: build, verify, classify, decompose.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["json"], default="json", help="output format (JSON only)")
        return sp

    sp = add("build", "print a catalog model")
    sp.add_argument("--type", required=True, help='type label, e.g. "B(1,3)", "Adot(0,4)", "D(2,1,1/2)"')
    sp.add_argument("--lambda", dest="lam", help="λ for D(2,1,λ)")

    sp = add("verify", "check axioms S1-S5 of a root set or extended affine datum")
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, default=STRING_BOUND, help="root-string scan bound")

    sp = add("classify", "type of a finite irreducible root supersystem")
    sp.add_argument("file")

    sp = add("string", "the alpha-string through beta")
    sp.add_argument("file")
    sp.add_argument("--alpha", required=True, help="coordinate vector (JSON list)")
    sp.add_argument("--beta", required=True, help="coordinate vector (JSON list)")
    sp.add_argument("--bound", type=int, default=STRING_BOUND)

    sp = add("orbit", "Weyl orbit of a root")
    sp.add_argument("file")
    sp.add_argument("--seed", required=True, help="coordinate vector (JSON list)")

    sp = add("base", "verify an (integral) base")
    sp.add_argument("file")
    sp.add_argument("--base", help="JSON list of coordinate vectors (default: the file's base field)")
    sp.add_argument("--kind", choices=["base", "integral-base"])

    sp = add("construct-ears", "structure-theorem construction")
    sp.add_argument("--type", required=True)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--radical", required=True, help='"free_rank,torsion...", e.g. "1" or "0,2,2"')
    sp.add_argument("--layers", required=True, help="JSON file with the subsets F, S, L1, L2, E1, E2")

    sp = add("decompose-ears", "read F, S, L_i, E_i off an extended affine datum")
    sp.add_argument("file")

    sp = add("quotient", "the quotient root supersystem R/A0")
    sp.add_argument("file")

    sp = add("check-radical", "least n with n*a in the span of the isotropic roots")
    sp.add_argument("file")
    sp.add_argument("--element", required=True, help="radical element (JSON integer list)")
    sp.add_argument("--bound", type=int, default=RADICAL_BOUND)
    return p


_HANDLERS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "string": _cmd_string,
    "orbit": _cmd_orbit,
    "base": _cmd_base,
    "construct-ears": _cmd_construct,
    "decompose-ears": _cmd_decompose,
    "quotient": _cmd_quotient,
    "check-radical": _cmd_check_radical,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = _HANDLERS[args.verb](args)
    except _Fail as f:
        print(dumps(f.payload))
        return 1
    except (DataError, HypothesisError) as e:
        print(f"rootsuper: error: {e}", file=sys.stderr)
        return 2
    print(dumps(out))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
