"""Command-line interface.

Subcommands: ``verify`` (run a relation checker on an instance file),
``functor`` (apply the tensor functor or check its theorems), ``compose``
(compose two morphism files), ``gen`` (emit deterministic instances),
``expand`` (print a relation's symbolic expansion), ``signs`` (run a sign
suite), and ``campaign`` (the whole battery with report outputs).

Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input.
Defaults for the ring and cutoffs come from the environment variables
AINFSIMP_RING, AINFSIMP_MAX_LEVEL, AINFSIMP_MAX_DEGREE and can be overridden
by flags.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .ainf import (AInfAlgebra, AInfHomotopy, AInfMorphism, check_ainf,
                   check_ainf_homotopy, check_ainf_morphism, compose_ainf)
from .generators import GeneratorSpec, GenerationError, generate
from .io import InstanceFormatError, dump_instance, load_instance
from .report import VerificationReport
from .scalars import FieldError, PrimeField, Rationals
from .simplicial import (InftyHomotopy, InftyMorphism, InftySimplicialModule,
                         StructureError, check_faces, check_homotopy,
                         check_morphism, compose_infty)
from .symbolic import RELATION_ALIASES, RELATION_IDS, expand_relation


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _parse_ring(text):
    if text in (None, "", "rational", "q"):
        return Rationals()
    if text.startswith("p:"):
        try:
            return PrimeField(int(text[2:]))
        except (ValueError, FieldError) as exc:
            raise CliError(f"bad ring {text!r}: {exc}")
    raise CliError(f"bad ring {text!r} (use 'rational' or 'p:<odd prime>')")


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise CliError(f"environment variable {name} must be an integer")


def _load(path):
    try:
        return load_instance(path)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}")
    except InstanceFormatError as exc:
        raise CliError(f"{path}: {exc}")


def _emit_report(report, args):
    print(report.summary())
    for e in report.failures()[:20]:
        print(f"  FAIL {e.relation} {e.params}"
              + (f" at {e.location}" if e.location else ""))
    if getattr(args, "report", None):
        report.dump(args.report)
        print(f"report written to {args.report}")
    if getattr(args, "report_dir", None):
        from .figures import render_report_outputs
        for path in render_report_outputs(report, args.report_dir):
            print(f"wrote {path}")
    return 0 if report.ok else 1


def cmd_verify(args):
    obj = _load(args.file)
    max_degree = args.max_degree
    if args.what == "ainf":
        if not isinstance(obj, AInfAlgebra):
            raise CliError(f"{args.file} does not contain a structure of kind 'ainf'")
        report = check_ainf(obj, max_relation=args.max_relation, max_degree=max_degree)
    elif args.what == "faces":
        if not isinstance(obj, InftySimplicialModule):
            raise CliError(f"{args.file} does not contain a face module")
        report = check_faces(obj, args.max_level, max_degree)
    elif args.what == "morphism":
        if isinstance(obj, AInfMorphism):
            report = check_ainf_morphism(obj, max_relation=args.max_relation,
                                         max_degree=max_degree)
        elif isinstance(obj, InftyMorphism):
            report = check_morphism(obj, args.max_level, max_degree)
        else:
            raise CliError(f"{args.file} does not contain a morphism")
    elif args.what == "homotopy":
        if isinstance(obj, AInfHomotopy):
            report = check_ainf_homotopy(obj, max_relation=args.max_relation,
                                         max_degree=max_degree)
        elif isinstance(obj, InftyHomotopy):
            report = check_homotopy(obj, args.max_level, max_degree)
        else:
            raise CliError(f"{args.file} does not contain a homotopy")
    else:
        raise CliError(f"unknown verify target {args.what!r}")
    return _emit_report(report, args)


def cmd_functor(args):
    from .functor import (FunctorInputError, tensor_homotopy, tensor_morphism,
                          tensor_object, verify_functoriality)
    if args.action == "apply":
        obj = _load(args.files[0])
        try:
            if isinstance(obj, AInfAlgebra):
                image = tensor_object(obj, args.max_level)
            elif isinstance(obj, AInfMorphism):
                image = tensor_morphism(obj, args.max_level)
            elif isinstance(obj, AInfHomotopy):
                image = tensor_homotopy(obj, args.max_level)
            else:
                raise CliError(f"{args.files[0]}: functor applies to ainf instances")
        except FunctorInputError as exc:
            raise CliError(str(exc), code=1)
        if not args.output:
            raise CliError("functor apply requires -o OUTPUT")
        dump_instance(image, args.output,
                      metadata={"origin": os.path.basename(args.files[0]),
                                "max_level": args.max_level})
        print(f"wrote {args.output}")
        return 0
    # check-theorems
    report = VerificationReport("functor theorem checks",
                                config={"max_level": args.max_level})
    morphisms = []
    for path in args.files:
        obj = _load(path)
        try:
            if isinstance(obj, AInfAlgebra):
                tx = tensor_object(obj, args.max_level)
                sub = check_faces(tx, args.max_level, args.max_degree)
            elif isinstance(obj, AInfMorphism):
                morphisms.append(obj)
                tf = tensor_morphism(obj, args.max_level)
                sub = check_morphism(tf, args.max_level, args.max_degree)
            elif isinstance(obj, AInfHomotopy):
                th = tensor_homotopy(obj, args.max_level)
                sub = check_homotopy(th, args.max_level, args.max_degree)
            else:
                raise CliError(f"{path}: functor theorems need ainf instances")
        except FunctorInputError as exc:
            raise CliError(f"{path}: {exc}", code=1)
        for e in sub.entries:
            e.params["file"] = os.path.basename(path)
        report.merge(sub)
    if len(morphisms) == 2:
        g, f = morphisms
        if f.target.module == g.source.module:
            verify_functoriality(g, f, max(args.max_level - 2, 1), report)
        elif g.target.module == f.source.module:
            verify_functoriality(f, g, max(args.max_level - 2, 1), report)
    return _emit_report(report, args)


def cmd_compose(args):
    f = _load(args.f)
    g = _load(args.g)
    if args.what == "ainf":
        if not (isinstance(f, AInfMorphism) and isinstance(g, AInfMorphism)):
            raise CliError("compose ainf needs two ainf-morphism files")
        try:
            out = compose_ainf(g, f)
        except StructureError as exc:
            raise CliError(str(exc))
    else:
        if not (isinstance(f, InftyMorphism) and isinstance(g, InftyMorphism)):
            raise CliError("compose simplicial needs two dm-morphism files")
        try:
            out = compose_infty(g, f)
        except StructureError as exc:
            raise CliError(str(exc))
    dump_instance(out, args.output,
                  metadata={"composed": [os.path.basename(args.f),
                                         os.path.basename(args.g)]})
    print(f"wrote {args.output}")
    return 0


_GEN_KINDS = {"dga": "dga", "cone": "cone", "ainf": "ainf-extend",
              "morphism": "morphism-extend", "homotopy": "homotopy-extend"}


def _parse_profile(text):
    profile = []
    for part in text.split(","):
        try:
            degree, dim = part.split(":")
            profile.append((int(degree), int(dim)))
        except ValueError:
            raise CliError(f"bad profile entry {part!r} (expected degree:dim)")
    return tuple(profile)


def cmd_gen(args):
    field_ = _parse_ring(args.ring)
    spec = GeneratorSpec(seed=args.seed,
                         kind=args.name or _GEN_KINDS[args.what],
                         profile=_parse_profile(args.dims),
                         kernel_offset=args.kernel_offset)
    try:
        instance = generate(spec, field_)
    except GenerationError as exc:
        raise CliError(str(exc), code=1)
    metadata = {"seed": args.seed, "kind": spec.kind, "dims": args.dims,
                "kernel_offset": args.kernel_offset, "generator": "ainfsimp.gen"}
    dump_instance(instance, args.output, metadata=metadata)
    print(f"wrote {args.output}")
    return 0


def cmd_expand(args):
    rid = RELATION_ALIASES.get(args.relation, args.relation)
    if rid not in RELATION_IDS:
        raise CliError(f"unknown relation {args.relation!r}; "
                       f"known: {', '.join(RELATION_IDS)}")
    index = args.k
    if rid.startswith("1.") and index < 0:
        raise CliError("face-side relations need k >= 0")
    print(expand_relation(rid, index).render())
    return 0


def cmd_signs(args):
    from .campaign import congruence_report, exponent_report, koszul_report
    if args.suite == "congruences":
        report = congruence_report(args.max_n)
    elif args.suite == "exponents":
        report = exponent_report(args.max_n)
    else:
        report = koszul_report(args.max_n)
    return _emit_report(report, args)


def cmd_campaign(args):
    from .campaign import run_campaign
    field_ = _parse_ring(args.ring)
    report = run_campaign(max_level=args.max_level, max_degree=args.max_degree,
                          max_relation=args.max_relation, field_=field_)
    if args.out_dir and not getattr(args, "report_dir", None):
        args.report_dir = args.out_dir
    return _emit_report(report, args)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ainfsimp",
        description="Exact verification of higher-structure relations and the "
                    "tensor functor between them.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    default_level = _env_int("AINFSIMP_MAX_LEVEL", 5)
    default_degree = os.environ.get("AINFSIMP_MAX_DEGREE")
    default_degree = int(default_degree) if default_degree else None
    default_ring = os.environ.get("AINFSIMP_RING", "rational")

    def add_report_flags(p):
        p.add_argument("--report", help="write the JSON report here")
        p.add_argument("--report-dir",
                       help="write JSON, CSV, and figures into this directory")

    p = sub.add_parser("verify", help="check an instance file's relations")
    p.add_argument("what", choices=["ainf", "faces", "morphism", "homotopy"])
    p.add_argument("file")
    p.add_argument("--max-relation", "--cutoff-n", type=int, default=None,
                   dest="max_relation")
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--max-degree", "--cutoff-q", type=int, default=default_degree,
                   dest="max_degree")
    add_report_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("functor", help="apply the tensor functor or check its theorems")
    p.add_argument("action", choices=["apply", "check-theorems"])
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--max-level", type=int, default=default_level)
    p.add_argument("--max-degree", type=int, default=default_degree)
    add_report_flags(p)
    p.set_defaults(func=cmd_functor)

    p = sub.add_parser("compose", help="compose two morphism files")
    p.add_argument("what", choices=["ainf", "simplicial"])
    p.add_argument("f", help="inner morphism (applied first)")
    p.add_argument("g", help="outer morphism")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("gen", help="generate a deterministic instance")
    p.add_argument("what", choices=sorted(_GEN_KINDS))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dims", default="0:1,1:1",
                   help="base profile as degree:dim pairs, e.g. 0:1,1:1")
    p.add_argument("--name", help="named built-in (for dga)")
    p.add_argument("--ring", default=default_ring)
    p.add_argument("--kernel-offset", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("expand", help="print a relation's symbolic expansion")
    p.add_argument("--relation", required=True)
    p.add_argument("--k", type=int, required=True,
                   help="tuple length for 1.x, relation index for 2.x")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("signs", help="run a sign verification suite")
    p.add_argument("--suite", choices=["congruences", "exponents", "koszul"],
                   required=True)
    p.add_argument("--max-n", type=int, default=None)
    add_report_flags(p)
    p.set_defaults(func=cmd_signs)

    p = sub.add_parser("campaign", help="run the full verification battery")
    p.add_argument("--out-dir", help="directory for report, CSV, and figures")
    p.add_argument("--max-level", type=int, default=default_level)
    p.add_argument("--max-degree", type=int, default=default_degree or 6)
    p.add_argument("--max-relation", type=int, default=3)
    p.add_argument("--ring", default=default_ring)
    add_report_flags(p)
    p.set_defaults(func=cmd_campaign)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", "missing") is None:
        args.max_n = {"congruences": 8, "exponents": 6, "koszul": 6}[args.suite]
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (InstanceFormatError, StructureError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
