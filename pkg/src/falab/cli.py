"""Command-line front end.

Every command reads JSON description files, runs its checks, and emits a
deterministic report (JSON by default, markdown on request). Exit status:
0 when every clause passes, 1 when some clause fails, 2 when the input is
invalid — including mathematically inconsistent structure data and violated
preconditions of the requested computation.

``FALAB_MAX_DIM`` caps accepted dimensions (default 200).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .algebra import AlgebraSpec, Element, apply_functional
from .errors import CorruptionError, FalabError, InvalidInput, SchemaError
from .fields import FieldDescriptor, scalar_from_text, scalar_to_text
from .frobenius import build_frobenius
from .fusion import (
    adjoint_spectrum,
    build_g0,
    class_equation_check,
    regular_class_checks,
    ss_locus_mod_p,
    zhu_divisibility,
)
from .hopf import (
    HopfSpec,
    dual_hopf,
    find_integrals,
    frobenius_from_integrals,
    maschke_report,
    symmetry_suite,
)
from .intlattice import lattice_meet_line
from .linalg import MatrixE
from .report import FAIL, Check, ReportDoc, check_that, fact, skipped, undefined
from .representations import analyze_module, verify_idempotent_theorems
from .serialize import (
    algebra_from_json,
    algebra_to_json,
    detect_kind,
    dump_json,
    fusion_from_json,
    fusion_to_json,
    hopf_from_json,
    hopf_to_json,
    module_from_json,
    module_to_json,
    parse_field_flag,
)
from . import constructors as ctor


def _read_input(path: str, report: ReportDoc):
    """Read one input file (or stdin as '-'), recording its digest."""
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise SchemaError(str(exc), path) from exc
    report.inputs.append(
        {"path": path, "sha256": hashlib.sha256(raw).hexdigest()}
    )
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"malformed JSON: {exc}", path) from exc


def _parse_scalars(field: FieldDescriptor, text: str):
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"malformed scalar list: {exc}") from exc
        return [scalar_from_text(field, v) for v in data]
    return [scalar_from_text(field, part.strip()) for part in text.split(",")]


def _max_dim() -> int:
    raw = os.environ.get("FALAB_MAX_DIM", "200")
    try:
        return int(raw)
    except ValueError as exc:
        raise SchemaError(f"FALAB_MAX_DIM must be an integer, got {raw!r}") from exc


def _emit(report: ReportDoc, args) -> int:
    if getattr(args, "timings", False):
        report.timings = {"total": round(time.monotonic() - args._started, 6)}
    text = report.to_markdown() if args.format == "markdown" else report.to_json()
    if getattr(args, "output", None) and args.command not in ("make", "g0-build"):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.failed else 0


# -- commands -----------------------------------------------------------------


def cmd_check(args, report: ReportDoc) -> int:
    doc = _read_input(args.file, report)
    kind = detect_kind(doc)
    cap = _max_dim()
    if kind == "algebra":
        A = algebra_from_json(doc, max_dim=cap)
        report.add(fact("kind", "document kind", "algebra"),
                   fact("dimension", "algebra dimension", A.dim),
                   fact("valid", "associativity and unit laws verified", True))
    elif kind == "hopf":
        H = hopf_from_json(doc, max_dim=cap)
        report.add(fact("kind", "document kind", "hopf"),
                   fact("dimension", "algebra dimension", H.dim),
                   fact("valid", "all Hopf axiom families verified", True))
    elif kind == "module":
        rep, label = module_from_json(doc, max_dim=cap)
        report.add(fact("kind", "document kind", "module"),
                   fact("dimension", "module dimension", rep.dim),
                   fact("valid", "module laws verified", True))
    elif kind == "module-list":
        for t, entry in enumerate(doc):
            module_from_json(entry, loc=f"[{t}].", max_dim=cap)
        report.add(fact("kind", "document kind", "module-list"),
                   fact("count", "number of modules", len(doc)),
                   fact("valid", "module laws verified", True))
    else:
        FR = fusion_from_json(doc, max_dim=cap)
        report.add(fact("kind", "document kind", "fusion"),
                   fact("rank", "fusion ring rank", FR.rank),
                   fact("valid", "based ring axioms verified", True))
    return _emit(report, args)


def cmd_frobenius(args, report: ReportDoc) -> int:
    doc = _read_input(args.algebra, report)
    A = algebra_from_json(doc, max_dim=_max_dim())
    lam = _parse_scalars(A.field, args.lam)
    if len(lam) != A.dim:
        raise SchemaError(f"--lambda needs {A.dim} scalars, got {len(lam)}")
    from .errors import SingularForm

    try:
        F = build_frobenius(A, lam)
    except SingularForm as exc:
        gram_rank = 0
        # recompute the rank for the report
        probe = [
            [
                sum(
                    (c * lam[k] for (k, c) in A._sparse[i][j] if lam[k]),
                    A.field.zero(),
                )
                for j in range(A.dim)
            ]
            for i in range(A.dim)
        ]
        gram_rank = MatrixE(A.field, probe).rank()
        report.add(fact("gram_rank", "rank of the Gram matrix", gram_rank))
        report.add(
            undefined("separable", "separability through the Casimir ideal",
                      "form is singular"),
        )
        if exc.witness is not None:
            report.add(fact("singular_witness", "kernel vector of the Gram matrix",
                            repr(exc.witness.coeffs)))
        return _emit(report, args)
    sep, witness = F.is_separable()
    report.add(
        fact("gram_rank", "rank of the Gram matrix", A.dim),
        fact("symmetric", "the form is symmetric", F.symmetric),
        fact("nakayama_is_identity", "the Nakayama matrix is the identity",
             F.nakayama_is_identity()),
        fact("casimir_element", "z = sum_i x_i y_i",
             repr(F.casimir_element().coeffs)),
        fact("casimir_ideal_dim", "dimension of the Casimir ideal",
             len(F.casimir_ideal_basis())),
        fact("separable", "1 lies in the Casimir ideal", sep),
    )
    if witness is not None:
        report.add(fact("witness", "preimage of 1 under the Casimir operator",
                        repr(witness.coeffs)))
    return _emit(report, args)


def cmd_integrals(args, report: ReportDoc) -> int:
    doc = _read_input(args.hopf, report)
    H = hopf_from_json(doc, max_dim=_max_dim())
    ints = find_integrals(H)
    mr = maschke_report(H)
    report.add(
        fact("right_integral", "canonical right integral",
             repr(ints.right.coeffs)),
        fact("left_integral", "canonical left integral",
             repr(ints.left.coeffs)),
        fact("unimodular", "left and right integral lines coincide",
             ints.unimodular),
        fact("involutory", "the antipode squares to the identity",
             ints.involutory),
        fact("dim_epsilon", "counit of the canonical right integral",
             repr(mr.dim_generator)),
        fact("separable", "the counit of the integral is invertible",
             mr.separable),
    )
    if mr.idempotent_integral is not None:
        report.add(fact("idempotent_integral", "the normalized two-sided integral",
                        repr(mr.idempotent_integral.coeffs)))
    report.extend(mr.checks)
    return _emit(report, args)


def cmd_hopf_report(args, report: ReportDoc) -> int:
    doc = _read_input(args.hopf, report)
    H = hopf_from_json(doc, max_dim=_max_dim())
    ints = find_integrals(H)
    F, pair = frobenius_from_integrals(H)
    mr = maschke_report(H)
    suite = symmetry_suite(H)
    report.add(
        fact("valid", "all Hopf axiom families verified", True),
        fact("unimodular", "left and right integral lines coincide", ints.unimodular),
        fact("involutory", "the antipode squares to the identity", ints.involutory),
        fact("symmetric", "the integral form is symmetric", suite.symmetric),
        fact("bi_symmetric", "both the algebra and its dual are symmetric",
             suite.bi_symmetric),
        fact("lambda_is_trace", "the integral functional kills commutators",
             suite.lambda_is_trace),
        fact("dim_epsilon", "counit of the canonical right integral",
             repr(mr.dim_generator)),
        fact("separable", "the counit of the integral is invertible", mr.separable),
        fact("integral_pair", "canonical Lambda and lam",
             f"Lambda={ints.right.coeffs!r}, lam={pair.lam!r}"),
    )
    report.extend(mr.checks)
    report.extend(suite.checks)
    return _emit(report, args)


def cmd_module_report(args, report: ReportDoc) -> int:
    alg_doc = _read_input(args.algebra, report)
    cap = _max_dim()
    A = algebra_from_json(alg_doc, max_dim=cap)
    mod_doc = _read_input(args.module, report)
    rep, label = module_from_json(mod_doc, algebra=A, max_dim=cap,
                                  base_dir=os.path.dirname(args.module) or ".")
    report.add(
        fact("module", "validated module", label or "module"),
        fact("dimension", "module dimension", rep.dim),
        fact("character", "character on the defining basis",
             repr(rep.character)),
    )
    if args.lam:
        lam = _parse_scalars(A.field, args.lam)
        if len(lam) != A.dim:
            raise SchemaError(f"--lambda needs {A.dim} scalars, got {len(lam)}")
        F = build_frobenius(A, lam)
        analysis = analyze_module(F, rep)
        report.add(
            fact("end_dim", "dimension of the endomorphism algebra",
                 analysis.end_dim),
            fact("schur", "the endomorphism algebra is the base field",
                 analysis.schur),
            fact("z_element", "preimage of the character under the form",
                 repr(analysis.z_element.coeffs)),
        )
        if analysis.index is not None:
            report.add(fact("index", "omega_M(z(M))", repr(analysis.index)))
        if analysis.idempotent is not None:
            report.add(fact("central_idempotent", "e(M) = index^{-1} z(M)",
                            repr(analysis.idempotent.coeffs)))
            sep, _ = F.is_separable()
            report.extend(verify_idempotent_theorems(F, rep, analysis, separable=sep))
        elif analysis.index_invertible is False:
            report.add(undefined("central_idempotent", "e(M) = index^{-1} z(M)",
                                 "the index vanishes"))
        elif not analysis.schur:
            report.add(undefined("central_idempotent", "e(M) = index^{-1} z(M)",
                                 "endomorphism algebra is larger than the field"))
    else:
        report.add(skipped("frobenius-analysis", "module analysis through a form",
                           "no --lambda supplied"))
    return _emit(report, args)


def _load_bundle(name: str, field):
    bundle = ctor.irreducible_bundle(name, field)
    return bundle.hopf, list(bundle.modules), list(bundle.labels)


def cmd_g0_build(args, report: ReportDoc) -> int:
    cap = _max_dim()
    if args.bundle:
        field = parse_field_flag(args.field) if args.field else None
        H, modules, labels = _load_bundle(args.bundle, field)
        report.inputs.append({"path": f"bundle:{args.bundle}", "sha256": ""})
    else:
        if not args.inputs:
            raise SchemaError("g0 build needs a Hopf file and module files, or --bundle")
        hopf_doc = _read_input(args.inputs[0], report)
        H = hopf_from_json(hopf_doc, max_dim=cap)
        modules = []
        labels = []
        for path in args.inputs[1:]:
            doc = _read_input(path, report)
            entries = doc if isinstance(doc, list) else [doc]
            for t, entry in enumerate(entries):
                rep, label = module_from_json(
                    entry, loc=f"{path}[{t}].", algebra=H.algebra, max_dim=cap,
                    base_dir=os.path.dirname(path) or ".",
                )
                modules.append(rep)
                labels.append(label or f"V{len(labels)}")
    FR = build_g0(H, modules, labels=labels)
    report.add(
        fact("rank", "fusion ring rank", FR.rank),
        fact("dims", "dimension grades", list(FR.dims)),
        fact("global_dim", "sum of squared dimension grades", FR.global_dim),
        fact("dual", "duality permutation", list(FR.dual)),
        fact("valid", "based ring axioms verified", True),
    )
    report.extend(regular_class_checks(FR))
    doc = fusion_to_json(FR)
    report.artifacts["fusion"] = doc
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump_json(doc))
    return _emit(report, args)


def cmd_g0_spectrum(args, report: ReportDoc) -> int:
    FR = fusion_from_json(_read_input(args.fusion, report), max_dim=_max_dim())
    spec = adjoint_spectrum(FR)
    report.add(
        fact("eigenvalues", "integer eigenvalues of the adjoint class",
             spec.eigenvalues),
        fact("complete", "the characteristic polynomial splits over Z",
             spec.complete),
    )
    report.extend(spec.checks)
    return _emit(report, args)


def cmd_g0_ss_locus(args, report: ReportDoc) -> int:
    FR = fusion_from_json(_read_input(args.fusion, report), max_dim=_max_dim())
    res = ss_locus_mod_p(FR)
    report.add(fact("meet_generator",
                    "generator of the Casimir ideal meet the unit line",
                    res.meet_generator))
    for p in res.primes:
        report.add(fact(f"mod-{p}", "semisimplicity after reduction mod p",
                        res.semisimple[p]))
    report.extend(res.checks)
    return _emit(report, args)


def cmd_g0_class_eq(args, report: ReportDoc) -> int:
    FR = fusion_from_json(_read_input(args.fusion, report), max_dim=_max_dim())
    res = class_equation_check(FR)
    for t, row in enumerate(res.rows):
        report.add(fact(
            f"character-{t}",
            "integer character, its adjoint value, and the class-equation quotient",
            f"values={list(row.values)}, omega(z)={row.omega_z}, "
            f"quotient={row.quotient}",
        ))
    report.add(fact("unsplit_dimension",
                    "total dimension not split by integer eigenvalues",
                    res.unsplit_dimension))
    report.extend(res.checks)
    return _emit(report, args)


def cmd_zhu(args, report: ReportDoc) -> int:
    FR = fusion_from_json(_read_input(args.fusion, report), max_dim=_max_dim())
    rows, checks = zhu_divisibility(FR)
    for row in rows:
        if row.central:
            report.add(fact(
                f"class-{row.label}",
                "dimension of a central-character class divides the global dimension",
                f"dim={row.dim}, quotient={row.quotient}",
            ))
        else:
            report.add(skipped(
                f"class-{row.label}",
                "dimension of a central-character class divides the global dimension",
                "class not flagged central",
            ))
    report.extend(checks)
    return _emit(report, args)


def cmd_make(args, report: ReportDoc) -> int:
    name = args.name
    field = parse_field_flag(args.field) if args.field else None
    doc = None
    if name.startswith("M") and name[1:].isdigit():
        A, _ = ctor.matrix_algebra(int(name[1:]), field or FieldDescriptor.rationals())
        doc = algebra_to_json(A)
    elif name == "sweedler":
        doc = hopf_to_json(ctor.sweedler_h4(field or FieldDescriptor.rationals()))
    elif name.endswith("-irreps"):
        bundle = ctor.irreducible_bundle(name[: -len("-irreps")], field)
        doc = [
            module_to_json(M, label)
            for M, label in zip(bundle.modules, bundle.labels)
        ]
    elif name.startswith("dual-"):
        base = name[len("dual-"):]
        table = _group_table(base)
        D, _likes = ctor.dual_group_hopf(table, field or FieldDescriptor.rationals())
        doc = hopf_to_json(D)
    else:
        table = _group_table(name)
        doc = hopf_to_json(ctor.group_hopf(table, field or FieldDescriptor.rationals()))
    text = dump_json(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _group_table(name: str):
    if name == "S3":
        return ctor.group_from_generators([(1, 0, 2), (1, 2, 0)])
    if name == "S4":
        return ctor.group_from_generators([(1, 0, 2, 3), (1, 2, 3, 0)])
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise SchemaError("cyclic order must be positive")
        cycle = tuple((i + 1) % n for i in range(n)) if n > 1 else (0,)
        return ctor.group_from_generators([cycle])
    raise SchemaError(f"unknown constructor name {name!r}; "
                      "use S3, S4, C<n>, dual-<name>, M<n>, sweedler, <name>-irreps")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown"), default="json",
                        help="report format (default json)")
    common.add_argument("-o", "--output", default=None,
                        help="write the artifact (make, g0 build) or report here")
    common.add_argument("--timings", action="store_true", default=False,
                        help="include wall-clock timings (breaks byte determinism)")
    parser = argparse.ArgumentParser(
        prog="falab",
        description="exact Frobenius/Hopf/fusion algebra checks",
    )
    parser.add_argument("--version", action="version", version=f"falab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="validate a description file")
    p.add_argument("file")

    p = sub.add_parser("frobenius", parents=[common],
                       help="analyze a functional on an algebra")
    p.add_argument("algebra")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="functional values, comma separated or a JSON list")

    p = sub.add_parser("integrals", parents=[common],
                       help="integrals and separability of a Hopf algebra")
    p.add_argument("hopf")

    p = sub.add_parser("hopf-report", parents=[common],
                       help="full predicate and symmetry report")
    p.add_argument("hopf")

    p = sub.add_parser("module-report", parents=[common],
                       help="validate and analyze a module")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--lambda", dest="lam", default=None,
                   help="optional functional for the Frobenius stages")

    g0 = sub.add_parser("g0", help="fusion ring commands")
    g0sub = g0.add_subparsers(dest="g0_command", required=True)

    p = g0sub.add_parser("build", parents=[common],
                         help="build the fusion ring of a Hopf algebra")
    p.add_argument("inputs", nargs="*",
                   help="Hopf file followed by module files (single or list)")
    p.add_argument("--bundle", default=None,
                   help="use a built-in bundle (S3, S4, C<n>) instead of files")
    p.add_argument("--field", default=None, help="field for --bundle")

    for sub_name, help_text in (
        ("spectrum", "adjoint class spectrum"),
        ("ss-locus", "semisimplicity locus over prime fields"),
        ("class-eq", "integer characters and the class equation"),
    ):
        p = g0sub.add_parser(sub_name, parents=[common], help=help_text)
        p.add_argument("fusion")

    p = sub.add_parser("zhu", parents=[common],
                       help="dimension divisibility for central-character classes")
    p.add_argument("fusion")

    p = sub.add_parser("make", parents=[common],
                       help="write a built-in example structure")
    p.add_argument("name")
    p.add_argument("--field", default=None, help="Q, Fp:<p>, or cyclo:<n>")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if command == "g0":
        command = f"g0-{args.g0_command}"
        args.command = command
    args._started = time.monotonic()
    report = ReportDoc(tool="falab", version=__version__, command=command)
    handlers = {
        "check": cmd_check,
        "frobenius": cmd_frobenius,
        "integrals": cmd_integrals,
        "hopf-report": cmd_hopf_report,
        "module-report": cmd_module_report,
        "g0-build": cmd_g0_build,
        "g0-spectrum": cmd_g0_spectrum,
        "g0-ss-locus": cmd_g0_ss_locus,
        "g0-class-eq": cmd_g0_class_eq,
        "zhu": cmd_zhu,
        "make": cmd_make,
    }
    try:
        return handlers[command](args, report)
    except CorruptionError as exc:
        report.add(Check("corruption", "internal cross-check", FAIL, witness=str(exc)))
        _emit(report, args)
        return 1
    except SchemaError as exc:
        print(f"falab: invalid input: {exc}", file=sys.stderr)
        return 2
    except FalabError as exc:
        print(f"falab: invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
