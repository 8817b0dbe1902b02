"""JSON description files for algebras, Hopf algebras, modules, fusion rings.

Formats (all indices 0-based, omitted tensor entries zero):

* field:   {"kind": "Q"} | {"kind": "Fp", "p": 3} | {"kind": "cyclo", "n": 4}
* scalar:  "p/q" (rationals, "/q" omitted when 1), "r" (prime residues),
           ["c0", "c1", ...] (cyclotomic coefficients, lowest degree first)
* algebra: {"field", "dim", "labels", "unit": [scalar], "mul": [[i,j,k,scalar]]}
* hopf:    algebra keys + {"comul": [[i,j,k,scalar]], "counit": [scalar],
           "antipode": [[scalar row] per matrix row]}
* module:  {"algebra": <inline algebra or path string>, "dim": m,
           "matrices": [per basis element, m x m scalar grid], "label"?}
* fusion:  {"rank", "labels", "dims", "dual", "unit", "N": [[i,j,k,count]],
           "chi_central"? : [bool]}

Loaders raise ``SchemaError`` with a location path into the document.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

from .algebra import AlgebraSpec
from .errors import FalabError, InvalidInput, SchemaError
from .fields import FieldDescriptor, Scalar, scalar_from_text, scalar_to_text
from .fusion import FusionRing
from .hopf import HopfSpec
from .linalg import MatrixE
from .representations import Representation, check_representation


def field_to_json(field: FieldDescriptor) -> dict:
    if field.kind == "Q":
        return {"kind": "Q"}
    if field.kind == "Fp":
        return {"kind": "Fp", "p": field.p}
    return {"kind": "cyclo", "n": field.n}


def field_from_json(doc, loc: str = "field") -> FieldDescriptor:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaError("expected a field object with a 'kind'", loc)
    kind = doc["kind"]
    try:
        if kind == "Q":
            return FieldDescriptor.rationals()
        if kind == "Fp":
            return FieldDescriptor.prime_field(int(doc["p"]))
        if kind == "cyclo":
            return FieldDescriptor.cyclotomic(int(doc["n"]))
    except (KeyError, ValueError, TypeError, InvalidInput) as exc:
        raise SchemaError(str(exc), loc) from exc
    raise SchemaError(f"unknown field kind {kind!r}", loc)


def parse_field_flag(text: str) -> FieldDescriptor:
    """Parse the CLI field syntax Q | Fp:<p> | cyclo:<n>."""
    if text == "Q":
        return FieldDescriptor.rationals()
    if text.startswith("Fp:"):
        return FieldDescriptor.prime_field(int(text[3:]))
    if text.startswith("cyclo:"):
        return FieldDescriptor.cyclotomic(int(text[6:]))
    raise SchemaError(f"cannot parse field {text!r}; use Q, Fp:<p>, or cyclo:<n>")


def _scalar(field: FieldDescriptor, value, loc: str) -> Scalar:
    try:
        return scalar_from_text(field, value)
    except (InvalidInput, ValueError) as exc:
        raise SchemaError(str(exc), loc) from exc


def _check_dim(dim: int, max_dim: "int | None", loc: str) -> None:
    if max_dim is not None and dim > max_dim:
        raise SchemaError(f"dimension {dim} exceeds the configured cap {max_dim}", loc)


def algebra_to_json(A: AlgebraSpec) -> dict:
    mul = []
    for i in range(A.dim):
        for j in range(A.dim):
            for (k, c) in A._sparse[i][j]:
                mul.append([i, j, k, scalar_to_text(c)])
    return {
        "field": field_to_json(A.field),
        "dim": A.dim,
        "labels": list(A.labels),
        "unit": [scalar_to_text(c) for c in A.unit],
        "mul": mul,
    }


def algebra_from_json(doc, loc: str = "", max_dim: "int | None" = None) -> AlgebraSpec:
    if not isinstance(doc, dict):
        raise SchemaError("expected an algebra object", loc or ".")
    for key in ("field", "dim", "unit", "mul"):
        if key not in doc:
            raise SchemaError(f"missing key '{key}'", loc or ".")
    field = field_from_json(doc["field"], f"{loc}field")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("'dim' must be a positive integer", f"{loc}dim")
    _check_dim(dim, max_dim, f"{loc}dim")
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != dim
    ):
        raise SchemaError("'labels' must list one name per basis vector", f"{loc}labels")
    unit = doc["unit"]
    if not isinstance(unit, list) or len(unit) != dim:
        raise SchemaError("'unit' must be a scalar list of length dim", f"{loc}unit")
    unit_s = [_scalar(field, v, f"{loc}unit[{i}]") for i, v in enumerate(unit)]
    triples = []
    if not isinstance(doc["mul"], list):
        raise SchemaError("'mul' must be a list of [i,j,k,scalar] entries", f"{loc}mul")
    for t, entry in enumerate(doc["mul"]):
        where = f"{loc}mul[{t}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError("entry must be [i, j, k, scalar]", where)
        i, j, k, val = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
            raise SchemaError("indices out of range", where)
        triples.append((i, j, k, _scalar(field, val, where)))
    try:
        return AlgebraSpec.from_triples(field, dim, triples, unit_s, labels)
    except FalabError as exc:
        raise SchemaError(str(exc), loc or ".") from exc


def hopf_to_json(H: HopfSpec) -> dict:
    doc = algebra_to_json(H.algebra)
    comul = []
    for i in range(H.dim):
        for (j, k, c) in H._comul_sparse[i]:
            comul.append([i, j, k, scalar_to_text(c)])
    doc["comul"] = comul
    doc["counit"] = [scalar_to_text(c) for c in H.counit]
    doc["antipode"] = [[scalar_to_text(c) for c in row] for row in H.antipode.rows]
    return doc


def hopf_from_json(doc, loc: str = "", max_dim: "int | None" = None) -> HopfSpec:
    A = algebra_from_json(doc, loc, max_dim)
    for key in ("comul", "counit", "antipode"):
        if key not in doc:
            raise SchemaError(f"missing key '{key}'", f"{loc}{key}")
    field = A.field
    dim = A.dim
    triples = []
    for t, entry in enumerate(doc["comul"]):
        where = f"{loc}comul[{t}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError("entry must be [i, j, k, scalar]", where)
        i, j, k, val = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
            raise SchemaError("indices out of range", where)
        triples.append((i, j, k, _scalar(field, val, where)))
    counit = doc["counit"]
    if not isinstance(counit, list) or len(counit) != dim:
        raise SchemaError("'counit' must be a scalar list of length dim", f"{loc}counit")
    counit_s = [_scalar(field, v, f"{loc}counit[{i}]") for i, v in enumerate(counit)]
    anti = doc["antipode"]
    if (
        not isinstance(anti, list)
        or len(anti) != dim
        or any(not isinstance(r, list) or len(r) != dim for r in anti)
    ):
        raise SchemaError("'antipode' must be a dim x dim scalar grid", f"{loc}antipode")
    rows = [
        [_scalar(field, v, f"{loc}antipode[{i}][{j}]") for j, v in enumerate(r)]
        for i, r in enumerate(anti)
    ]
    try:
        return HopfSpec.from_comul_triples(A, triples, counit_s, MatrixE(field, rows))
    except FalabError as exc:
        raise SchemaError(str(exc), loc or ".") from exc


def module_to_json(M: Representation, label: "str | None" = None) -> dict:
    doc = {
        "algebra": algebra_to_json(M.algebra),
        "dim": M.dim,
        "matrices": [
            [[scalar_to_text(c) for c in row] for row in mat.rows]
            for mat in M.matrices
        ],
    }
    if label:
        doc["label"] = label
    return doc


def module_from_json(
    doc,
    loc: str = "",
    base_dir: str = ".",
    algebra: "AlgebraSpec | None" = None,
    max_dim: "int | None" = None,
) -> "tuple[Representation, str | None]":
    """Load a module; returns (representation, optional label).

    When ``algebra`` is supplied the document's algebra must match it
    structurally and the module is bound to the supplied instance.
    """
    if not isinstance(doc, dict):
        raise SchemaError("expected a module object", loc or ".")
    for key in ("algebra", "dim", "matrices"):
        if key not in doc:
            raise SchemaError(f"missing key '{key}'", f"{loc}{key}")
    alg_doc = doc["algebra"]
    if isinstance(alg_doc, str):
        path = os.path.join(base_dir, alg_doc)
        alg_doc = load_document(path)
    own = algebra_from_json(alg_doc, f"{loc}algebra.", max_dim)
    if algebra is not None:
        if own != algebra:
            raise SchemaError("module algebra differs from the ambient algebra",
                              f"{loc}algebra")
        own = algebra
    m = doc["dim"]
    if not isinstance(m, int) or m < 1:
        raise SchemaError("'dim' must be a positive integer", f"{loc}dim")
    _check_dim(m, max_dim, f"{loc}dim")
    mats_doc = doc["matrices"]
    if not isinstance(mats_doc, list) or len(mats_doc) != own.dim:
        raise SchemaError("'matrices' must list one grid per basis element",
                          f"{loc}matrices")
    mats = []
    for t, grid in enumerate(mats_doc):
        where = f"{loc}matrices[{t}]"
        if (
            not isinstance(grid, list)
            or len(grid) != m
            or any(not isinstance(r, list) or len(r) != m for r in grid)
        ):
            raise SchemaError(f"grid must be {m} x {m}", where)
        rows = [
            [_scalar(own.field, v, f"{where}[{i}][{j}]") for j, v in enumerate(r)]
            for i, r in enumerate(grid)
        ]
        mats.append(MatrixE(own.field, rows))
    try:
        rep = check_representation(own, mats)
    except FalabError as exc:
        raise SchemaError(str(exc), loc or ".") from exc
    label = doc.get("label")
    return rep, label


def fusion_to_json(FR: FusionRing) -> dict:
    N = []
    for i in range(FR.rank):
        for j in range(FR.rank):
            for k in range(FR.rank):
                if FR.tensor[i][j][k]:
                    N.append([i, j, k, FR.tensor[i][j][k]])
    return {
        "rank": FR.rank,
        "labels": list(FR.labels),
        "dims": list(FR.dims),
        "dual": list(FR.dual),
        "unit": FR.unit,
        "N": N,
        "chi_central": list(FR.chi_central),
    }


def fusion_from_json(doc, loc: str = "", max_dim: "int | None" = None) -> FusionRing:
    if not isinstance(doc, dict):
        raise SchemaError("expected a fusion ring object", loc or ".")
    for key in ("rank", "labels", "dims", "dual", "unit", "N"):
        if key not in doc:
            raise SchemaError(f"missing key '{key}'", f"{loc}{key}")
    rank = doc["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise SchemaError("'rank' must be a positive integer", f"{loc}rank")
    _check_dim(rank, max_dim, f"{loc}rank")
    tensor = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for t, entry in enumerate(doc["N"]):
        where = f"{loc}N[{t}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError("entry must be [i, j, k, count]", where)
        i, j, k, val = entry
        if not all(isinstance(x, int) and 0 <= x < rank for x in (i, j, k)):
            raise SchemaError("indices out of range", where)
        if not isinstance(val, int):
            raise SchemaError("multiplicity must be an integer", where)
        tensor[i][j][k] += val
    try:
        return FusionRing(
            rank=rank,
            labels=doc["labels"],
            dims=doc["dims"],
            tensor=tensor,
            dual=doc["dual"],
            unit=doc["unit"],
            chi_central=doc.get("chi_central"),
        )
    except FalabError as exc:
        raise SchemaError(str(exc), loc or ".") from exc


def load_document(path: str):
    try:
        if path == "-":
            import sys

            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}", path) from exc
    except OSError as exc:
        raise SchemaError(str(exc), path) from exc


def detect_kind(doc) -> str:
    if not isinstance(doc, dict):
        if isinstance(doc, list):
            return "module-list"
        raise SchemaError("top-level document must be an object or a list")
    if "comul" in doc:
        return "hopf"
    if "N" in doc:
        return "fusion"
    if "matrices" in doc:
        return "module"
    if "mul" in doc:
        return "algebra"
    raise SchemaError("cannot recognize the document kind")


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
