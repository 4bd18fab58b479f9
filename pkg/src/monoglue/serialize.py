"""JSON documents for every value the command line reads or writes.

Rationals travel as strings (``"3"``, ``"-1/2"``), never as JSON numbers;
matrices are arrays of rows.  A matrix with no rows or no columns may be
written as ``[]``.  Filtrations are arrays of ``{"index": k, "basis": [...]}``
where ``basis`` lists spanning vectors of the subspace at that index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import Malformed, MonoglueError, ValidationFailed
from .exactlin import Matrix, format_rational, to_rational
from .gluecat import GlueMorphism, GlueObject
from .hodge import HodgeGlueObject, MixedHodgeStructure, mhs_validate
from .sheafdict import LocalSystem

KINDS = ("glue_object", "glue_morphism", "local_system", "mhs", "hodge_glue_object")


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any


# -- encoding ----------------------------------------------------------------------


def encode_matrix(A: Matrix) -> list:
    if A.rows == 0 or A.cols == 0:
        return []
    return [[format_rational(x) for x in row] for row in A.tolist()]


def encode_glue_object(X: GlueObject) -> dict:
    return {"kind": "glue_object", "psi_dim": X.psi_dim, "phi_dim": X.phi_dim,
            "can": encode_matrix(X.can), "var": encode_matrix(X.var)}


def encode_glue_morphism(m: GlueMorphism) -> dict:
    return {"kind": "glue_morphism", "source": encode_glue_object(m.source),
            "target": encode_glue_object(m.target),
            "f": encode_matrix(m.f), "g": encode_matrix(m.g)}


def encode_local_system(L: LocalSystem) -> dict:
    return {"kind": "local_system", "rank": L.rank, "T": encode_matrix(L.T)}


def _encode_filtration(filt) -> list:
    return [{"index": k, "basis": [[format_rational(x) for x in col] for col in S.columns()]}
            for k, S in filt.steps]


def encode_mhs(M: MixedHodgeStructure) -> dict:
    return {"kind": "mhs", "dim": M.dim,
            "weight": _encode_filtration(M.weight), "hodge": _encode_filtration(M.hodge)}


def encode_hodge_glue_object(X: HodgeGlueObject) -> dict:
    return {"kind": "hodge_glue_object", "psi": encode_mhs(X.psi), "phi": encode_mhs(X.phi),
            "can": encode_matrix(X.can), "var": encode_matrix(X.var)}


_ENCODERS = {
    GlueObject: encode_glue_object,
    GlueMorphism: encode_glue_morphism,
    LocalSystem: encode_local_system,
    MixedHodgeStructure: encode_mhs,
    HodgeGlueObject: encode_hodge_glue_object,
}


def encode(value) -> dict:
    try:
        return _ENCODERS[type(value)](value)
    except KeyError:
        raise TypeError(f"no document kind for {type(value).__name__}") from None


def dumps(doc) -> str:
    """Deterministic text for a JSON-compatible value (trailing newline included)."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def serialize(value) -> bytes:
    return dumps(encode(value)).encode("utf-8")


# -- decoding ----------------------------------------------------------------------


def _get(obj: dict, key: str, path: str):
    if not isinstance(obj, dict):
        raise Malformed(f"{path}: expected an object")
    if key not in obj:
        raise Malformed(f"{path}: missing field '{key}'")
    return obj[key]


def _nonneg_int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise Malformed(f"{path}: expected a nonnegative integer, got {v!r}")
    return v


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise Malformed(f"{path}: expected an integer, got {v!r}")
    return v


def _rational(v, path: str):
    if not isinstance(v, str):
        raise Malformed(f"{path}: rationals must be strings like \"p/q\", got {v!r}")
    try:
        return to_rational(v)
    except (ValueError, ZeroDivisionError):
        raise Malformed(f"{path}: not a rational literal: {v!r}") from None


def decode_matrix(data, rows: int, cols: int, path: str) -> Matrix:
    if not isinstance(data, list):
        raise Malformed(f"{path}: expected an array of rows")
    if data == [] and (rows == 0 or cols == 0):
        return Matrix.zeros(rows, cols)
    if len(data) != rows:
        raise Malformed(f"{path}: expected {rows} rows, got {len(data)}")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise Malformed(f"{path}[{i}]: expected a row of length {cols}")
        out.append([_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(rows, cols, out)


def _decode_glue_object(d: dict, path: str) -> GlueObject:
    psi = _nonneg_int(_get(d, "psi_dim", path), f"{path}.psi_dim")
    phi = _nonneg_int(_get(d, "phi_dim", path), f"{path}.phi_dim")
    can = decode_matrix(_get(d, "can", path), phi, psi, f"{path}.can")
    var = decode_matrix(_get(d, "var", path), psi, phi, f"{path}.var")
    return _validated(lambda: GlueObject(psi, phi, can, var))


def _decode_glue_morphism(d: dict, path: str) -> GlueMorphism:
    X = _decode_glue_object(_get(d, "source", path), f"{path}.source")
    Y = _decode_glue_object(_get(d, "target", path), f"{path}.target")
    f = decode_matrix(_get(d, "f", path), Y.psi_dim, X.psi_dim, f"{path}.f")
    g = decode_matrix(_get(d, "g", path), Y.phi_dim, X.phi_dim, f"{path}.g")
    return _validated(lambda: GlueMorphism(X, Y, f, g))


def _decode_local_system(d: dict, path: str) -> LocalSystem:
    r = _nonneg_int(_get(d, "rank", path), f"{path}.rank")
    if r == 0:
        raise Malformed(f"{path}.rank: a local system has positive rank")
    T = decode_matrix(_get(d, "T", path), r, r, f"{path}.T")
    return _validated(lambda: LocalSystem(r, T))


def _decode_filtration(data, dim: int, path: str):
    if not isinstance(data, list):
        raise Malformed(f"{path}: expected an array of {{index, basis}} entries")
    entries = []
    for i, e in enumerate(data):
        p = f"{path}[{i}]"
        k = _int(_get(e, "index", p), f"{p}.index")
        basis = _get(e, "basis", p)
        if not isinstance(basis, list):
            raise Malformed(f"{p}.basis: expected an array of vectors")
        cols = []
        for j, v in enumerate(basis):
            if not isinstance(v, list) or len(v) != dim:
                raise Malformed(f"{p}.basis[{j}]: expected a vector of length {dim}")
            cols.append([_rational(x, f"{p}.basis[{j}][{c}]") for c, x in enumerate(v)])
        entries.append((k, Matrix.from_columns(cols, dim)))
    return entries


def _decode_mhs(d: dict, path: str) -> MixedHodgeStructure:
    dim = _nonneg_int(_get(d, "dim", path), f"{path}.dim")
    weight = _decode_filtration(_get(d, "weight", path), dim, f"{path}.weight")
    hodge = _decode_filtration(_get(d, "hodge", path), dim, f"{path}.hodge")
    return _validated(lambda: mhs_validate(dim, weight, hodge))


def _decode_hodge_glue_object(d: dict, path: str) -> HodgeGlueObject:
    psi = _decode_mhs(_get(d, "psi", path), f"{path}.psi")
    phi = _decode_mhs(_get(d, "phi", path), f"{path}.phi")
    can = decode_matrix(_get(d, "can", path), phi.dim, psi.dim, f"{path}.can")
    var = decode_matrix(_get(d, "var", path), psi.dim, phi.dim, f"{path}.var")
    return _validated(lambda: HodgeGlueObject(psi, phi, can, var))


def _validated(build):
    try:
        return build()
    except Malformed:
        raise
    except MonoglueError as exc:
        raise ValidationFailed(exc) from exc


_DECODERS = {
    "glue_object": _decode_glue_object,
    "glue_morphism": _decode_glue_morphism,
    "local_system": _decode_local_system,
    "mhs": _decode_mhs,
    "hodge_glue_object": _decode_hodge_glue_object,
}


def decode(obj, path: str = "$") -> Document:
    kind = _get(obj, "kind", path)
    if kind not in _DECODERS:
        raise Malformed(f"{path}.kind: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return Document(kind, _DECODERS[kind](obj, path))


def load_json(document: bytes | str):
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise Malformed(f"input is not UTF-8: {exc}") from None
    try:
        return json.loads(document)
    except json.JSONDecodeError as exc:
        raise Malformed(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse(document: bytes | str) -> Document:
    return decode(load_json(document))
