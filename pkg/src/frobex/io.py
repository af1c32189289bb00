"""JSON interchange for Frobenius, extended Frobenius and Hopf data.

Scalars are written as polynomial strings in z (a primitive N-th root of
unity) and the conductor N is stored once per document. Output is
deterministic: fixed key order, two-space indent, trailing newline.
"""

import json
from typing import Any, Dict, List, Optional

from .errors import FieldMismatchError, FrobexParseError, ShapeError
from .extended import CandidateLattice, ExtFrobAlgebra, make_ext
from .frobenius import FrobAlgebra
from .hopf import HopfAlgebra
from .linalg import Mat, Vec
from .scalars import CycField, embed, field_make, parse_poly

FORMAT_VERSION = 1


def _mat(M: Mat) -> List[List[str]]:
    return M.to_strings()


def _vec(v: Vec) -> List[str]:
    return v.to_strings()


def frob_to_dict(fa: FrobAlgebra) -> Dict[str, Any]:
    return {
        "kind": "frobenius",
        "version": FORMAT_VERSION,
        "conductor": fa.field.conductor,
        "dim": fa.dim,
        "labels": list(fa.labels),
        "m": _mat(fa.m),
        "u": _vec(fa.u),
        "delta": _mat(fa.delta),
        "eps": _mat(fa.eps),
    }


def ext_to_dict(e: ExtFrobAlgebra) -> Dict[str, Any]:
    d = frob_to_dict(e.frob)
    d["kind"] = "extended"
    d["name"] = e.name
    d["phi"] = _mat(e.phi)
    d["theta"] = _vec(e.theta)
    return d


def hopf_to_dict(h: HopfAlgebra) -> Dict[str, Any]:
    return {
        "kind": "hopf",
        "version": FORMAT_VERSION,
        "conductor": h.field.conductor,
        "dim": h.dim,
        "labels": list(h.labels),
        "m": _mat(h.m),
        "u": _vec(h.u),
        "delta_h": _mat(h.delta_h),
        "eps_h": _mat(h.eps_h),
        "S": _mat(h.S),
        "S_inv": _mat(h.S_inv),
        "Lambda": _vec(h.Lambda),
        "lambda": _mat(h.lam),
    }


def dumps(obj: Any) -> str:
    """Deterministic JSON text for a dict, algebra or report."""
    if isinstance(obj, ExtFrobAlgebra):
        obj = ext_to_dict(obj)
    elif isinstance(obj, FrobAlgebra):
        obj = frob_to_dict(obj)
    elif isinstance(obj, HopfAlgebra):
        obj = hopf_to_dict(obj)
    elif hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return _format(obj, 0) + "\n"


def _flat(x) -> bool:
    return not isinstance(x, (list, dict))


def _format(obj, level: int) -> str:
    """Indented JSON where lists of scalars stay on one line."""
    pad = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_format(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(obj, (list, tuple)):
        if all(_flat(x) for x in obj):
            return json.dumps(list(obj), ensure_ascii=False)
        items = [pad + _format(x, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(obj, ensure_ascii=False)


# -- parsing ----------------------------------------------------------------


class _Reader:
    """Field-aware reader that reports the JSON path of malformed entries."""

    def __init__(self, doc: Dict[str, Any], text: str, field: Optional[CycField]):
        self.doc = doc
        self.text = text
        if not isinstance(doc, dict):
            raise FrobexParseError("top-level JSON value must be an object", text, 0)
        conductor = doc.get("conductor", field.conductor if field else None)
        if conductor is None:
            raise FrobexParseError("missing 'conductor'", text, 0)
        if not isinstance(conductor, int) or isinstance(conductor, bool):
            raise FrobexParseError("'conductor' must be an integer", text, self._pos("conductor"))
        self.source = field if field is not None and field.conductor == conductor else field_make(conductor)
        if field is not None and field.conductor % conductor:
            raise FieldMismatchError(f"document conductor {conductor} does not divide {field.conductor}")
        self.field = field or self.source

    def _pos(self, key: str) -> int:
        p = self.text.find(f'"{key}"')
        return max(p, 0)

    def need(self, key):
        if key not in self.doc:
            raise FrobexParseError(f"missing field {key!r}", self.text, 0)
        return self.doc[key]

    def scalar(self, raw, path: str, key: str):
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise FrobexParseError(f"{path}: scalar must be a string or integer", self.text, self._pos(key))
        try:
            value = parse_poly(str(raw), self.source)
        except FrobexParseError as exc:
            start = self.text.find(json.dumps(raw), self._pos(key))
            pos = start + 1 + exc.position if start >= 0 else self._pos(key)
            raise FrobexParseError(f"{path}: {exc.message}", self.text, pos) from None
        return value if self.source is self.field else embed(value, self.field)

    def matrix(self, key: str, rows: int, cols: int) -> Mat:
        raw = self.need(key)
        if not isinstance(raw, list) or len(raw) != rows:
            raise ShapeError(f"{key} must have {rows} rows")
        out = []
        for i, r in enumerate(raw):
            if not isinstance(r, list) or len(r) != cols:
                raise ShapeError(f"{key}[{i}] must have {cols} entries")
            out.append([self.scalar(x, f"{key}[{i}][{j}]", key) for j, x in enumerate(r)])
        return Mat.from_rows(self.field, out, cols)

    def vector(self, key: str, n: int) -> Vec:
        raw = self.need(key)
        if not isinstance(raw, list) or len(raw) != n:
            raise ShapeError(f"{key} must have length {n}")
        return Vec(self.field, [self.scalar(x, f"{key}[{i}]", key) for i, x in enumerate(raw)])

    def dim(self) -> int:
        d = self.need("dim")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise FrobexParseError("'dim' must be a non-negative integer", self.text, self._pos("dim"))
        return d


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrobexParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None


def _frob(r: _Reader) -> FrobAlgebra:
    d = r.dim()
    labels = tuple(r.doc.get("labels") or ())
    return FrobAlgebra.build(
        r.field,
        r.matrix("m", d, d * d),
        r.vector("u", d),
        r.matrix("delta", d * d, d),
        r.matrix("eps", 1, d),
        labels,
    )


def frob_from_dict(doc, text: str = "", field: Optional[CycField] = None) -> FrobAlgebra:
    return _frob(_Reader(doc, text, field))


def ext_from_dict(doc, text: str = "", field: Optional[CycField] = None) -> ExtFrobAlgebra:
    r = _Reader(doc, text, field)
    fa = _frob(r)
    d = fa.dim
    return make_ext(fa, r.matrix("phi", d, d), r.vector("theta", d), doc.get("name", ""))


def hopf_from_dict(doc, text: str = "", field: Optional[CycField] = None) -> HopfAlgebra:
    r = _Reader(doc, text, field)
    d = r.dim()
    return HopfAlgebra(
        r.field,
        d,
        r.matrix("m", d, d * d),
        r.vector("u", d),
        r.matrix("delta_h", d * d, d),
        r.matrix("eps_h", 1, d),
        r.matrix("S", d, d),
        r.matrix("S_inv", d, d),
        r.vector("Lambda", d),
        r.matrix("lambda", 1, d),
        tuple(doc.get("labels") or ()),
    )


def detect_kind(doc: Dict[str, Any]) -> str:
    if "kind" in doc:
        return doc["kind"]
    if "S" in doc:
        return "hopf"
    if "phi" in doc:
        return "extended"
    return "frobenius"


def loads(text: str, field: Optional[CycField] = None):
    """Parse a document of any supported kind."""
    doc = _load(text)
    if not isinstance(doc, dict):
        raise FrobexParseError("top-level JSON value must be an object", text, 0)
    kind = detect_kind(doc)
    readers = {"frobenius": frob_from_dict, "extended": ext_from_dict, "hopf": hopf_from_dict}
    if kind not in readers:
        raise FrobexParseError(f"unknown kind {kind!r}", text, 0)
    return readers[kind](doc, text, field)


def load(path: str, field: Optional[CycField] = None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), field)


def load_lattice(path: str, field: Optional[CycField] = None) -> CandidateLattice:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return CandidateLattice.from_dict(_load(text), field)


__all__ = [
    "frob_to_dict", "ext_to_dict", "hopf_to_dict", "dumps", "loads", "load",
    "frob_from_dict", "ext_from_dict", "hopf_from_dict", "detect_kind", "load_lattice",
]
