"""Stable JSON schema for every domain object.

Scalars travel as strings ``"p"`` or ``"p/q"`` in lowest terms so no
floating-point representation can creep in.  Matrices are row-major lists
of lists carrying a mandatory ``"convention"`` field (columns are images of
basis vectors) to prevent silent transposition; structure-constant cubes
are triple-nested lists indexed ``[i][j][k]``.

``parse`` validates strictly -- unknown fields, non-canonical scalars and
dimension mismatches are rejected with a JSON-pointer style path --
and ``serialize`` emits the canonical form (stable key order,
lowest-term scalars), so ``serialize o parse`` canonicalizes and
``parse o serialize`` is the identity.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .discovery import (
    AlgebraMapPairTarget,
    AybeTarget,
    DerivationTarget,
    RBTarget,
    SearchSpec,
)
from .exactlin import (
    BilinearOp,
    CheckVerdict,
    Comultiplication,
    LinearMap,
    Tensor2,
)
from .structures import (
    AlphaBetaRB,
    AlphaPowerDerivation,
    AlphaPowerRB,
    BiHomAlgebra,
    BiHomDendriform,
    BraceRB,
    HomAlgebra,
    HomCoalgebra,
    HomLie,
    HomPreLie,
    InfHomBialgebra,
    LieAlphaPowerRB,
    ParenRB,
    TauSigmaDerivation,
)

SCHEMA_VERSION = "1"
CONVENTION = "columns-are-images"

KINDS = ("algebra", "bihom-algebra", "hom-coalgebra", "inf-hom-bialgebra",
         "dendriform", "hom-prelie", "hom-lie", "linear-map", "tensor2",
         "search-spec", "report")

_SCALAR_RE = re.compile(r"^(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


class DocumentError(ValueError):
    """Schema violation; carries the JSON-pointer path of the offender."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: dict


# ---------------------------------------------------------------------------
# Scalar and grid primitives
# ---------------------------------------------------------------------------

def parse_scalar(value, path: str) -> Fraction:
    if not isinstance(value, str):
        raise DocumentError(path, f"scalar must be a string, got {type(value).__name__}")
    m = _SCALAR_RE.match(value)
    if not m:
        raise DocumentError(path, f"malformed scalar {value!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) else 1
    if math.gcd(abs(p), q) != 1:
        raise DocumentError(path, f"scalar {value!r} is not in lowest terms")
    return Fraction(p, q)


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _expect(obj, typ, path: str, what: str):
    if not isinstance(obj, typ):
        raise DocumentError(path, f"expected {what}, got {type(obj).__name__}")
    return obj


def _parse_vector(value, dim: int, path: str) -> tuple[Fraction, ...]:
    _expect(value, list, path, "a list")
    if len(value) != dim:
        raise DocumentError(path, f"expected length {dim}, got {len(value)}")
    return tuple(parse_scalar(v, f"{path}/{i}") for i, v in enumerate(value))


def _parse_matrix(value, dim_out: int, dim_in: int, path: str, convention=True):
    _expect(value, dict, path, "a matrix object")
    keys = {"convention", "entries"}
    _reject_unknown(value, keys, path)
    if "convention" not in value:
        raise DocumentError(f"{path}/convention", "missing mandatory field")
    if value["convention"] != CONVENTION:
        raise DocumentError(f"{path}/convention",
                            f"must be {CONVENTION!r}, got {value['convention']!r}")
    entries = value.get("entries")
    _expect(entries, list, f"{path}/entries", "a list of rows")
    if len(entries) != dim_out:
        raise DocumentError(f"{path}/entries",
                            f"expected {dim_out} rows, got {len(entries)}")
    rows = tuple(_parse_vector(row, dim_in, f"{path}/entries/{i}")
                 for i, row in enumerate(entries))
    return LinearMap(rows)


def _matrix_obj(m: LinearMap) -> dict:
    return {"convention": CONVENTION,
            "entries": [[format_scalar(x) for x in row] for row in m.entries]}


def _parse_cube(value, dim: int, path: str):
    _expect(value, list, path, "a cube")
    if len(value) != dim:
        raise DocumentError(path, f"expected {dim} planes, got {len(value)}")
    planes = []
    for i, plane in enumerate(value):
        _expect(plane, list, f"{path}/{i}", "a list of rows")
        if len(plane) != dim:
            raise DocumentError(f"{path}/{i}",
                                f"expected {dim} rows, got {len(plane)}")
        planes.append(tuple(_parse_vector(row, dim, f"{path}/{i}/{j}")
                            for j, row in enumerate(plane)))
    return tuple(planes)


def _cube_obj(cube) -> list:
    return [[[format_scalar(x) for x in row] for row in plane] for plane in cube]


def _grid_obj(grid) -> list:
    return [[format_scalar(x) for x in row] for row in grid]


def _reject_unknown(obj: dict, allowed: set, path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise DocumentError(f"{path}/{key}", "unknown field")


def _parse_dim(payload: dict, path: str) -> int:
    dim = payload.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError(f"{path}/dim", "must be a positive integer")
    return dim


# ---------------------------------------------------------------------------
# Payload schemas
# ---------------------------------------------------------------------------

def _parse_algebra(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "mu", "unit"}, path)
    dim = _parse_dim(p, path)
    mu = BilinearOp(_parse_cube(p.get("mu"), dim, f"{path}/mu"))
    unit = None
    if "unit" in p:
        unit = _parse_vector(p["unit"], dim, f"{path}/unit")
    return {"mu": mu, "unit": unit}


def _parse_bihom(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "mu", "alpha", "beta", "unit"}, path)
    dim = _parse_dim(p, path)
    out = {
        "mu": BilinearOp(_parse_cube(p.get("mu"), dim, f"{path}/mu")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
        "beta": _parse_matrix(p.get("beta"), dim, dim, f"{path}/beta"),
        "unit": None,
    }
    if "unit" in p:
        out["unit"] = _parse_vector(p["unit"], dim, f"{path}/unit")
    return out


def _parse_hom_coalgebra(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "delta", "alpha"}, path)
    dim = _parse_dim(p, path)
    return {
        "delta": Comultiplication(_parse_cube(p.get("delta"), dim, f"{path}/delta")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
    }


def _parse_inf_bialgebra(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "mu", "delta", "alpha", "r"}, path)
    dim = _parse_dim(p, path)
    out = {
        "mu": BilinearOp(_parse_cube(p.get("mu"), dim, f"{path}/mu")),
        "delta": Comultiplication(_parse_cube(p.get("delta"), dim, f"{path}/delta")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
        "r": None,
    }
    if "r" in p:
        grid = _expect(p["r"], list, f"{path}/r", "a grid")
        if len(grid) != dim:
            raise DocumentError(f"{path}/r", f"expected {dim} rows, got {len(grid)}")
        out["r"] = Tensor2(tuple(_parse_vector(row, dim, f"{path}/r/{i}")
                                 for i, row in enumerate(grid)))
    return out


def _parse_dendriform(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "prec", "succ", "alpha", "beta"}, path)
    dim = _parse_dim(p, path)
    return {
        "prec": BilinearOp(_parse_cube(p.get("prec"), dim, f"{path}/prec")),
        "succ": BilinearOp(_parse_cube(p.get("succ"), dim, f"{path}/succ")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
        "beta": _parse_matrix(p.get("beta"), dim, dim, f"{path}/beta"),
    }


def _parse_hom_prelie(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "mu", "alpha"}, path)
    dim = _parse_dim(p, path)
    return {
        "mu": BilinearOp(_parse_cube(p.get("mu"), dim, f"{path}/mu")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
    }


def _parse_hom_lie(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "bracket", "alpha"}, path)
    dim = _parse_dim(p, path)
    return {
        "bracket": BilinearOp(_parse_cube(p.get("bracket"), dim, f"{path}/bracket")),
        "alpha": _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
    }


def _parse_linear_map(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim_in", "dim_out", "convention", "entries"}, path)
    for field in ("dim_in", "dim_out"):
        v = p.get(field)
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DocumentError(f"{path}/{field}", "must be a positive integer")
    m = _parse_matrix({"convention": p.get("convention"),
                       "entries": p.get("entries")},
                      p["dim_out"], p["dim_in"], path)
    return {"map": m}


def _parse_tensor2(p: dict, path: str) -> dict:
    _reject_unknown(p, {"dim", "coeffs"}, path)
    dim = _parse_dim(p, path)
    grid = _expect(p.get("coeffs"), list, f"{path}/coeffs", "a grid")
    if len(grid) != dim:
        raise DocumentError(f"{path}/coeffs", f"expected {dim} rows, got {len(grid)}")
    return {"tensor": Tensor2(tuple(_parse_vector(row, dim, f"{path}/coeffs/{i}")
                                    for i, row in enumerate(grid)))}


_RB_KIND_FIELDS = {
    "paren": {"name", "sigma", "tau"},
    "brace": {"name", "sigma", "tau"},
    "alpha-power": {"name", "alpha", "n"},
    "alpha-beta": {"name", "alpha", "beta"},
    "lie-alpha-power": {"name", "alpha", "n"},
}
_DERIV_KIND_FIELDS = {
    "tau-sigma": {"name", "tau", "sigma"},
    "alpha-power": {"name", "alpha", "k"},
}


def _parse_exponent(p: dict, field: str, path: str) -> int:
    v = p.get(field)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise DocumentError(f"{path}/{field}", "must be a nonnegative integer")
    return v


def _parse_rb_kind(p, dim: int, path: str):
    _expect(p, dict, path, "a kind object")
    name = p.get("name")
    if name not in _RB_KIND_FIELDS:
        raise DocumentError(f"{path}/name",
                            f"unknown kind {name!r}; expected one of "
                            f"{sorted(_RB_KIND_FIELDS)}")
    _reject_unknown(p, _RB_KIND_FIELDS[name], path)
    if name in ("paren", "brace"):
        sigma = _parse_matrix(p.get("sigma"), dim, dim, f"{path}/sigma")
        tau = _parse_matrix(p.get("tau"), dim, dim, f"{path}/tau")
        return ParenRB(sigma, tau) if name == "paren" else BraceRB(sigma, tau)
    alpha = _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha")
    if name == "alpha-power":
        return AlphaPowerRB(alpha, _parse_exponent(p, "n", path))
    if name == "lie-alpha-power":
        return LieAlphaPowerRB(alpha, _parse_exponent(p, "n", path))
    beta = _parse_matrix(p.get("beta"), dim, dim, f"{path}/beta")
    return AlphaBetaRB(alpha, beta)


def _parse_derivation_kind(p, dim: int, path: str):
    _expect(p, dict, path, "a kind object")
    name = p.get("name")
    if name not in _DERIV_KIND_FIELDS:
        raise DocumentError(f"{path}/name",
                            f"unknown kind {name!r}; expected one of "
                            f"{sorted(_DERIV_KIND_FIELDS)}")
    _reject_unknown(p, _DERIV_KIND_FIELDS[name], path)
    if name == "tau-sigma":
        return TauSigmaDerivation(
            _parse_matrix(p.get("tau"), dim, dim, f"{path}/tau"),
            _parse_matrix(p.get("sigma"), dim, dim, f"{path}/sigma"))
    return AlphaPowerDerivation(
        _parse_matrix(p.get("alpha"), dim, dim, f"{path}/alpha"),
        _parse_exponent(p, "k", path))


def _parse_search_spec(p: dict, path: str) -> dict:
    _reject_unknown(p, {"ambient", "target", "coefficients", "dim_cap",
                        "support", "budget"}, path)
    ambient = _parse_document(p.get("ambient"), f"{path}/ambient")
    if ambient.kind not in ("algebra", "bihom-algebra", "hom-lie"):
        raise DocumentError(f"{path}/ambient/kind",
                            "ambient must be an algebra, bihom-algebra or hom-lie")
    dim = _ambient_dim(ambient)
    target_obj = _expect(p.get("target"), dict, f"{path}/target", "a target object")
    ttype = target_obj.get("type")
    if ttype == "aybe":
        _reject_unknown(target_obj, {"type"}, f"{path}/target")
        target = AybeTarget()
    elif ttype == "rb":
        _reject_unknown(target_obj, {"type", "kind", "commute_with"}, f"{path}/target")
        kind = _parse_rb_kind(target_obj.get("kind"), dim, f"{path}/target/kind")
        commute = ()
        if "commute_with" in target_obj:
            lst = _expect(target_obj["commute_with"], list,
                          f"{path}/target/commute_with", "a list")
            commute = tuple(_parse_matrix(m, dim, dim,
                                          f"{path}/target/commute_with/{i}")
                            for i, m in enumerate(lst))
        target = RBTarget(kind, commute)
    elif ttype == "derivation":
        _reject_unknown(target_obj, {"type", "kind"}, f"{path}/target")
        target = DerivationTarget(_parse_derivation_kind(
            target_obj.get("kind"), dim, f"{path}/target/kind"))
    elif ttype == "algebra-map-pair":
        _reject_unknown(target_obj, {"type"}, f"{path}/target")
        target = AlgebraMapPairTarget()
    else:
        raise DocumentError(f"{path}/target/type", f"unknown target {ttype!r}")

    coeff_list = _expect(p.get("coefficients"), list, f"{path}/coefficients",
                         "a list of scalars")
    coeffs = tuple(parse_scalar(c, f"{path}/coefficients/{i}")
                   for i, c in enumerate(coeff_list))
    kwargs = {"target": target, "coefficients": coeffs}
    if "dim_cap" in p:
        cap = p["dim_cap"]
        if not isinstance(cap, int) or isinstance(cap, bool):
            raise DocumentError(f"{path}/dim_cap", "must be an integer")
        kwargs["dim_cap"] = cap
    if "support" in p:
        sup = _expect(p["support"], list, f"{path}/support", "a list of pairs")
        pairs = []
        for i, item in enumerate(sup):
            _expect(item, list, f"{path}/support/{i}", "an index pair")
            if len(item) != 2 or not all(isinstance(x, int) and not isinstance(x, bool)
                                         for x in item):
                raise DocumentError(f"{path}/support/{i}",
                                    "must be a pair of integers")
            pairs.append((item[0], item[1]))
        kwargs["support"] = tuple(pairs)
    if "budget" in p:
        b = p["budget"]
        if not isinstance(b, int) or isinstance(b, bool) or b < 1:
            raise DocumentError(f"{path}/budget", "must be a positive integer")
        kwargs["budget"] = b
    try:
        spec = SearchSpec(**kwargs)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None
    return {"spec": spec, "ambient": ambient}


def _parse_report(p: dict, path: str) -> dict:
    # reports round-trip as validated plain data
    allowed = {"report_type", "law", "passed", "witness", "theorem_id",
               "instance", "checks"}
    _reject_unknown(p, allowed, path)
    if not isinstance(p.get("passed"), bool):
        raise DocumentError(f"{path}/passed", "must be a boolean")
    return {"data": dict(p)}


_PARSERS = {
    "algebra": _parse_algebra,
    "bihom-algebra": _parse_bihom,
    "hom-coalgebra": _parse_hom_coalgebra,
    "inf-hom-bialgebra": _parse_inf_bialgebra,
    "dendriform": _parse_dendriform,
    "hom-prelie": _parse_hom_prelie,
    "hom-lie": _parse_hom_lie,
    "linear-map": _parse_linear_map,
    "tensor2": _parse_tensor2,
    "search-spec": _parse_search_spec,
    "report": _parse_report,
}


def _ambient_dim(doc: Document) -> int:
    if doc.kind in ("algebra", "bihom-algebra", "hom-prelie"):
        return doc.payload["mu"].dim
    if doc.kind == "hom-lie":
        return doc.payload["bracket"].dim
    if doc.kind in ("hom-coalgebra",):
        return doc.payload["delta"].dim
    if doc.kind == "inf-hom-bialgebra":
        return doc.payload["mu"].dim
    raise DocumentError("/", f"no dimension for kind {doc.kind!r}")


def _parse_document(obj, path: str) -> Document:
    _expect(obj, dict, path, "a document object")
    _reject_unknown(obj, {"schema_version", "kind", "payload"}, path)
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"{path}/schema_version",
                            f"must be {SCHEMA_VERSION!r}")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"{path}/kind", f"unknown kind {kind!r}")
    payload = _expect(obj.get("payload"), dict, f"{path}/payload", "an object")
    return Document(kind, _PARSERS[kind](payload, f"{path}/payload"))


def parse(text: str | bytes) -> Document:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError("/", f"not UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("/", f"malformed JSON: {exc}") from None
    return _parse_document(obj, "")


def load_path(path: str) -> Document:
    with open(path, "rb") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _payload_obj(doc: Document) -> dict:
    kind, p = doc.kind, doc.payload
    if kind == "algebra":
        out = {"dim": p["mu"].dim, "mu": _cube_obj(p["mu"].cube)}
        if p.get("unit") is not None:
            out["unit"] = [format_scalar(x) for x in p["unit"]]
        return out
    if kind == "bihom-algebra":
        out = {"dim": p["mu"].dim, "mu": _cube_obj(p["mu"].cube),
               "alpha": _matrix_obj(p["alpha"]), "beta": _matrix_obj(p["beta"])}
        if p.get("unit") is not None:
            out["unit"] = [format_scalar(x) for x in p["unit"]]
        return out
    if kind == "hom-coalgebra":
        return {"dim": p["delta"].dim, "delta": _cube_obj(p["delta"].cube),
                "alpha": _matrix_obj(p["alpha"])}
    if kind == "inf-hom-bialgebra":
        out = {"dim": p["mu"].dim, "mu": _cube_obj(p["mu"].cube),
               "delta": _cube_obj(p["delta"].cube),
               "alpha": _matrix_obj(p["alpha"])}
        if p.get("r") is not None:
            out["r"] = _grid_obj(p["r"].coeffs)
        return out
    if kind == "dendriform":
        return {"dim": p["prec"].dim, "prec": _cube_obj(p["prec"].cube),
                "succ": _cube_obj(p["succ"].cube),
                "alpha": _matrix_obj(p["alpha"]), "beta": _matrix_obj(p["beta"])}
    if kind == "hom-prelie":
        return {"dim": p["mu"].dim, "mu": _cube_obj(p["mu"].cube),
                "alpha": _matrix_obj(p["alpha"])}
    if kind == "hom-lie":
        return {"dim": p["bracket"].dim, "bracket": _cube_obj(p["bracket"].cube),
                "alpha": _matrix_obj(p["alpha"])}
    if kind == "linear-map":
        m: LinearMap = p["map"]
        return {"dim_in": m.dim_in, "dim_out": m.dim_out,
                "convention": CONVENTION,
                "entries": [[format_scalar(x) for x in row] for row in m.entries]}
    if kind == "tensor2":
        t: Tensor2 = p["tensor"]
        return {"dim": t.dim, "coeffs": _grid_obj(t.coeffs)}
    if kind == "search-spec":
        return _search_spec_obj(p["spec"], p["ambient"])
    if kind == "report":
        return dict(p["data"])
    raise ValueError(f"unknown kind {kind!r}")


def _rb_kind_obj(kind) -> dict:
    if isinstance(kind, ParenRB):
        return {"name": "paren", "sigma": _matrix_obj(kind.sigma),
                "tau": _matrix_obj(kind.tau)}
    if isinstance(kind, BraceRB):
        return {"name": "brace", "sigma": _matrix_obj(kind.sigma),
                "tau": _matrix_obj(kind.tau)}
    if isinstance(kind, AlphaPowerRB):
        return {"name": "alpha-power", "alpha": _matrix_obj(kind.alpha),
                "n": kind.n}
    if isinstance(kind, LieAlphaPowerRB):
        return {"name": "lie-alpha-power", "alpha": _matrix_obj(kind.alpha),
                "n": kind.n}
    if isinstance(kind, AlphaBetaRB):
        return {"name": "alpha-beta", "alpha": _matrix_obj(kind.alpha),
                "beta": _matrix_obj(kind.beta)}
    raise ValueError(f"unknown RB kind {kind!r}")


def _derivation_kind_obj(kind) -> dict:
    if isinstance(kind, TauSigmaDerivation):
        return {"name": "tau-sigma", "tau": _matrix_obj(kind.tau),
                "sigma": _matrix_obj(kind.sigma)}
    if isinstance(kind, AlphaPowerDerivation):
        return {"name": "alpha-power", "alpha": _matrix_obj(kind.alpha),
                "k": kind.k}
    raise ValueError(f"unknown derivation kind {kind!r}")


def _search_spec_obj(spec: SearchSpec, ambient: Document) -> dict:
    target = spec.target
    if isinstance(target, AybeTarget):
        tobj = {"type": "aybe"}
    elif isinstance(target, RBTarget):
        tobj = {"type": "rb", "kind": _rb_kind_obj(target.kind)}
        if target.commute_with:
            tobj["commute_with"] = [_matrix_obj(m) for m in target.commute_with]
    elif isinstance(target, DerivationTarget):
        tobj = {"type": "derivation", "kind": _derivation_kind_obj(target.kind)}
    elif isinstance(target, AlgebraMapPairTarget):
        tobj = {"type": "algebra-map-pair"}
    else:
        raise ValueError(f"unknown target {target!r}")
    out = {"ambient": _document_obj(ambient), "target": tobj,
           "coefficients": [format_scalar(c) for c in spec.coefficients],
           "dim_cap": spec.dim_cap}
    if spec.support is not None:
        out["support"] = [list(pair) for pair in spec.support]
    if spec.budget != SearchSpec(target).budget:
        out["budget"] = spec.budget
    return out


def _document_obj(doc: Document) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": doc.kind,
            "payload": _payload_obj(doc)}


def serialize(doc: Document, compact: bool = False) -> str:
    obj = _document_obj(doc)
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2) + "\n"


def dump_path(doc: Document, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))


# ---------------------------------------------------------------------------
# Builders and converters between documents and bundles
# ---------------------------------------------------------------------------

def doc_from_bihom(a: BiHomAlgebra) -> Document:
    if a.alpha.is_identity() and a.beta.is_identity():
        return Document("algebra", {"mu": a.mu, "unit": a.unit})
    return Document("bihom-algebra", {"mu": a.mu, "alpha": a.alpha,
                                      "beta": a.beta, "unit": a.unit})


def doc_from_inf_bialgebra(b: InfHomBialgebra, r: Tensor2 | None = None) -> Document:
    return Document("inf-hom-bialgebra",
                    {"mu": b.mu, "delta": b.delta, "alpha": b.alpha, "r": r})


def doc_from_coalgebra(c: HomCoalgebra) -> Document:
    return Document("hom-coalgebra", {"delta": c.delta, "alpha": c.alpha})


def doc_from_dendriform(d: BiHomDendriform) -> Document:
    return Document("dendriform", {"prec": d.prec, "succ": d.succ,
                                   "alpha": d.alpha, "beta": d.beta})


def doc_from_prelie(p: HomPreLie) -> Document:
    return Document("hom-prelie", {"mu": p.mu, "alpha": p.alpha})


def doc_from_hom_lie(l: HomLie) -> Document:
    return Document("hom-lie", {"bracket": l.bracket, "alpha": l.alpha})


def doc_from_linear_map(m: LinearMap) -> Document:
    return Document("linear-map", {"map": m})


def doc_from_tensor2(t: Tensor2) -> Document:
    return Document("tensor2", {"tensor": t})


def to_bihom_algebra(doc: Document) -> BiHomAlgebra:
    """Lift algebra / bihom-algebra / inf-hom-bialgebra documents to a
    (Bi)Hom-associative bundle."""
    if doc.kind == "algebra":
        mu = doc.payload["mu"]
        ident = LinearMap.identity(mu.dim)
        return BiHomAlgebra(mu, ident, ident, doc.payload.get("unit"))
    if doc.kind == "bihom-algebra":
        p = doc.payload
        return BiHomAlgebra(p["mu"], p["alpha"], p["beta"], p.get("unit"))
    if doc.kind == "inf-hom-bialgebra":
        p = doc.payload
        return BiHomAlgebra(p["mu"], p["alpha"], p["alpha"])
    raise DocumentError("/kind", f"expected an algebra document, got {doc.kind!r}")


def to_hom_algebra(doc: Document) -> HomAlgebra:
    a = to_bihom_algebra(doc)
    if not a.is_hom():
        raise DocumentError("/payload", "structure maps differ; not a Hom algebra")
    return HomAlgebra(a.mu, a.alpha)


def to_inf_bialgebra(doc: Document) -> tuple[InfHomBialgebra, Tensor2 | None]:
    if doc.kind != "inf-hom-bialgebra":
        raise DocumentError("/kind", f"expected inf-hom-bialgebra, got {doc.kind!r}")
    p = doc.payload
    return InfHomBialgebra(p["mu"], p["delta"], p["alpha"]), p.get("r")


def to_hom_coalgebra(doc: Document) -> HomCoalgebra:
    if doc.kind != "hom-coalgebra":
        raise DocumentError("/kind", f"expected hom-coalgebra, got {doc.kind!r}")
    return HomCoalgebra(doc.payload["delta"], doc.payload["alpha"])


def to_dendriform(doc: Document) -> BiHomDendriform:
    if doc.kind != "dendriform":
        raise DocumentError("/kind", f"expected dendriform, got {doc.kind!r}")
    p = doc.payload
    return BiHomDendriform(p["prec"], p["succ"], p["alpha"], p["beta"])


def to_hom_prelie(doc: Document) -> HomPreLie:
    if doc.kind != "hom-prelie":
        raise DocumentError("/kind", f"expected hom-prelie, got {doc.kind!r}")
    return HomPreLie(doc.payload["mu"], doc.payload["alpha"])


def to_hom_lie(doc: Document) -> HomLie:
    if doc.kind != "hom-lie":
        raise DocumentError("/kind", f"expected hom-lie, got {doc.kind!r}")
    return HomLie(doc.payload["bracket"], doc.payload["alpha"])


def to_linear_map(doc: Document) -> LinearMap:
    if doc.kind != "linear-map":
        raise DocumentError("/kind", f"expected linear-map, got {doc.kind!r}")
    return doc.payload["map"]


def to_tensor2(doc: Document) -> Tensor2:
    if doc.kind != "tensor2":
        raise DocumentError("/kind", f"expected tensor2, got {doc.kind!r}")
    return doc.payload["tensor"]


# ---------------------------------------------------------------------------
# Verdict / report rendering
# ---------------------------------------------------------------------------

def witness_obj(verdict: CheckVerdict) -> dict | None:
    if verdict.witness is None:
        return None
    w = verdict.witness
    return {"indices": list(w.indices),
            "lhs": [format_scalar(x) for x in w.lhs],
            "rhs": [format_scalar(x) for x in w.rhs]}


def doc_check_report(law: str, verdict: CheckVerdict) -> Document:
    data = {"report_type": "check", "law": law, "passed": verdict.passed}
    if not verdict.passed:
        data["witness"] = dict(witness_obj(verdict), law=verdict.law)
    return Document("report", {"data": data})


def doc_theorem_report(report) -> Document:
    checks = []
    for name, verdict in report.sub_verdicts:
        item = {"name": name, "passed": verdict.passed}
        if not verdict.passed:
            item["law"] = verdict.law
            item["witness"] = witness_obj(verdict)
        checks.append(item)
    data = {"report_type": "theorem", "theorem_id": report.theorem_id,
            "instance": report.instance_description,
            "passed": report.passed, "checks": checks}
    return Document("report", {"data": data})


def catalogue_document(entry) -> Document:
    """Serialize a catalogue entry as its natural document kind."""
    if entry.kind == "algebra":
        return doc_from_bihom(entry.structure)
    if entry.kind == "inf-bialgebra":
        return doc_from_inf_bialgebra(entry.structure, entry.r)
    if entry.kind == "map":
        return doc_from_linear_map(entry.structure)
    raise ValueError(f"cannot serialize catalogue entry kind {entry.kind!r}")
