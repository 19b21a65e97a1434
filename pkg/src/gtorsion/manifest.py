"""
JSON manifests describing a manifold by its prime and JSJ decomposition data.

    {"connected_sum": [
        {"kind": "irreducible", "jsj": [
            {"kind": "seifert",
             "base": {"genus": 0, "orientable": true, "boundary": 1},
             "fibers": [{"p": 2, "alpha": 1}, {"p": 3, "alpha": 1}],
             "euler": 0},
            {"kind": "hyperbolic", "cusps": 1}]},
        {"kind": "spherical", "order": 5, "cyclic": true},
        {"kind": "s2xs1"},
        {"kind": "solid_torus"}]}

Every prime piece may also carry a "label" string, and an irreducible piece
may carry "flags": {"torsion_free": bool}.  Any other key is an error.
"""

from __future__ import annotations

import json
from pathlib import Path

from .manifold import (HyperbolicPiece, Irreducible, ManifoldDescriptor, S2xS1, SeifertPiece, SolidTorus,
                       Spherical)
from .sfs import SeifertData
from .words import InputError

__all__ = ["ManifestError", "parse_manifest", "load_manifest", "descriptor_to_manifest", "dump_manifest"]


class ManifestError(InputError):
    pass


def _fail(path: str, msg: str):
    raise ManifestError(f"{path or '<root>'}: {msg}")


def _obj(x, path: str, required: set, optional: set = frozenset()) -> dict:
    if not isinstance(x, dict):
        _fail(path, f"expected an object, got {type(x).__name__}")
    unknown = set(x) - required - optional
    if unknown:
        _fail(path, f"unknown key(s) {sorted(unknown)}")
    missing = required - set(x)
    if missing:
        _fail(path, f"missing key(s) {sorted(missing)}")
    return x


def _int(x, path: str, minimum: int | None = None) -> int:
    # bool is an int subclass; reject it explicitly
    if not isinstance(x, int) or isinstance(x, bool):
        _fail(path, f"expected an integer, got {json.dumps(x)}")
    if minimum is not None and x < minimum:
        _fail(path, f"must be >= {minimum}, got {x}")
    return x


def _bool(x, path: str) -> bool:
    if not isinstance(x, bool):
        _fail(path, f"expected true or false, got {json.dumps(x)}")
    return x


def _list(x, path: str) -> list:
    if not isinstance(x, list):
        _fail(path, f"expected a list, got {type(x).__name__}")
    return x


def _label(x: dict, path: str) -> str:
    label = x.get("label", "")
    if not isinstance(label, str):
        _fail(f"{path}.label", "expected a string")
    return label


def _parse_jsj(x, path: str):
    if not isinstance(x, dict) or "kind" not in x:
        _fail(path, "expected an object with a 'kind'")
    kind = x["kind"]
    if kind == "hyperbolic":
        _obj(x, path, {"kind", "cusps"})
        return HyperbolicPiece(_int(x["cusps"], f"{path}.cusps", 0))
    if kind == "seifert":
        _obj(x, path, {"kind", "base", "fibers", "euler"})
        base = _obj(x["base"], f"{path}.base", {"genus", "orientable", "boundary"})
        fibers = []
        for i, f in enumerate(_list(x["fibers"], f"{path}.fibers")):
            fp = f"{path}.fibers[{i}]"
            _obj(f, fp, {"p", "alpha"})
            fibers.append((_int(f["p"], f"{fp}.p", 2), _int(f["alpha"], f"{fp}.alpha")))
        try:
            data = SeifertData(_int(base["genus"], f"{path}.base.genus", 0),
                               _bool(base["orientable"], f"{path}.base.orientable"),
                               _int(base["boundary"], f"{path}.base.boundary", 0),
                               tuple(fibers), _int(x["euler"], f"{path}.euler"))
        except ManifestError:
            raise
        except InputError as e:
            _fail(path, str(e))
        return SeifertPiece(data)
    _fail(f"{path}.kind", f"unknown JSJ piece kind {json.dumps(kind)}")


def _parse_piece(x, path: str):
    if not isinstance(x, dict) or "kind" not in x:
        _fail(path, "expected an object with a 'kind'")
    kind = x["kind"]
    if kind == "irreducible":
        _obj(x, path, {"kind", "jsj"}, {"label", "flags"})
        jsj = _list(x["jsj"], f"{path}.jsj")
        if not jsj:
            _fail(f"{path}.jsj", "an irreducible piece needs at least one JSJ piece")
        torsion_free = True
        if "flags" in x:
            flags = _obj(x["flags"], f"{path}.flags", set(), {"torsion_free"})
            if "torsion_free" in flags:
                torsion_free = _bool(flags["torsion_free"], f"{path}.flags.torsion_free")
        pieces = tuple(_parse_jsj(j, f"{path}.jsj[{i}]") for i, j in enumerate(jsj))
        return Irreducible(pieces, torsion_free, _label(x, path))
    if kind == "spherical":
        _obj(x, path, {"kind", "order", "cyclic"}, {"label"})
        return Spherical(_int(x["order"], f"{path}.order", 1), _bool(x["cyclic"], f"{path}.cyclic"),
                         _label(x, path))
    if kind == "s2xs1":
        _obj(x, path, {"kind"}, {"label"})
        return S2xS1(_label(x, path))
    if kind == "solid_torus":
        _obj(x, path, {"kind"}, {"label"})
        return SolidTorus(_label(x, path))
    _fail(f"{path}.kind", f"unknown prime piece kind {json.dumps(kind)}")


def parse_manifest(obj) -> ManifoldDescriptor:
    _obj(obj, "", {"connected_sum"})
    pieces = _list(obj["connected_sum"], "connected_sum")
    if not pieces:
        _fail("connected_sum", "needs at least one prime piece")
    return ManifoldDescriptor(tuple(_parse_piece(p, f"connected_sum[{i}]") for i, p in enumerate(pieces)))


def load_manifest(path) -> ManifoldDescriptor:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ManifestError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    return parse_manifest(obj)


def _seifert_json(d: SeifertData) -> dict:
    return {"kind": "seifert",
            "base": {"genus": d.base_genus, "orientable": d.base_orientable, "boundary": d.boundary_count},
            "fibers": [{"p": f.p, "alpha": f.alpha} for f in d.fibers],
            "euler": d.euler_b}


def descriptor_to_manifest(m: ManifoldDescriptor) -> dict:
    out = []
    for p in m.connected_sum:
        if isinstance(p, Irreducible):
            jsj = [_seifert_json(j.data) if isinstance(j, SeifertPiece) else {"kind": "hyperbolic", "cusps": j.cusps}
                   for j in p.jsj_pieces]
            item = {"kind": "irreducible", "jsj": jsj}
            if not p.torsion_free:
                item["flags"] = {"torsion_free": False}
        elif isinstance(p, Spherical):
            item = {"kind": "spherical", "order": p.group_order, "cyclic": p.cyclic}
        elif isinstance(p, S2xS1):
            item = {"kind": "s2xs1"}
        else:
            item = {"kind": "solid_torus"}
        if p.label:
            item["label"] = p.label
        out.append(item)
    return {"connected_sum": out}


def dump_manifest(m: ManifoldDescriptor) -> str:
    return json.dumps(descriptor_to_manifest(m), indent=2)
