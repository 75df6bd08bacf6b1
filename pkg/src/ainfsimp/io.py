"""Instance files: a stable JSON format for every structure the library
manipulates, with exact scalars encoded as strings.

Matrices are sparse triplet lists sorted by (row, col); keys are sorted on
output, so serialization is canonical and generated instances round-trip
byte for byte.  Zero blocks, zero faces, and zero components are omitted on
disk and rebuilt on load; validation failures carry the JSON-ish path of the
offending entry.
"""

from __future__ import annotations

import json

from .ainf import AInfAlgebra, AInfHomotopy, AInfMorphism
from .generators import Cone
from .graded import (DifferentialModule, GradedMap, GradedModule, GradingError,
                     tensor_power, zero_map)
from .linalg import Matrix
from .scalars import FieldError, field_from_descriptor, field_to_descriptor
from .simplicial import (InftyHomotopy, InftyMorphism, InftySimplicialModule,
                         all_face_keys, morphism_keys)

FORMAT = "ainfsimp/1"


class InstanceFormatError(ValueError):
    """Malformed or inconsistent instance file."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


# -- low-level encoding ----------------------------------------------------------

def _encode_matrix(field, mat):
    triplets = sorted((r, c, field.format(v)) for r, c, v in mat.entries())
    return [[r, c, v] for r, c, v in triplets]


def _decode_matrix(field, rows, cols, triplets, path):
    mat = Matrix.zeros(field, rows, cols)
    for idx, entry in enumerate(triplets):
        try:
            r, c, text = entry
        except (TypeError, ValueError):
            raise InstanceFormatError(f"{path}[{idx}]", "triplet must be [row, col, value]")
        if not (isinstance(r, int) and isinstance(c, int)):
            raise InstanceFormatError(f"{path}[{idx}]", "row/col must be integers")
        if not (0 <= r < rows and 0 <= c < cols):
            raise InstanceFormatError(
                f"{path}[{idx}]", f"entry ({r},{c}) outside {rows}x{cols} block")
        try:
            mat.set(r, c, field.parse(text))
        except FieldError as exc:
            raise InstanceFormatError(f"{path}[{idx}]", str(exc)) from None
    return mat


def _encode_single_map(field, phi):
    return {str(m): _encode_matrix(field, mat)
            for (_, m), mat in phi.blocks.items()}


def _decode_single_map(field, source, target, shift, blocks, path):
    phi = GradedMap(source, target, shift)
    for key, triplets in blocks.items():
        try:
            m = int(key)
        except ValueError:
            raise InstanceFormatError(f"{path}.{key}", "block key must be a degree")
        rows, cols = phi.block_shape(0, m)
        mat = _decode_matrix(field, rows, cols, triplets, f"{path}.{key}")
        try:
            phi.set_block(0, m, mat)
        except GradingError as exc:
            raise InstanceFormatError(f"{path}.{key}", str(exc)) from None
    return phi


def _encode_bigraded_map(field, phi):
    return {f"{n},{m}": _encode_matrix(field, mat)
            for (n, m), mat in sorted(phi.blocks.items())}


def _decode_bigraded_map(field, source, target, shift, blocks, path):
    phi = GradedMap(source, target, shift)
    for key, triplets in blocks.items():
        try:
            n, m = (int(x) for x in key.split(","))
        except ValueError:
            raise InstanceFormatError(f"{path}.{key}", "block key must be 'n,m'")
        rows, cols = phi.block_shape(n, m)
        mat = _decode_matrix(field, rows, cols, triplets, f"{path}.{key}")
        try:
            phi.set_block(n, m, mat)
        except GradingError as exc:
            raise InstanceFormatError(f"{path}.{key}", str(exc)) from None
    return phi


def _encode_single_module(module):
    return {"dims": {str(m): d for (_, m), d in sorted(module.dims.items())}}


def _decode_single_module(field, obj, path):
    dims = {}
    for key, d in obj.get("dims", {}).items():
        try:
            m = int(key)
        except ValueError:
            raise InstanceFormatError(f"{path}.dims.{key}", "degree must be an integer")
        if not isinstance(d, int) or d < 0:
            raise InstanceFormatError(f"{path}.dims.{key}", "dimension must be >= 0")
        dims[m] = d
    return GradedModule.single_graded(field, dims)


def _encode_bigraded_module(module):
    return {"dims": {f"{n},{m}": d for (n, m), d in sorted(module.dims.items())}}


def _decode_bigraded_module(field, obj, path):
    dims = {}
    for key, d in obj.get("dims", {}).items():
        try:
            n, m = (int(x) for x in key.split(","))
        except ValueError:
            raise InstanceFormatError(f"{path}.dims.{key}", "bidegree must be 'n,m'")
        dims[(n, m)] = d
    return GradedModule(field, dims)


# -- structures -------------------------------------------------------------------

def _encode_ainf(algebra):
    field = algebra.field
    return {
        "name": algebra.name,
        "complete": algebra.complete,
        "module": _encode_single_module(algebra.module),
        "d": _encode_single_map(field, algebra.dm.d),
        "ops": {str(n): _encode_single_map(field, phi)
                for n, phi in sorted(algebra.ops.items())},
    }


def _decode_ainf(field, obj, path):
    module = _decode_single_module(field, obj.get("module", {}), f"{path}.module")
    d = _decode_single_map(field, module, module, (0, -1),
                           obj.get("d", {}), f"{path}.d")
    try:
        dm = DifferentialModule(module, d)
    except GradingError as exc:
        raise InstanceFormatError(f"{path}.d", str(exc)) from None
    ops = {}
    for key, blocks in obj.get("ops", {}).items():
        try:
            n = int(key)
        except ValueError:
            raise InstanceFormatError(f"{path}.ops.{key}", "operation key must be an index")
        source = tensor_power(dm, n + 2).module
        ops[n] = _decode_single_map(field, source, module, (0, n), blocks,
                                    f"{path}.ops.{key}")
    try:
        return AInfAlgebra(dm, ops, complete=obj.get("complete", True),
                           name=obj.get("name", ""))
    except (GradingError, ValueError) as exc:
        raise InstanceFormatError(path, str(exc)) from None


def _encode_components(field, components):
    return {str(n): _encode_single_map(field, phi)
            for n, phi in sorted(components.items())}


def _decode_components(field, source_alg, target_alg, extra_degree, obj, path):
    comps = {}
    for key, blocks in obj.items():
        try:
            n = int(key)
        except ValueError:
            raise InstanceFormatError(f"{path}.{key}", "component key must be an index")
        source = tensor_power(source_alg.dm, n + 1).module
        comps[n] = _decode_single_map(field, source, target_alg.module,
                                      (0, n + extra_degree), blocks, f"{path}.{key}")
    return comps


def _encode_face_key(n, t):
    return f"{n}|{','.join(str(i) for i in t)}"


def _decode_face_key(key, path):
    try:
        level_text, tuple_text = key.split("|")
        n = int(level_text)
        t = tuple(int(x) for x in tuple_text.split(",")) if tuple_text else ()
    except ValueError:
        raise InstanceFormatError(f"{path}.{key}", "key must be 'level|i1,i2,...'")
    return n, t


def _encode_dm(x_mod):
    field = x_mod.field
    return {
        "max_level": x_mod.max_level,
        "complete": x_mod.complete,
        "module": _encode_bigraded_module(x_mod.module),
        "d": _encode_bigraded_map(field, x_mod.dm.d),
        "faces": {
            _encode_face_key(n, t): _encode_bigraded_map(field, phi)
            for (n, t), phi in sorted(x_mod.faces.items())
            if not phi.is_zero()
        },
    }


def _decode_dm(field, obj, path):
    module = _decode_bigraded_module(field, obj.get("module", {}), f"{path}.module")
    d = _decode_bigraded_map(field, module, module, (0, -1),
                             obj.get("d", {}), f"{path}.d")
    try:
        dm = DifferentialModule(module, d)
    except GradingError as exc:
        raise InstanceFormatError(f"{path}.d", str(exc)) from None
    max_level = obj.get("max_level", 0)
    faces = {}
    for key, blocks in obj.get("faces", {}).items():
        n, t = _decode_face_key(key, f"{path}.faces")
        k = len(t)
        faces[(n, t)] = _decode_bigraded_map(field, module, module,
                                             (-k, k - 1), blocks,
                                             f"{path}.faces.{key}")
    for n, t in all_face_keys(max_level):
        faces.setdefault((n, t), zero_map(module, module, (-len(t), len(t) - 1)))
    try:
        return InftySimplicialModule(dm, faces, max_level,
                                     complete=obj.get("complete", True))
    except (GradingError, ValueError) as exc:
        raise InstanceFormatError(path, str(exc)) from None


def _encode_dm_components(field, components):
    return {_encode_face_key(n, t): _encode_bigraded_map(field, phi)
            for (n, t), phi in sorted(components.items()) if not phi.is_zero()}


def _decode_dm_components(field, source, target, shift_extra, obj, max_level, path):
    comps = {}
    for key, blocks in obj.items():
        n, t = _decode_face_key(key, path)
        k = len(t)
        comps[(n, t)] = _decode_bigraded_map(
            field, source.module, target.module, (-k, k + shift_extra),
            blocks, f"{path}.{key}")
    for n, t in morphism_keys(max_level):
        k = len(t)
        comps.setdefault((n, t), zero_map(source.module, target.module,
                                          (-k, k + shift_extra)))
    return comps


# -- top level --------------------------------------------------------------------

def serialize_instance(obj, metadata=None):
    """Encode a structure as a JSON-serializable document."""
    if isinstance(obj, AInfAlgebra):
        kind, field = "ainf", obj.field
        payload = _encode_ainf(obj)
    elif isinstance(obj, AInfMorphism):
        kind, field = "ainf-morphism", obj.source.field
        payload = {
            "name": obj.name,
            "complete": obj.complete,
            "source": _encode_ainf(obj.source),
            "target": _encode_ainf(obj.target),
            "components": _encode_components(field, obj.components),
        }
    elif isinstance(obj, AInfHomotopy):
        kind, field = "ainf-homotopy", obj.source.field
        payload = {
            "name": obj.name,
            "complete": obj.complete,
            "source": _encode_ainf(obj.source),
            "target": _encode_ainf(obj.target),
            "f": _encode_components(field, obj.f.components),
            "g": _encode_components(field, obj.g.components),
            "h": _encode_components(field, obj.components),
        }
    elif isinstance(obj, Cone):
        kind, field = "cone", obj.dm.field
        payload = {
            "module": _encode_single_module(obj.dm.module),
            "d": _encode_single_map(field, obj.dm.d),
            "contraction": _encode_single_map(field, obj.contraction),
        }
    elif isinstance(obj, InftySimplicialModule):
        kind, field = "dm-faces", obj.field
        payload = _encode_dm(obj)
    elif isinstance(obj, InftyMorphism):
        kind, field = "dm-morphism", obj.source.field
        payload = {
            "max_level": obj.max_level,
            "source": _encode_dm(obj.source),
            "target": _encode_dm(obj.target),
            "components": _encode_dm_components(field, obj.components),
        }
    elif isinstance(obj, InftyHomotopy):
        kind, field = "dm-homotopy", obj.source.field
        payload = {
            "max_level": obj.max_level,
            "source": _encode_dm(obj.source),
            "target": _encode_dm(obj.target),
            "f": _encode_dm_components(field, obj.f.components),
            "g": _encode_dm_components(field, obj.g.components),
            "h": _encode_dm_components(field, obj.components),
        }
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {
        "format": FORMAT,
        "kind": kind,
        "ring": field_to_descriptor(field),
        "metadata": metadata or {},
        "payload": payload,
    }


def parse_instance(doc):
    """Decode a document produced by :func:`serialize_instance`."""
    if not isinstance(doc, dict):
        raise InstanceFormatError("$", "document must be an object")
    if doc.get("format") != FORMAT:
        raise InstanceFormatError("$.format", f"expected {FORMAT!r}")
    try:
        field = field_from_descriptor(doc.get("ring", {}))
    except FieldError as exc:
        raise InstanceFormatError("$.ring", str(exc)) from None
    kind = doc.get("kind")
    payload = doc.get("payload", {})
    path = "$.payload"
    if kind == "ainf":
        return _decode_ainf(field, payload, path)
    if kind == "ainf-morphism":
        source = _decode_ainf(field, payload.get("source", {}), f"{path}.source")
        target = _decode_ainf(field, payload.get("target", {}), f"{path}.target")
        comps = _decode_components(field, source, target, 0,
                                   payload.get("components", {}), f"{path}.components")
        return AInfMorphism(source, target, comps,
                            complete=payload.get("complete", True),
                            name=payload.get("name", ""))
    if kind == "ainf-homotopy":
        source = _decode_ainf(field, payload.get("source", {}), f"{path}.source")
        target = _decode_ainf(field, payload.get("target", {}), f"{path}.target")
        f = AInfMorphism(source, target,
                         _decode_components(field, source, target, 0,
                                            payload.get("f", {}), f"{path}.f"),
                         name="f")
        g = AInfMorphism(source, target,
                         _decode_components(field, source, target, 0,
                                            payload.get("g", {}), f"{path}.g"),
                         name="g")
        comps = _decode_components(field, source, target, 1,
                                   payload.get("h", {}), f"{path}.h")
        return AInfHomotopy(f, g, comps, complete=payload.get("complete", True),
                            name=payload.get("name", ""))
    if kind == "cone":
        module = _decode_single_module(field, payload.get("module", {}),
                                       f"{path}.module")
        d = _decode_single_map(field, module, module, (0, -1),
                               payload.get("d", {}), f"{path}.d")
        s = _decode_single_map(field, module, module, (0, 1),
                               payload.get("contraction", {}), f"{path}.contraction")
        try:
            return Cone(DifferentialModule(module, d), s)
        except GradingError as exc:
            raise InstanceFormatError(f"{path}.d", str(exc)) from None
    if kind == "dm-faces":
        return _decode_dm(field, payload, path)
    if kind == "dm-morphism":
        source = _decode_dm(field, payload.get("source", {}), f"{path}.source")
        target = _decode_dm(field, payload.get("target", {}), f"{path}.target")
        max_level = payload.get("max_level", min(source.max_level, target.max_level))
        comps = _decode_dm_components(field, source, target, 0,
                                      payload.get("components", {}),
                                      max_level, f"{path}.components")
        return InftyMorphism(source, target, comps, max_level)
    if kind == "dm-homotopy":
        source = _decode_dm(field, payload.get("source", {}), f"{path}.source")
        target = _decode_dm(field, payload.get("target", {}), f"{path}.target")
        max_level = payload.get("max_level", min(source.max_level, target.max_level))
        f = InftyMorphism(source, target,
                          _decode_dm_components(field, source, target, 0,
                                                payload.get("f", {}),
                                                max_level, f"{path}.f"),
                          max_level)
        g = InftyMorphism(source, target,
                          _decode_dm_components(field, source, target, 0,
                                                payload.get("g", {}),
                                                max_level, f"{path}.g"),
                          max_level)
        comps = _decode_dm_components(field, source, target, 1,
                                      payload.get("h", {}), max_level, f"{path}.h")
        return InftyHomotopy(f, g, comps, max_level)
    raise InstanceFormatError("$.kind", f"unknown kind {kind!r}")


def dumps_instance(obj, metadata=None):
    return json.dumps(serialize_instance(obj, metadata), indent=2, sort_keys=True) + "\n"


def dump_instance(obj, path, metadata=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_instance(obj, metadata))


def load_instance(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError("$", f"invalid JSON: {exc}") from None
    return parse_instance(doc)
