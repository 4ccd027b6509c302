"""JSON loaders for representation specs and synthesis requests.

Representation spec::

    {"group": {"kind": "cyclic", "k": 2},
     "block_dim": 8,
     "images": {"01": <matrix>, "10": <matrix>, ...},
     "labels": ["F^2", "F"],
     "factor_set": "trivial" | "induced" | {"table": [[[re, im], ...], ...]}}

Group kinds are ``cyclic`` (``k``), ``elementary_abelian`` (``k``) and
``direct_product`` (``factors``: list of group objects). Image keys are
address bit strings with ``a_1`` first. When only the generator addresses
(a single 1 bit) are given, the other images are the ordered products.

Synthesis request::

    {"representation": <spec>, "mode": "ordinary" | "projective",
     "coefficients": [[re, im], ...]  or  "target": <matrix>,
     "prepend": [{"label": ..., "matrix": <matrix>}, ...],
     "circulant_label": "C_A", "fourier_circulant": false}

``prepend`` blocks act on the data register before the combination circuit.
"""

import json

import numpy as np

from .circuit import Block
from .circulant import CoefficientVector, solve_coefficients, unitarize_coefficients
from .errors import NonAbelianError, ParseError
from .groups import (
    FactorSet,
    Representation,
    induced_factor_set,
    literal_products,
    make_cyclic_group,
    make_direct_product,
    make_elementary_abelian,
)
from .linalg import matrix_from_json
from .synth import lcu_circuit, projective_lcu_circuit

__all__ = ["load_json", "group_from_spec", "representation_from_spec", "synthesize_request"]


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None


def _positive_int(obj, key, where):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ParseError(f"{key!r} must be a positive integer", f"{where}.{key}")
    return v


def group_from_spec(obj, where="group"):
    if not isinstance(obj, dict):
        raise ParseError("group must be an object", where)
    kind = obj.get("kind")
    params = obj.get("params", obj)
    if kind == "cyclic":
        return make_cyclic_group(_positive_int(params, "k", where))
    if kind == "elementary_abelian":
        return make_elementary_abelian(_positive_int(params, "k", where))
    if kind == "direct_product":
        factors = params.get("factors")
        if not isinstance(factors, list) or not factors:
            raise ParseError("direct_product needs a nonempty 'factors' list", f"{where}.factors")
        return make_direct_product(*(group_from_spec(f, f"{where}.factors[{i}]") for i, f in enumerate(factors)))
    raise ParseError(f"unknown group kind {kind!r}", f"{where}.kind")


def _complex(pair, where):
    if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, (int, float)) for x in pair)):
        raise ParseError("expected a [re, im] pair", where)
    return complex(pair[0], pair[1])


def _complex_list(data, n, where):
    if not isinstance(data, list) or len(data) != n:
        raise ParseError(f"expected a list of {n} [re, im] pairs", where)
    return np.array([_complex(p, f"{where}[{i}]") for i, p in enumerate(data)])


def representation_from_spec(obj, where="representation"):
    if not isinstance(obj, dict):
        raise ParseError("representation must be an object", where)
    group = group_from_spec(obj.get("group"), f"{where}.group")
    n = group.n_generators
    raw = obj.get("images")
    if not isinstance(raw, dict):
        raise ParseError("images must be an object keyed by address bits", f"{where}.images")
    images = {}
    for key, m in raw.items():
        if len(key) != n or set(key) - {"0", "1"}:
            raise ParseError(f"image key {key!r} is not a {n}-bit address", f"{where}.images")
        images[int(key, 2)] = matrix_from_json(m, f"{where}.images.{key}")
    dims = {m.shape for m in images.values()}
    if len(dims) != 1 or next(iter(dims))[0] != next(iter(dims))[1]:
        raise ParseError("images must be square and share one shape", f"{where}.images")
    d = next(iter(dims))[0]
    if "block_dim" in obj and obj["block_dim"] != d:
        raise ParseError(f"block_dim {obj['block_dim']} does not match images of size {d}", f"{where}.block_dim")
    gen_idx = [1 << (n - 1 - i) for i in range(n)]
    if len(images) == group.order:
        imgs = np.array([images[i] for i in range(group.order)])
    elif set(images) <= set(gen_idx) | {0} and all(i in images for i in gen_idx):
        imgs = literal_products(group, [images[i] for i in gen_idx])
    else:
        raise ParseError("give either every address or exactly the generator addresses", f"{where}.images")

    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise ParseError(f"labels must be a list of {n} strings", f"{where}.labels")
    fs_spec = obj.get("factor_set", "trivial")
    if fs_spec == "trivial":
        fs = None
    elif fs_spec == "induced":
        fs = induced_factor_set(group, imgs)
    elif isinstance(fs_spec, dict) and "table" in fs_spec:
        rows = fs_spec["table"]
        if not isinstance(rows, list) or len(rows) != group.order:
            raise ParseError(f"factor set table needs {group.order} rows", f"{where}.factor_set")
        fs = FactorSet(group, [_complex_list(r, group.order, f"{where}.factor_set.table[{i}]") for i, r in enumerate(rows)])
    else:
        raise ParseError("factor_set must be 'trivial', 'induced' or {table}", f"{where}.factor_set")
    try:
        return Representation(group, imgs, fs, tuple(labels) if labels else None)
    except ValueError as exc:
        raise ParseError(str(exc), where) from None


def synthesize_request(obj, tol=1e-10):
    """Build the circuit described by a synthesis request.

    Raises
    ------
    ParseError
        Malformed request.
    NotInSpanError, NonUnitaryCirculantError, NonUnitaryTargetError, PhaseRecoveryError
        Synthesis failures.
    """
    if not isinstance(obj, dict):
        raise ParseError("request must be an object", "$")
    rep = representation_from_spec(obj.get("representation"))
    mode = obj.get("mode", "projective" if rep.is_projective else "ordinary")
    if mode not in ("ordinary", "projective"):
        raise ParseError(f"unknown mode {mode!r}", "mode")
    if "coefficients" in obj:
        alpha = CoefficientVector(rep.group, _complex_list(obj["coefficients"], rep.group.order, "coefficients"))
    elif "target" in obj:
        target = matrix_from_json(obj["target"], "target")
        if target.shape != (rep.block_dim, rep.block_dim):
            raise ParseError(f"target shape {target.shape} does not match block dim {rep.block_dim}", "target")
        if mode == "ordinary":
            try:
                alpha = unitarize_coefficients(target, rep, tol)
            except NonAbelianError:
                alpha = solve_coefficients(target, rep, tol)
        else:
            alpha = solve_coefficients(target, rep, tol)
    else:
        raise ParseError("request needs 'coefficients' or 'target'", "$")
    label = obj.get("circulant_label", "C_A")
    if mode == "ordinary":
        if rep.is_projective:
            raise ParseError("ordinary mode needs a trivial factor set", "mode")
        circuit = lcu_circuit(rep, alpha, tol, label, bool(obj.get("fourier_circulant", False)))
    else:
        circuit = projective_lcu_circuit(rep, rep.group, alpha, tol, circulant_label=label)
    prepend = obj.get("prepend", [])
    if not isinstance(prepend, list):
        raise ParseError("prepend must be a list", "prepend")
    data = tuple(range(circuit.num_data_qubits))
    pre = []
    for i, p in enumerate(prepend):
        if not isinstance(p, dict) or "matrix" not in p:
            raise ParseError("prepend entry needs a matrix", f"prepend[{i}]")
        m = matrix_from_json(p["matrix"], f"prepend[{i}].matrix")
        try:
            pre.append(Block(data, m, p.get("label", f"P{i}")))
        except ValueError as exc:
            raise ParseError(str(exc), f"prepend[{i}]") from None
    # the first ancilla Hadamard layer commutes with data-only blocks
    n_h = circuit.num_ancilla_qubits
    gates = circuit.gates[:n_h] + tuple(pre) + circuit.gates[n_h:]
    return circuit.with_gates(gates), alpha
