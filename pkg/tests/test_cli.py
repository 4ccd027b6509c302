import io
import json
import subprocess
import sys

import numpy as np
import pytest

from qlcu.circuit import Circuit, parse, serialize
from qlcu.cli import main
from qlcu.errors import ParseError
from qlcu.formats import group_from_spec, representation_from_spec, synthesize_request
from qlcu.groups import Representation, make_cyclic_group
from qlcu.linalg import I2, SIGMA_X, SIGMA_Z, dft_matrix, matrix_to_json
from qlcu.catalog import hartley_matrix
from qlcu.simulator import verify_realizes
from qlcu.synth import case_operator_circuit

from conftest import haar


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write(path, obj):
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def hartley_request(n_dim=8):
    f = dft_matrix(n_dim)
    return {
        "representation": {
            "group": {"kind": "cyclic", "params": {"k": 1}},
            "block_dim": n_dim,
            "images": {"1": matrix_to_json(f @ f)},
            "labels": [f"F_{n_dim}^2"],
        },
        "coefficients": [[0.5, -0.5], [0.5, 0.5]],
        "circulant_label": "R",
        "prepend": [{"label": f"F_{n_dim}", "matrix": matrix_to_json(f)}],
    }


def pauli_request(u):
    return {
        "representation": {
            "group": {"kind": "elementary_abelian", "k": 2},
            "images": {"10": matrix_to_json(SIGMA_X), "01": matrix_to_json(SIGMA_Z)},
            "factor_set": "induced",
            "labels": ["X", "Z"],
        },
        "mode": "projective",
        "target": matrix_to_json(u),
    }


def test_group_specs():
    assert group_from_spec({"kind": "cyclic", "k": 3}).order == 8
    g = group_from_spec({"kind": "direct_product", "factors": [{"kind": "cyclic", "k": 1}, {"kind": "cyclic", "k": 2}]})
    assert g.order == 8 and g.is_abelian
    with pytest.raises(ParseError):
        group_from_spec({"kind": "symmetric", "k": 3})


def test_representation_spec_fills_products():
    rep = representation_from_spec(pauli_request(I2)["representation"])
    assert rep.is_projective
    assert np.allclose(rep.image((1, 1)), SIGMA_X @ SIGMA_Z)
    with pytest.raises(ParseError):
        representation_from_spec({"group": {"kind": "cyclic", "k": 1}, "images": {"11": matrix_to_json(I2)}})


def test_synthesize_request_hartley():
    circuit, _ = synthesize_request(hartley_request())
    assert len(circuit.gates) == 6 and circuit.num_ancilla_qubits == 1
    assert verify_realizes(circuit, hartley_matrix(8), 1e-9).passed


def test_cli_demo_hartley():
    code, out = run(["demo", "hartley", "--qubits", "4"])
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("realization"))
    assert float(line.split("value=")[1].split()[0]) <= 1e-9


def test_cli_demo_fractional_identity():
    code, out = run(["demo", "fractional", "--qubits", "3", "--theta", "0"])
    assert code == 0 and "demo fractional: PASS" in out


def test_cli_demo_size_cap(capsys):
    code, _ = run(["demo", "hartley", "--qubits", "40"])
    assert code == 2
    assert "cap" in capsys.readouterr().err


def test_cli_demo_unknown():
    assert run(["demo", "shor"])[0] == 2


@pytest.mark.parametrize("name", ["teleport", "kitaev"])
def test_cli_demo_json_deterministic(name):
    a = run(["demo", name, "--json"])
    b = run(["demo", name, "--json"])
    assert a == b and a[0] == 0
    assert json.loads(a[1])["pass"] is True


def test_cli_synth_verify_report(tmp_path):
    spec = write(tmp_path / "hartley.json", hartley_request())
    out_path = str(tmp_path / "c.json")
    code, _ = run(["synth", spec, "--out", out_path])
    assert code == 0
    circuit = parse(open(out_path).read())
    assert [g.kind for g in circuit.gates] == ["h", "block", "controlled_block", "block", "controlled_block", "h"]
    target = write(tmp_path / "a8.json", matrix_to_json(hartley_matrix(8), hexfloat=True))
    code, out = run(["verify", out_path, target, "--json"])
    assert code == 0 and json.loads(out)["pass"] is True
    wrong = write(tmp_path / "f8.json", matrix_to_json(dft_matrix(8)))
    code, out = run(["verify", out_path, wrong])
    assert code == 1 and out.startswith("FAIL")
    small = write(tmp_path / "i2.json", matrix_to_json(I2))
    assert run(["verify", out_path, small])[0] == 2

    c = 5
    costs = write(tmp_path / "costs.json", {"F_8": c, "F_8^2": c, "R": 1})
    code, out = run(["report", out_path, "--costs", costs, "--json"])
    assert code == 0
    assert json.loads(out)["elementary_count_upper_bound"] == 2 + c + 2 * 14 * c + 1
    missing = write(tmp_path / "few.json", {"F_8": c})
    assert run(["report", out_path, "--costs", missing])[0] == 2


def test_cli_report_empty_and_case_operator(tmp_path):
    empty = write(tmp_path / "e.json", serialize(Circuit(2)))
    code, out = run(["report", empty, "--json"])
    assert code == 0 and json.loads(out)["elementary_count_upper_bound"] == 0
    u = np.diag(np.exp(2j * np.pi * np.arange(4) / 16))
    rep = Representation(make_cyclic_group(4), [np.linalg.matrix_power(u, g) for g in range(16)])
    path = write(tmp_path / "case.json", serialize(case_operator_circuit(rep)))
    costs = write(tmp_path / "costs.json", {lab: 3 for lab in rep.generator_labels()})
    code, out = run(["report", path, "--costs", costs, "--json"])
    assert json.loads(out)["elementary_count_upper_bound"] <= 14 * 4 * 3


def test_cli_synth_not_in_span(tmp_path, capsys):
    req = {
        "representation": {"group": {"kind": "cyclic", "k": 1}, "images": {"0": matrix_to_json(I2), "1": matrix_to_json(SIGMA_Z)}},
        "target": matrix_to_json(SIGMA_X),
    }
    code, _ = run(["synth", write(tmp_path / "s.json", req)])
    assert code == 1
    err = capsys.readouterr().err
    assert "NotInSpanError" in err and "residual" in err


def test_cli_synth_projective(tmp_path):
    u = haar(2, np.random.default_rng(2))
    out_path = str(tmp_path / "p.json")
    assert run(["synth", write(tmp_path / "p_req.json", pauli_request(u)), "--out", out_path])[0] == 0
    assert verify_realizes(parse(open(out_path).read()), u, 1e-9).passed


def test_cli_parse_errors(tmp_path):
    assert run(["synth", write(tmp_path / "bad.json", "{not json")])[0] == 2
    assert run(["synth", str(tmp_path / "missing.json")])[0] == 2
    bad_gate = {"version": 1, "data_qubits": 1, "ancilla_qubits": 0, "gates": [{"kind": "x", "targets": [0]}]}
    c = write(tmp_path / "c.json", bad_gate)
    assert run(["report", c])[0] == 2
    assert run([])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qlcu", "demo", "kitaev"], capture_output=True, text=True)
    assert proc.returncode == 0 and "demo kitaev: PASS" in proc.stdout
