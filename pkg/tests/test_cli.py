from __future__ import annotations

import json

from zvect.cli import main


def _write(tmp_path, doc):
    p = tmp_path / "config.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


def _run(capsys, args):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


Z3_NONSPH = {
    "group": {"type": "cyclic", "n": 3},
    "lambda": {"type": "trivial"},
    "d": {"type": "generators", "values": [[3, 1]]},
}


def test_spherical_command(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["spherical", cfg])
    assert code == 0
    doc = json.loads(out)
    conds = doc["conditions"]
    assert doc["spherical"] is False
    assert conds["dualizing_object_unit"] is False
    assert conds["base_spherical"] is False
    assert conds["gv_duality_equals_rigid"] is False
    assert conds["canonical_structure_modular"] is False
    assert conds["consistent"] is True


def test_blocks_command(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["blocks", cfg, "--genus", "4"])
    assert code == 0
    doc = json.loads(out)
    assert doc["table"] == [[0, 0], [1, 9], [2, 0], [3, 0], [4, 6561]]


def test_simples_command_s3(tmp_path, capsys):
    cfg = _write(
        tmp_path,
        {
            "group": {"type": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]},
            "lambda": {"type": "trivial"},
            "d": {"type": "trivial"},
        },
    )
    code, out = _run(capsys, ["simples", cfg])
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 8
    labels = [s["label"] for s in doc["simples"]]
    assert len(set(labels)) == 8


def test_verify_and_report_commands(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["verify", cfg])
    assert code == 0
    assert json.loads(out)["ribbon_ok"] is True
    code, out = _run(capsys, ["report", cfg])
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"verify", "simples", "spherical", "blocks", "classify"}


def test_classify_command(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["classify", cfg])
    assert code == 0
    doc = json.loads(out)
    assert doc["extension_candidates"] == 1
    assert doc["uniqueness_certified"] is True
    assert doc["aut_tensor_id"]["order"] == 9


def test_determinism(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    _, out1 = _run(capsys, ["report", cfg, "--genus", "3"])
    _, out2 = _run(capsys, ["report", cfg, "--genus", "3"])
    assert out1 == out2


def test_text_format(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["spherical", cfg, "--format", "text"])
    assert code == 0
    assert "spherical: False" in out


def test_config_error_exit_code(tmp_path, capsys):
    cfg = _write(tmp_path, {"group": {"type": "perm", "degree": 3, "generators": [[1, 1, 2]]}})
    code, out = _run(capsys, ["simples", cfg])
    assert code == 2
    assert json.loads(out)["error"]["code"] == 2


def test_missing_file_exit_code(capsys):
    code, out = _run(capsys, ["simples", "/nonexistent/config.json"])
    assert code == 2


def test_unsupported_family_exit_code(tmp_path, capsys):
    # nontrivial table cocycle on a noncyclic group: valid config, unsupported engine
    from zvect.cocycles import cyclic_cocycle

    c21 = cyclic_cocycle(2, 1)
    entries = []
    for a in range(4):
        for b in range(4):
            for c in range(4):
                v = c21(a // 2, b // 2, c // 2)
                entries.append([v.order, v.exponent])
    cfg = _write(
        tmp_path,
        {
            "group": {"type": "product", "factors": [{"type": "cyclic", "n": 2}, {"type": "cyclic", "n": 2}]},
            "lambda": {"type": "table", "entries": entries},
        },
    )
    code, out = _run(capsys, ["simples", cfg])
    assert code == 3
    assert json.loads(out)["error"]["kind"] == "unsupported-family"


def test_cap_exit_code(tmp_path, capsys):
    cfg = _write(tmp_path, {"group": {"type": "cyclic", "n": 9}})
    code, out = _run(capsys, ["simples", cfg, "--cap-group-order", "8"])
    assert code == 4
    assert json.loads(out)["error"]["kind"] == "cap"


def test_genus_cap_exit_code(tmp_path, capsys):
    cfg = _write(tmp_path, Z3_NONSPH)
    code, out = _run(capsys, ["blocks", cfg, "--genus", "99"])
    assert code == 4


def test_bad_d_config(tmp_path, capsys):
    cfg = _write(
        tmp_path,
        {
            "group": {"type": "cyclic", "n": 3},
            "d": {"type": "generators", "values": [[2, 1]]},
        },
    )
    code, out = _run(capsys, ["simples", cfg])
    assert code == 2


def test_module_invocation_subprocess(tmp_path):
    import subprocess
    import sys

    cfg = _write(tmp_path, Z3_NONSPH)
    out1 = subprocess.run(
        [sys.executable, "-m", "zvect", "blocks", cfg, "--genus", "2"],
        capture_output=True, text=True,
    )
    assert out1.returncode == 0
    assert json.loads(out1.stdout)["table"] == [[0, 0], [1, 9], [2, 0]]
    out2 = subprocess.run(
        [sys.executable, "-m", "zvect", "blocks", cfg, "--genus", "2"],
        capture_output=True, text=True,
    )
    assert out1.stdout == out2.stdout  # byte-identical across processes


def test_invalid_cocycle_table_names_quadruple(tmp_path, capsys):
    from zvect.cocycles import cyclic_cocycle

    base = cyclic_cocycle(2, 1)
    entries = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                v = base(a, b, c)
                entries.append([v.order, v.exponent])
    entries[7] = [8, 1]  # corrupt (1,1,1)
    cfg = _write(
        tmp_path,
        {"group": {"type": "cyclic", "n": 2}, "lambda": {"type": "table", "entries": entries}},
    )
    code, out = _run(capsys, ["verify", cfg])
    assert code == 2
    err = json.loads(out)["error"]
    assert err["detail"]["kind"] == "cocycle-identity"
    assert len(err["detail"]["where"]) == 4
