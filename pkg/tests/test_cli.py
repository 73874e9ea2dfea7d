import io
import json
import logging

import pytest

from wreathfock import cache
from wreathfock.characters import CharacterTable, wreath_char_table
from wreathfock.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_chartable_identity_column_is_degrees():
    code, text = invoke("chartable", "--r", "2", "--n", "2")
    assert code == 0
    table = CharacterTable.from_json(json.loads(text))
    assert len(table.labels) == 5
    assert [str(x) for x in table.degrees().values()] == ["1", "1", "2", "1", "1"]


def test_chartable_csv():
    code, text = invoke("chartable", "--r", "3", "--n", "1", "--format", "csv")
    assert code == 0
    rows = text.strip().splitlines()
    assert len(rows) == 4
    assert "z3^1" in text


def test_output_is_deterministic():
    assert invoke("structure-constants", "--r", "2", "--n", "2") == invoke("structure-constants", "--r", "2", "--n", "2")


def test_npoint_example():
    code, text = invoke("npoint", "--r", "1", "--lambda", "[[1]]", "--mu", "[[1]]", "--ks", "0", "--order", "4")
    assert code == 0
    assert json.loads(text)["text"] == "1"


def test_verify_isom1():
    code, text = invoke("verify", "--suite", "isom1", "--r", "2", "--n", "3")
    assert code == 0
    assert json.loads(text)["ok"] is True


def test_verify_seeded_suite():
    code, text = invoke("verify", "--suite", "field-axioms", "--seed", "5", "--r", "4")
    assert code == 0
    assert json.loads(text)["details"]["seed"] == 5


def test_exit_codes_for_bad_input(capsys):
    assert invoke("nonsense")[0] == 2
    assert invoke("chartable", "--r", "5", "--n", "9")[0] == 2
    assert "guard" in capsys.readouterr().err
    assert invoke("chartable", "--r", "0", "--n", "2")[0] == 2
    assert invoke("npoint", "--r", "2", "--lambda", "[[1]]", "--mu", "[[1],[]]", "--ks", "0")[0] == 2
    assert invoke("eigen", "--r", "2", "--kind", "H", "--k", "3", "--lambda", "[[1],[]]")[0] == 2
    assert invoke("heisenberg", "--r", "2", "--m", "1", "--alpha", "sigma:7", "--lambda", "[[1],[]]")[0] == 2
    assert invoke("verify", "--suite", "nope")[0] == 2
    assert invoke("npoint", "--r", "1", "--lambda", "not json", "--mu", "[[1]]", "--ks", "0")[0] == 2


def test_verify_failure_exit_code(monkeypatch):
    from wreathfock import verify

    monkeypatch.setitem(verify.SUITES, "mckay", ("forced failure", lambda **kw: (False, {})))
    assert invoke("verify", "--suite", "mckay")[0] == 3


def test_eigen_and_heisenberg_json():
    code, text = invoke("eigen", "--r", "2", "--kind", "H", "--k", "1", "--lambda", "[[1],[]]", "--order", "3")
    assert code == 0
    assert json.loads(text)["coeffs"] == ["1", "-1", "1/2", "-1/6"]
    code, text = invoke("heisenberg", "--r", "1", "--m", "-2", "--alpha", "diamond:0", "--lambda", "[[]]")
    assert code == 0
    terms = {json.dumps(t["mp"]): t["coeff"] for t in json.loads(text)["terms"]}
    assert terms == {"[[2]]": "1", "[[1, 1]]": "-1"}


def test_convolve_brute_and_fast_agree():
    f = json.dumps([{"type": [[1], [1]], "value": 1}, {"type": [[], [2]], "value": "1/2"}])
    a = invoke("convolve", "--r", "2", "--n", "2", "--f", f, "--g", f, "--method", "brute")
    b = invoke("convolve", "--r", "2", "--n", "2", "--f", f, "--g", f, "--method", "fast")
    assert a[0] == b[0] == 0
    assert json.loads(a[1])["result"] == json.loads(b[1])["result"]


def test_toda_command_succeeds():
    code, text = invoke("toda", "--r", "1", "--charges=-1,0,1")
    assert code == 0
    assert [json.loads(line)["residual_terms"] for line in text.splitlines()] == [0, 0, 0]


def test_tau_command_round_trips():
    from wreathfock.exactnum import MultiSeries

    code, text = invoke("tau", "--r", "2", "--charge", "1,0", "--order", "3")
    assert code == 0
    data = json.loads(text)
    MultiSeries.from_json(data["series"])


# --- cache -------------------------------------------------------------------


def test_cache_cold_then_warm(tmp_path, monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    t = cache.character_table(2, 2, tmp_path)
    path = tmp_path / "chartab_r2_n2.json"
    assert path.exists()
    before = path.read_bytes()
    assert cache.character_table(2, 2, tmp_path) == t
    assert path.read_bytes() == before
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_version_bump_recomputes(tmp_path, monkeypatch):
    cache.character_table(2, 2, tmp_path)
    path = tmp_path / "chartab_r2_n2.json"
    data = json.loads(path.read_text())
    data["version"] = cache.CACHE_VERSION - 1
    data["payload"]["matrix"] = []
    path.write_text(json.dumps(data))
    assert cache.character_table(2, 2, tmp_path) == wreath_char_table(2, 2)
    assert json.loads(path.read_text())["version"] == cache.CACHE_VERSION


def test_cache_corrupt_file_warns(tmp_path, caplog):
    path = tmp_path / "chartab_r1_n3.json"
    path.write_text("{not json")
    with caplog.at_level(logging.WARNING, logger="wreathfock.cache"):
        t = cache.character_table(1, 3, tmp_path)
    assert t == wreath_char_table(1, 3)
    assert "corrupt" in caplog.text
    assert json.loads(path.read_text())["version"] == cache.CACHE_VERSION


def test_env_var_overrides_cache_dir(tmp_path, monkeypatch):
    env_dir = tmp_path / "env"
    monkeypatch.setenv(cache.ENV_VAR, str(env_dir))
    code, _ = invoke("chartable", "--r", "1", "--n", "2", "--cache-dir", str(tmp_path / "flag"))
    assert code == 0
    assert (env_dir / "chartab_r1_n2.json").exists()
    assert not (tmp_path / "flag").exists()
