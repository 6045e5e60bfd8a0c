import io
import json
import subprocess
import sys

import pytest

from hypercount import characters
from hypercount.census import clear_cache
from hypercount.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_chi():
    code, text = call("chi", "--lambda", "3,1", "--mu", "2,2")
    assert code == 0 and json.loads(text) == {"value": -1}


def test_split():
    code, text = call("split", "--theta", "6,6,4,4,4,3,3", "--m", "3")
    out = json.loads(text)
    assert code == 0
    assert out["splittable"] is True
    assert out["components"] == [[1, 1], [2, 2], [2, 1, 1]]
    assert out["sign"] in (1, -1)


def test_split_absent():
    code, text = call("split", "--theta", "1", "--m", "2")
    assert json.loads(text)["components"] is None


def test_frobenius():
    code, text = call("frobenius", "--alpha", "1,1", "--beta", "2", "--beta", "2")
    assert code == 0 and json.loads(text)["count"] == 1


def test_coeffs():
    code, text = call("coeffs", "--m", "3", "--order", "2")
    rows = json.loads(text)
    assert [r["ks"] for r in rows] == [[0, 2], [1, 1], [2, 0]]
    assert rows[0]["d"] == 9 and rows[0]["c"] == 3


def test_count():
    code, text = call("count", "--kind", "constellation", "--m", "2", "--n", "2", "--genus", "0")
    out = json.loads(text)
    assert code == 0 and out["count"] == 3
    assert out["query"]["kind"] == "constellation"
    code, text = call("count", "--kind", "hypermap", "--m", "2", "--n", "2", "--genus", "0", "--degrees", "2")
    assert json.loads(text)["count"] == 2


def test_count_rejects_marks():
    assert call("count", "--kind", "hypermap", "--m", "2", "--n", "2", "--genus", "0", "--marks", "1")[0] == 2
    assert call("count", "--kind", "constellation", "--m", "2", "--n", "2", "--genus", "0", "--marks", "1,1")[0] == 2


def test_census_and_oracle_agree():
    _, a = call("census", "--kind", "hypermap", "--m", "2", "--n", "3")
    _, b = call("oracle", "--kind", "hypermap", "--m", "2", "--n", "3")
    assert a == b


def test_oracle_budget():
    code, _ = call("oracle", "--kind", "constellation", "--m", "3", "--n", "5", "--budget", "10")
    assert code == 2


def test_verify_relation():
    code, text = call("verify", "relation", "--m", "2", "--n-max", "3", "--g-max", "1")
    out = json.loads(text)
    assert code == 0 and out["failures"] == [] and out["cases"]


def test_verify_littlewood():
    code, text = call("verify", "littlewood", "--m", "2", "--max-size", "6")
    assert code == 0 and json.loads(text)["failures"] == []


def test_asymptotics_csv():
    code, text = call("asymptotics", "--m", "2", "--g", "1", "--n", "1,2,3,4")
    assert code == 0
    assert text == "n,numerator,denominator\n3,13,4\n4,131,60\n"


def test_fraction_rendering():
    from fractions import Fraction
    from hypercount.cli import render

    assert render({"r": Fraction(3, 4), "k": Fraction(2)}) == '{"r": "3/4", "k": 2}\n'


@pytest.mark.parametrize("argv", [
    ["chi", "--lambda", "3,1", "--mu", "2"],
    ["chi", "--lambda", "1,3", "--mu", "2,2"],
    ["nonsense"],
    ["--threads", "0", "chi", "--lambda", "1", "--mu", "1"],
    ["count", "--kind", "hypermap", "--m", "1", "--n", "1", "--genus", "0"],
])
def test_bad_input_exit_code(argv):
    assert call(*argv)[0] == 2


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, text = call("--output", str(target), "chi", "--lambda", "2", "--mu", "1,1")
    assert code == 0 and text == ""
    assert json.loads(target.read_text()) == {"value": 1}


@pytest.mark.parametrize("argv", [
    ["census", "--kind", "constellation", "--m", "3", "--n", "3"],
    ["census", "--kind", "hypermap", "--m", "2", "--n", "4"],
    ["oracle", "--kind", "constellation", "--m", "2", "--n", "4"],
    ["verify", "littlewood", "--m", "3", "--max-size", "9"],
    ["verify", "relation", "--m", "2", "--n-max", "4", "--g-max", "2", "--degrees", "1,2"],
    ["asymptotics", "--m", "3", "--g", "1", "--n", "1,2,3"],
])
def test_thread_count_determinism(argv):
    outputs = set()
    for threads in ("1", "8"):
        clear_cache()
        outputs.add(call("--threads", threads, *argv)[1])
    assert len(outputs) == 1


def test_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path / "cache"))
    code, text = call("chi", "--lambda", "4,2,1", "--mu", "3,3,1")
    assert code == 0
    path = characters.cache_path()
    assert path.exists()
    fresh = characters.CharacterTable()
    assert fresh.load(path)
    assert fresh.chi((4, 2, 1), (3, 3, 1)) == json.loads(text)["value"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypercount", "chi", "--lambda", "3,1", "--mu", "2,2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"value": -1}
