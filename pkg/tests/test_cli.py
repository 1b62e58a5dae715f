import io
import json

import pytest

from flames.cli import run
from flames.oracle import InstanceSpec, gen_instance
from flames.textio import format_graph


def call(*argv):
    out = io.StringIO()
    code = run(list(map(str, argv)), stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if text else None)


def test_lambda_table(fixture_path):
    code, doc = call("lambda", fixture_path("fx2"))
    assert code == 0
    assert doc["result"]["lambda"] == {"a": "1", "v": "2", "b": "1"}
    assert doc["vertex_index"] == {"r": 0, "a": 1, "v": 2, "b": 3}
    assert doc["mode"] == "integral"


def test_verify_non_flame_exits_one(fixture_path):
    code, doc = call("verify", fixture_path("fx2"), "--against", fixture_path("fx2"))
    assert code == 1
    assert doc["result"]["is_flame"] is False
    assert doc["result"]["vertices"]["v"] == {
        "lambda_c": "2", "lambda_f": "2", "rho_f": "3"}


def test_extract_diamond_keeps_everything(fixture_path):
    code, doc = call("extract", fixture_path("fx1"))
    assert code == 0
    assert doc["result"]["flame"] == {"0": "1", "1": "1", "2": "1", "3": "1"}
    assert doc["result"]["kept_edges"] == [0, 1, 2, 3]


def test_extract_fractional_reports_ratios(fixture_path):
    code, doc = call("extract", fixture_path("fx5"), "--order", "a,v")
    assert code == 0 and doc["mode"] == "fractional"
    assert doc["result"]["flame"] == {"0": "1/2", "1": "1/2", "2": "1/3"}
    assert doc["order"] == ["a", "v"]


def test_extract_then_verify_round_trip(tmp_path):
    for seed in range(15):
        mode = ["unit", "integral", "rational"][seed % 3]
        D, c = gen_instance(InstanceSpec(6, 14, mode, seed=seed))
        graph = tmp_path / f"g{seed}.graph"
        graph.write_text(format_graph(D, c))
        out = io.StringIO()
        assert run(["extract", str(graph), "--shuffle-seed", str(seed)], stdout=out) == 0
        result = tmp_path / f"f{seed}.json"
        result.write_text(out.getvalue())
        code, doc = call("verify", graph, "--against", result)
        assert code == 0 and doc["result"]["preserves"]


def test_greedoid_check(fixture_path):
    code, doc = call("greedoid-check", fixture_path("fx3"))
    assert code == 0
    assert doc["result"]["family_size"] == 3
    assert doc["result"]["downward_closed"] is False


def test_greedoid_check_size_bound(fixture_path):
    code, doc = call("greedoid-check", fixture_path("fx2"), "--max-edges", "3")
    assert code == 3 and doc is None


def test_decompose(fixture_path):
    code, doc = call("decompose", fixture_path("fx5"), "--sink", "v")
    assert code == 0
    paths = sorted((p["vertices"], p["weight"]) for p in doc["result"]["paths"])
    assert paths == [(["r", "a", "v"], "1/2"), (["r", "v"], "1/3")]
    assert doc["result"]["amount"] == "5/6"


def test_augment_integral(fixture_path, tmp_path):
    H = tmp_path / "h.graph"
    H.write_text("root r\narc r a 1\narc a v 0\n")
    code, doc = call("augment", fixture_path("fx3"), "--flame", H, "--vertex", "v")
    assert code == 0
    assert doc["result"]["step"]["edge"] == 1
    assert doc["result"]["still_flame"] is True


def test_augment_fractional(fixture_path):
    code, doc = call("augment", fixture_path("fx6"), "--mode", "fractional",
                     "--flame", fixture_path("fx6_y"), "--vertex", "u",
                     "--fractional")
    assert code == 0
    step = doc["result"]["step"]
    assert (step["edge"], step["epsilon"], step["tight_set"]) == (2, "1", ["a", "u"])


@pytest.mark.parametrize("text", [
    "root r\narc r a 1/0\n", "arc r a\n", "root r\narc r a\narc a a\n"])
def test_input_errors_exit_two(tmp_path, capsys, text):
    path = tmp_path / "bad.graph"
    path.write_text(text)
    code, doc = call("lambda", path)
    assert code == 2 and doc is None
    assert "line" in capsys.readouterr().err


def test_unknown_vertex_exits_two(fixture_path, capsys):
    code, _ = call("decompose", fixture_path("fx1"), "--sink", "zz")
    assert code == 2
    assert "unknown vertex" in capsys.readouterr().err


def test_integral_mode_refuses_fractions(fixture_path):
    code, _ = call("lambda", fixture_path("fx5"), "--mode", "integral")
    assert code == 2


def test_root_in_edge_warning(tmp_path, capsys):
    path = tmp_path / "g.graph"
    path.write_text("root r\narc r a\narc a r\n")
    code, doc = call("lambda", path)
    assert code == 0 and len(doc["warnings"]) == 1
    assert "warning" in capsys.readouterr().err
