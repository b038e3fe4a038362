import json
import subprocess
import sys

import pytest

from uniinertia import cli
from uniinertia.graph_model import make_family, write_edge_list
from uniinertia.linalg import Inertia

U64 = write_edge_list(make_family("U", n=6, k=4))
C4B = "4\n1 2 1\n2 3 1\n3 4 1\n1 4 2\n"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_inertia_golden(capsys, edge_file):
    code, out, _ = run(capsys, "inertia", edge_file(U64), "--oracle")
    assert code == 0
    assert out == "2 2 2 4\noracle 2 2 2 4\nMATCH\n"


def test_inertia_json(capsys, edge_file):
    code, out, _ = run(capsys, "inertia", edge_file(U64), "--json")
    assert code == 0
    assert json.loads(out) == {"inertia": {"i_plus": 2, "i_minus": 2, "i_zero": 2, "rank": 4}}


def test_unit_c6_is_type_b(capsys, edge_file):
    text = write_edge_list(make_family("C", k=6))
    assert run(capsys, "inertia", edge_file(text))[1] == "3 3 0 6\n"
    assert run(capsys, "classify-cycle", edge_file(text))[1] == "k=6 type=B W=1 We=1 Wo=1\n"


def test_classify_cycle_golden(capsys, edge_file):
    code, out, _ = run(capsys, "classify-cycle", edge_file(C4B))
    assert (code, out) == (0, "k=4 type=B W=2 We=2 Wo=1\n")
    code, out, _ = run(capsys, "classify-cycle", edge_file("3\n1 2 -1\n2 3 1/2\n1 3 3\n"))
    assert (code, out) == (0, "k=3 type=C W=-3/2\n")


def test_classify_cycle_rejects_non_cycle(capsys, edge_file):
    code, _, err = run(capsys, "classify-cycle", edge_file(U64))
    assert code == 2 and "not a single cycle" in err


def test_charpoly_golden(capsys, edge_file):
    code, out, _ = run(capsys, "charpoly", edge_file(C4B), "--oracle")
    assert code == 0
    assert out == "1 0 -7 0 1\nnullity=0\noracle 1 0 -7 0 1\nMATCH\n"


def test_census_golden(capsys):
    code, out, _ = run(capsys, "census", "--order", "5", "--rank", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count=2 order=5 rank=5 total=5"
    assert lines[0].startswith("1-2,1-3,1-4,2-3,4-5 girth=3 inertia=2,3,0 ")
    assert lines[1].startswith("1-2,1-5,2-3,3-4,4-5 girth=5 inertia=3,2,0 ")
    assert all("rank_5:" in line for line in lines[:2])


def test_census_json_and_plot(capsys, tmp_path):
    png = tmp_path / "fig" / "census.png"
    code, out, _ = run(capsys, "census", "--order", "8", "--rank", "6", "--json", "--plot", str(png))
    payload = json.loads(out)
    assert code == 0 and payload["count"] == 46 and payload["total"] == 89
    assert png.exists() and png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_census_nullity(capsys):
    code, out, _ = run(capsys, "census", "--order", "4", "--nullity", "2")
    assert code == 0 and out.splitlines()[-1] == "count=1 order=4 nullity=2 total=2"


def test_verify_small_sweep(capsys, tmp_path):
    png = tmp_path / "verify.png"
    code, out, _ = run(capsys, "verify", "--order", "5", "--samples", "3", "--seed", "7", "--plot", str(png))
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "PASS" and any(l.startswith("oracle_equivalence pass=") for l in lines)
    assert png.exists()


def test_verify_detects_corrupted_engine(capsys, monkeypatch):
    import uniinertia.inertia as engine

    real = engine.inertia

    def broken(G):
        i = real(G)
        return Inertia(i.i_plus + 1, i.i_minus, i.i_zero - 1) if G.order == 5 and i.i_zero else i

    monkeypatch.setattr(engine, "inertia", broken)
    code, out, _ = run(capsys, "verify", "--order", "5", "--samples", "1", "--seed", "3")
    assert code == 1
    assert out.splitlines()[-1] == "FAIL"
    assert "FAILURE oracle_equivalence" in out


def test_inertia_mismatch_exit_code(capsys, monkeypatch, edge_file):
    monkeypatch.setattr(cli, "inertia", lambda G: Inertia(3, 3, 0))
    code, out, _ = run(capsys, "inertia", edge_file(U64), "--oracle")
    assert code == 3 and out.endswith("MISMATCH\n")


@pytest.mark.parametrize(
    "text, message",
    [
        ("2\n1 2 0\n", "zero"),
        ("2\n1 2 1/-3\n", "denominator"),
        ("2\n1 2 1\n1 2 1\n", "duplicate"),
        ("2\n1 1 1\n", "loop"),
        ("x\n", ""),
    ],
)
def test_parse_errors_exit_2(capsys, edge_file, text, message):
    code, _, err = run(capsys, "inertia", edge_file(text))
    assert code == 2 and err.startswith("error:")
    assert message in err.lower()


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "inertia", str(tmp_path / "absent.txt"))
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "--order", "5", "--rank", "3", "--nullity", "1"],
        ["census", "--order", "5"],
        ["verify", "--order", "5"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_order_limits_exit_2(capsys):
    assert run(capsys, "verify", "--order", "10", "--samples", "1", "--seed", "1")[0] == 2
    assert run(capsys, "census", "--order", "11", "--rank", "6")[0] == 2


def test_output_is_deterministic(tmp_path):
    def once(tag):
        png = tmp_path / f"v{tag}.png"
        proc = subprocess.run(
            [sys.executable, "-m", "uniinertia", "verify", "--order", "4", "--samples", "3", "--seed", "11",
             "--weighted-order", "4", "--plot", str(png)],
            capture_output=True, check=True,
        )
        return proc.stdout.replace(str(png).encode(), b"PNG"), png.read_bytes()

    assert once("a") == once("b")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4\n1 2 1\n2 3 1\n3 4 1\n1 4 1\n", "k=4 type=A W=1 We=1 Wo=1"),
        ("5\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n1 5 1\n", "k=5 type=C W=1"),
        ("3\n1 2 1\n2 3 1\n1 3 -1\n", "k=3 type=C W=-1"),
    ],
)
def test_classify_cycle_examples(capsys, edge_file, text, expected):
    assert run(capsys, "classify-cycle", edge_file(text))[1] == expected + "\n"


def test_inertia_of_single_edge(capsys, edge_file):
    assert run(capsys, "inertia", edge_file("2\n1 2 1\n"))[1] == "1 1 0 2\n"


def test_census_small_orders(capsys):
    assert run(capsys, "census", "--order", "4", "--rank", "2")[1].splitlines()[-1].startswith("count=1 ")
    assert run(capsys, "census", "--order", "3", "--rank", "3")[1].splitlines()[-1].startswith("count=1 ")


def test_verify_trivial_order(capsys):
    code, out, _ = run(capsys, "verify", "--order", "3", "--samples", "1", "--seed", "1")
    assert code == 0 and "graphs=1 " in out and "seed=1" in out and out.endswith("PASS\n")
