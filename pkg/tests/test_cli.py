"""End-to-end runs of the command line through main(argv)."""

import pytest

from paretokd.cli import main

SAMPLE_ROWS = "2\t7\n3\t9\n4\t3\n5\t8\n7\t5\n6\t4\n8\t6\n9\t2\n"

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "points.tsv"
    path.write_text(SAMPLE_ROWS)
    return str(path)


def test_maxima_default_algorithm(sample_file, capsys):
    assert main(["maxima", "--input", sample_file]) == 0
    out, err = capsys.readouterr()
    # Discovery order of the two-pass method: newest arrivals first.
    assert out == "9\t2\n8\t6\n5\t8\n3\t9\n"
    assert "points=8 maxima=4" in err
    assert "scalar_comparisons=" in err and "dominated_calls=" in err


def test_maxima_naive_keeps_input_order(sample_file, capsys):
    assert main(["maxima", "--input", sample_file, "--algo", "naive"]) == 0
    out, _ = capsys.readouterr()
    assert out == "3\t9\n5\t8\n8\t6\n9\t2\n"


def test_maxima_accepts_blank_lines_and_spaces(tmp_path, capsys):
    path = tmp_path / "loose.txt"
    path.write_text("\n1 5\n\n  5 1 \n3 3\n")
    assert main(["maxima", "--input", str(path), "--algo", "naive"]) == 0
    out, _ = capsys.readouterr()
    assert out == "1\t5\n5\t1\n3\t3\n"


def test_layers_rows(sample_file, capsys):
    for method in ("maxima", "naive", "deb"):
        assert main(["layers", "--input", sample_file, "--method", method]) == 0
        out, err = capsys.readouterr()
        assert out.splitlines() == [
            "1\t3\t9",
            "1\t5\t8",
            "1\t8\t6",
            "1\t9\t2",
            "2\t2\t7",
            "2\t7\t5",
            "3\t6\t4",
            "4\t4\t3",
        ]
        assert "layers=4" in err


def test_mlcs_both_engines(tmp_path, capsys):
    path = tmp_path / "seqs.txt"
    path.write_text("aabbc\nabac\n")
    for engine in ("hakata-imai", "maxima"):
        assert main(["mlcs", "--input", str(path), "--engine", engine]) == 0
        out, _ = capsys.readouterr()
        assert out.splitlines() == ["3\tabc", "layer_sizes\t1,2,1"]


def test_bench_stdout_and_determinism(capsys):
    argv = [
        "bench", "--dist", "hypercube", "--dim", "2",
        "--n", "50", "--n", "100", "--trials", "3",
        "--algos", "naive,2phase", "--seed", "7",
    ]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    lines = first.splitlines()
    assert lines[0] == (
        "algorithm,distribution,d,n,trials,avg_scalar_comparisons_per_point,"
        "avg_dominated_calls,avg_maxima,avg_records,seed"
    )
    assert len(lines) == 5
    assert lines[1].startswith("naive,hypercube,2,50,3,")


def test_bench_out_file_and_figures(tmp_path, capsys):
    out_csv = tmp_path / "bench.csv"
    fig_dir = tmp_path / "figs"
    assert main([
        "bench", "--dist", "simplex-solid", "--dim", "3",
        "--n", "32", "--n", "64", "--n", "128", "--trials", "2",
        "--algos", "2phase,2phase-sieve", "--seed", "1",
        "--out", str(out_csv), "--figures", str(fig_dir),
    ]) == 0
    out, err = capsys.readouterr()
    assert out == ""
    text = out_csv.read_text()
    assert text.startswith("algorithm,")
    assert len(text.splitlines()) == 7
    for name in ("comparisons_per_point.png", "tree_call_ratio.png"):
        data = (fig_dir / name).read_bytes()
        assert data[:8] == PNG_MAGIC
        assert f"figs/{name}" in err


def test_expect_output(capsys):
    assert main([
        "expect", "--model", "hypercube-maxima", "--dim", "10", "--n", "100",
    ]) == 0
    out, _ = capsys.readouterr()
    model, n, dim, value = out.strip().split("\t")
    assert (model, n, dim) == ("hypercube-maxima", "100", "10")
    assert round(float(value)) == 94


def test_expect_all_models_run(capsys):
    for model in ("hypercube-maxima", "simplex-maxima", "hypercube-records"):
        assert main(["expect", "--model", model, "--dim", "3", "--n", "10"]) == 0
        value = float(capsys.readouterr().out.strip().split("\t")[3])
        assert value >= 1.0


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out == "paretokd 0.1.0\n"


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["maxima"]) == 1
    assert main(["maxima", "--input", "x.tsv", "--algo", "quickhull"]) == 1
    assert main(["expect", "--model", "poisson", "--dim", "2", "--n", "5"]) == 1
    capsys.readouterr()


def test_bench_unknown_algorithm_exits_1(capsys):
    assert main([
        "bench", "--dist", "hypercube", "--dim", "2", "--n", "10",
        "--algos", "2phase,bogus",
    ]) == 1
    assert "unknown algorithm" in capsys.readouterr().err


def test_missing_input_file_exits_2(capsys):
    assert main(["maxima", "--input", "/no/such/file.tsv"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_malformed_rows_exit_2(tmp_path, capsys):
    cases = {
        "bad.tsv": ("1\t2\nfoo\t3\n", ":2: non-numeric"),
        "ragged.tsv": ("1\t2\n3\t4\t5\n", ":2: expected 2 coordinates, got 3"),
        "nan.tsv": ("1\t2\nnan\t3\n", ":2: non-finite"),
        "inf.tsv": ("inf\t3\n", ":1: non-finite"),
    }
    for name, (content, fragment) in cases.items():
        path = tmp_path / name
        path.write_text(content)
        assert main(["maxima", "--input", str(path)]) == 2
        assert fragment in capsys.readouterr().err


def test_sequence_file_errors_exit_2(tmp_path, capsys):
    single = tmp_path / "one.txt"
    single.write_text("abc\n")
    assert main(["mlcs", "--input", str(single)]) == 2
    assert "need at least 2 sequences" in capsys.readouterr().err

    extended = tmp_path / "wide.txt"
    extended.write_text("abc\nabç\n")
    assert main(["mlcs", "--input", str(extended)]) == 2
    assert ":2: non-ASCII" in capsys.readouterr().err
