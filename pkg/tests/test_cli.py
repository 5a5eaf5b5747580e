"""CLI: generation determinism, multiplication, benchmarking, exit codes."""

import pytest

from adaptpoly.cli import main
from adaptpoly.textio import read_poly_file


def run(args):
    return main(args)


def test_gen_deterministic(tmp_path):
    a = tmp_path / "a.poly"
    b = tmp_path / "b.poly"
    args = ["gen", "--family", "chunky", "--seed", "5", "--chunks", "4",
            "--chunk-len", "8", "--gap-len", "20"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_spaced_exponents_congruent(tmp_path):
    out = tmp_path / "s.poly"
    assert run(["gen", "--family", "spaced", "--spacing", "10", "--core-len", "5",
                "--noise", "0", "--seed", "1", "--out", str(out)]) == 0
    _, f = read_poly_file(str(out))
    exps = f.exponents()
    assert len(exps) == 5
    assert len({e % 10 for e in exps}) == 1


def test_gen_sparse_single_term(tmp_path):
    out = tmp_path / "t.poly"
    assert run(["gen", "--family", "random-sparse", "--terms", "1", "--seed", "9",
                "--out", str(out)]) == 0
    _, f = read_poly_file(str(out))
    assert f.term_count() == 1


def _gen_pair(tmp_path, family="chunky", seeds=(1, 2), **params):
    paths = []
    for i, seed in enumerate(seeds):
        path = tmp_path / f"in{i}.poly"
        args = ["gen", "--family", family, "--seed", str(seed), "--out", str(path)]
        for key, val in params.items():
            args += [f"--{key.replace('_', '-')}", str(val)]
        assert run(args) == 0
        paths.append(str(path))
    return paths


def test_mul_auto_matches_dense_byte_for_byte(tmp_path):
    a, b = _gen_pair(tmp_path, chunks=3, chunk_len=6, gap_len=30)
    out1 = tmp_path / "auto.poly"
    out2 = tmp_path / "dense.poly"
    assert run(["mul", a, b, "--algo", "auto", "--model", "karatsuba",
                "--out", str(out1)]) == 0
    assert run(["mul", a, b, "--algo", "dense", "--model", "karatsuba",
                "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_mul_identity_echoes_input(tmp_path):
    a, _ = _gen_pair(tmp_path, family="random-dense", degree=12)
    one = tmp_path / "one.poly"
    one.write_text("poly v1 mod 9973\ndense 1\n")
    out = tmp_path / "o.poly"
    assert run(["mul", a, str(one), "--out", str(out)]) == 0
    assert out.read_text() == open(a).read()


def test_mul_stats_record(tmp_path):
    a, b = _gen_pair(tmp_path, family="random-sparse", terms=5, degree=200)
    stats = tmp_path / "stats.txt"
    assert run(["mul", a, b, "--algo", "auto", "--out", str(tmp_path / "p.poly"),
                "--stats", str(stats)]) == 0
    text = stats.read_text()
    assert "strategy=" in text and "mul_count=" in text and "cost.sparse=" in text


def test_mul_modulus_mismatch_exit_3(tmp_path):
    a = tmp_path / "a.poly"
    b = tmp_path / "b.poly"
    a.write_text("poly v1 mod 97\ndense 1 2\n")
    b.write_text("poly v1 mod 101\ndense 1 2\n")
    assert run(["mul", str(a), str(b)]) == 3


def test_mul_parse_error_exit_2(tmp_path):
    a = tmp_path / "a.poly"
    b = tmp_path / "b.poly"
    a.write_text("not a poly\n")
    b.write_text("poly v1 mod 97\ndense 1\n")
    assert run(["mul", str(a), str(b)]) == 2


def test_mul_capacity_exit_4(tmp_path):
    a = tmp_path / "a.poly"
    a.write_text("poly v1 mod 97\ndense " + " ".join(["1"] * 200) + "\n")
    assert run(["mul", str(a), str(a), "--algo", "dense", "--cap", "100"]) == 4


def test_bench_counts_deterministic(tmp_path):
    matrix = tmp_path / "matrix.txt"
    matrix.write_text(
        "# demo matrix\n"
        "family=chunky chunks=4 chunk_len=8 gap_len=40 seed_a=1 seed_b=2 "
        "algos=dense,sparse,chunky,auto model=schoolbook\n"
        "family=spaced spacing=6 core_len=20 seed_a=3 algos=eqspace,dense\n"
    )
    t1 = tmp_path / "t1.tsv"
    t2 = tmp_path / "t2.tsv"
    assert run(["bench", str(matrix), "--out", str(t1)]) == 0
    assert run(["bench", str(matrix), "--out", str(t2)]) == 0

    def strip_wall(path):
        lines = path.read_text().splitlines()
        assert lines[0] == "instance\tstrategy\tmodel_cost\tmul_count\tadd_count\twall_time_s"
        return [line.rsplit("\t", 1)[0] for line in lines[1:]]

    assert strip_wall(t1) == strip_wall(t2)
    assert len(strip_wall(t1)) == 6


def test_bench_chunky_beats_dense_on_gapped_family(tmp_path):
    matrix = tmp_path / "m.txt"
    matrix.write_text(
        "family=chunky chunks=10 chunk_len=10 gap_len=500 seed_a=1 seed_b=2 "
        "algos=dense,chunky model=schoolbook\n"
    )
    out = tmp_path / "t.tsv"
    assert run(["bench", str(matrix), "--out", str(out)]) == 0
    rows = [line.split("\t") for line in out.read_text().splitlines()[1:]]
    muls = {row[1]: int(row[3]) for row in rows}
    assert muls["chunky"] <= muls["dense"]


def test_bench_trivial_instance_single_mul(tmp_path):
    matrix = tmp_path / "m.txt"
    matrix.write_text(
        "family=random-sparse terms=1 degree=50 seed_a=1 seed_b=2 algos=sparse\n"
    )
    out = tmp_path / "t.tsv"
    assert run(["bench", str(matrix), "--out", str(out)]) == 0
    row = out.read_text().splitlines()[1].split("\t")
    assert row[3] == "1"  # one coefficient product for a 1x1-term instance


def test_bench_bad_matrix_exit_2(tmp_path):
    matrix = tmp_path / "m.txt"
    matrix.write_text("family=chunky\n")  # missing algos
    assert run(["bench", str(matrix)]) == 2


def test_kbench_smoke(tmp_path):
    out = tmp_path / "k.tsv"
    assert run(["kbench", "--sizes", "64,128", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "kernel\top\tn\tseconds\tmuls"
    assert len(lines) > 2


def test_cli_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["mul"])
    assert exc.value.code == 2
