import csv
import hashlib
import io
import json

import pytest

from kdiamond import cache
from kdiamond.cache import CacheError, cache_file, get_table, load_table, store_table
from kdiamond.cli import RunConfig, main
from kdiamond.series import expand_coeffs


def run(argv):
    buf = io.StringIO()
    rc = main(argv, out=buf)
    return rc, buf.getvalue()


def digest(table):
    return hashlib.sha256(",".join(map(str, table.coeffs)).encode()).hexdigest()


def test_round_trip(tmp_path):
    t = expand_coeffs(2, 300)
    store_table(tmp_path / "t.jsonl", t)
    assert load_table(tmp_path / "t.jsonl", 2) == t
    assert list(tmp_path.iterdir()) == [tmp_path / "t.jsonl"]


def test_cache_file_is_line_json(tmp_path):
    store_table(tmp_path / "t.jsonl", expand_coeffs(1, 3))
    lines = (tmp_path / "t.jsonl").read_text().splitlines()
    assert json.loads(lines[0]) == {"format_version": 1, "k": 1, "horizon": 3}
    assert [json.loads(x) for x in lines[1:]] == [[0, "1"], [1, "3"], [2, "8"], [3, "18"]]


@pytest.mark.parametrize(
    "mutate",
    [
        lambda lines: [lines[0].replace('"format_version": 1', '"format_version": 2')] + lines[1:],
        lambda lines: [lines[0].replace('"k": 1', '"k": 2')] + lines[1:],
        lambda lines: lines[:-1],
        lambda lines: lines[:2] + ['[2, "-8"]'] + lines[3:],
        lambda lines: lines[:1] + ['[0, "2"]'] + lines[2:],
        lambda lines: [],
    ],
    ids=["version", "k", "truncated", "negative", "constant", "empty"],
)
def test_load_rejects_bad_files(tmp_path, mutate):
    path = tmp_path / "t.jsonl"
    store_table(path, expand_coeffs(1, 5))
    path.write_text("\n".join(mutate(path.read_text().splitlines())))
    with pytest.raises(CacheError):
        load_table(path, 1)


def test_missing_file_reports_path(tmp_path):
    with pytest.raises(CacheError, match="nope"):
        load_table(tmp_path / "nope.jsonl")


def test_cache_soundness_and_reuse(tmp_path, monkeypatch):
    fresh = expand_coeffs(1, 400)
    get_table(1, 200, tmp_path)
    calls = []
    real = cache.expand_coeffs

    def spy(k, N, start=None):
        calls.append((N, None if start is None else start.horizon))
        return real(k, N, start=start)

    monkeypatch.setattr(cache, "expand_coeffs", spy)
    assert digest(get_table(1, 150, tmp_path)) == digest(fresh.prefix(150))
    assert calls == []
    assert digest(get_table(1, 400, tmp_path)) == digest(fresh)
    assert calls == [(400, 200)]
    assert digest(load_table(cache_file(tmp_path, 1), 1)) == digest(fresh)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(precision_bits=32)
    with pytest.raises(ValueError):
        RunConfig(horizon=-1)
    with pytest.raises(ValueError):
        RunConfig(parallelism=0)


def test_coeffs_csv():
    assert run(["coeffs", "1"]) == (0, '"n","delta"\n0,"1"\n1,"3"\n')
    for k in ("1", "2"):
        rc, out = run(["coeffs", "0", "--k", k])
        assert list(csv.reader(io.StringIO(out)))[1:] == [["0", "1"]]


def test_coeffs_deterministic_with_cache(tmp_path):
    args = ["coeffs", "120", "--k", "2", "--cache", str(tmp_path)]
    first, second = run(args), run(args)
    assert first == second
    rc, out = run(args + ["--format", "json"])
    doc = json.loads(out)
    assert set(doc) == {"command", "config", "rows", "status"}
    assert doc["rows"][120]["delta"] == str(expand_coeffs(2, 120)[120])
    assert run(args + ["--format", "json"])[1] == out


def test_coeffs_version_mismatch_exit(tmp_path):
    path = cache_file(tmp_path, 1)
    store_table(path, expand_coeffs(1, 5))
    path.write_text(path.read_text().replace('"format_version": 1', '"format_version": 9'))
    assert run(["coeffs", "3", "--cache", str(tmp_path)])[0] == 2


def test_check_laguerre_all_true():
    rc, out = run(["check", "laguerre", "-m", "2", "--from", "12", "--to", "100"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rc == 0 and len(rows) == 89 and all(r["holds"] == "True" for r in rows)


def test_check_toeplitz_has_false_verdict():
    rc, out = run(["check", "toeplitz_det", "-m", "3", "--from", "18", "--to", "19", "--values", "--format", "json"])
    doc = json.loads(out)
    assert rc == 1 and doc["status"] == "fail"
    assert [c["holds"] for c in doc["checks"]] == [True, False]
    assert int(doc["checks"][1]["value"]) < 0


def test_check_invariant_I_from_14():
    # expected: all true on 14..100
    rc, out = run(["check", "invariant_I", "--from", "14", "--to", "100"])
    assert rc == 0


def test_check_range_errors():
    assert run(["check", "toeplitz_det", "-m", "5", "--from", "2", "--to", "10"])[0] == 2
    assert run(["check", "laguerre", "--from", "10", "--to", "5"])[0] == 2


def test_scan_rows():
    rc, out = run(["scan", "--m-max", "5", "--horizon", "5000"])
    rows = list(csv.DictReader(io.StringIO(out)))
    lag = [int(r["threshold"]) for r in rows if r["family"] == "laguerre"]
    assert rc == 0 and lag == [1, 12, 53, 132, 251]
    rc, out = run(["scan", "--k", "2", "--m-max", "5", "--horizon", "5000", "--format", "json"])
    doc = json.loads(out)
    det = [r["threshold"] for r in doc["rows"] if r["family"] == "toeplitz_det"]
    assert rc == 0 and det == [1, 1, 18, 72, 168] and doc["status"] == "ok"


def test_scan_flags_censored_row(caplog):
    rc, out = run(["scan", "--m-max", "3", "--horizon", "52"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rc == 1 and len(rows) == 6
    flagged = [r for r in rows if r["censored"] == "True"]
    assert [(r["family"], r["m"], r["threshold"]) for r in flagged] == [("laguerre", "3", "")]
    assert "below twice" in caplog.text


def test_verify_lemmas_reports_checkpoint():
    rc, out = run(["verify-bounds", "lemmas", "--format", "json"])
    doc = json.loads(out)
    assert rc == 0 and doc["status"] == "ok"
    g = [c for c in doc["checks"] if c["check"].startswith("g(28)>")]
    assert g and 26.0915 < float(g[0]["detail"]) < 26.0917


def test_verify_sandwich_and_proof_checks(tmp_path):
    rc, out = run(["verify-bounds", "sandwich", "--cache", str(tmp_path)])
    assert rc == 0 and "k=2,n=3512" in out
    rc, out = run(["verify-bounds", "proof-checks"])
    assert rc == 0
    for name in ("exp_tail", "w1<w", "phi(t)<e^t", "a_191>0", "quartic>0"):
        assert name in out


def test_bad_precision_exit():
    assert run(["verify-bounds", "lemmas", "--precision", "32"])[0] == 2
