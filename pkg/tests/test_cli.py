import csv
import io
import json

import pytest

from qdvolumes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_volume(capsys):
    code, out, _ = run(capsys, "volume", "--stratum", "2,-1^2", "--convention", "aez")
    assert code == 0 and out.strip() == "4/3 · π^2"


def test_volume_negative_leading(capsys):
    code, out, _ = run(capsys, "volume", "--stratum", "-1^4", "--json")
    j = json.loads(out)
    assert code == 0 and (j["num"], j["den"], j["pi_power"]) == (2, 1, 2)


def test_invalid_signature_is_usage_error(capsys):
    code, _, err = run(capsys, "volume", "--stratum", "3,-1")
    assert code == 2 and "usage" in err


def test_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["volume", "--bogus"])
    assert exc.value.code == 2


def test_weight_above_cap_is_compute_error(capsys):
    code, _, err = run(capsys, "volume", "--stratum", "4^2")
    assert code == 1 and "cap" in err


def test_covers_csv(capsys):
    code, out, _ = run(capsys, "covers", "--stratum", "-1^4", "--max-degree", "4")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["degree", "all_num", "all_den", "connected_num", "connected_den"]
    assert [r[0] for r in rows[1:]] == ["2", "4"]


def test_covers_torus(capsys):
    code, out, _ = run(capsys, "covers", "--torus", "", "--max-degree", "3", "--json")
    j = json.loads(out)
    assert [(r["all_num"], r["all_den"]) for r in j] == [(1, 1), (2, 1), (3, 1)]


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--stratum", "-1^4", "--terms", "4", "--json", "--fit")
    j = json.loads(out)
    assert code == 0 and len(j["coefficients"]) == 5 and j["quasimodular"]


def test_connected_expansion(capsys):
    code, out, _ = run(capsys, "connected", "--stratum", "2^2", "--terms", "6", "--expansion", "--fit")
    assert code == 0 and "Z°" in out


def test_closed_form(capsys):
    code, out, _ = run(capsys, "closed-form", "--stratum", "1^2,-1^2")
    assert code == 0 and out.strip() == "1/3 · π^4"
    code, out, err = run(capsys, "closed-form", "--hyperelliptic", "3", "0", "0")
    assert code == 0 and out.strip() == "4/3 · π^2" and "half" in err
    code, _, _ = run(capsys, "closed-form", "--stratum", "3,1,-1^4")
    assert code == 1


def test_estimate(capsys):
    code, out, _ = run(capsys, "estimate", "--stratum", "-1^4", "--D", "4", "10", "--json")
    j = json.loads(out)
    r = {e["D"]: e for e in j["estimates"]}
    assert abs(r[10]["ratio"] - 1) < abs(r[4]["ratio"] - 1) < 0.35


def test_verify_small(capsys, tmp_path):
    f = tmp_path / "t.csv"
    f.write_text("dim,genus,stratum,num,den,pi_power\n2,0,-1^4,2,1,2\n3,1,2 -1^2,5,3,2\n")
    code, out, _ = run(capsys, "verify", "--table", str(f), "--max-weight", "4")
    assert code == 1 and "PASS" in out and "FAIL" in out


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--table", str(tmp_path / "none.csv"))
    assert code == 2


def test_weight_variant_flag(capsys):
    code, _, _ = run(capsys, "volume", "--stratum", "2,-1^2", "--weight-variant", "printed", "--method", "eo")
    assert code == 1


def test_cache_info(capsys):
    code, out, _ = run(capsys, "cache", "info", "--json")
    assert code == 0 and "backend" in json.loads(out)


def test_validate_sums_small(capsys):
    code, out, _ = run(capsys, "validate-sums", "--N", "100000", "--lattice-N", "2000")
    assert "sum_odd[m=2]" in out and "quoted_asymptotic" in out
