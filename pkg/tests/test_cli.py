import io
import json

from src.cli import parse_and_run
from src.kontsevich.memo import CACHE_HEADER


def run(*argv):
    out = io.StringIO()
    status = parse_and_run(list(argv), out)
    return status, out.getvalue()


def test_eval_plane_cubics():
    assert run("eval", "--space", "r=2,d=3,n=0", "--monomial", "H^3 K{dA=1}^5") == (0, "-2541/4\n")


def test_eval_named_classes():
    assert run("eval", "--space", "r=2,d=2,n=1", "--monomial", "1/2 C^5 L1") == (0, "3264\n")


def test_not_a_top_product(capsys):
    status, out = run("eval", "--space", "r=2,d=3,n=0", "--monomial", "H^7")
    assert status == 3
    assert out == ""
    assert "not a top product" in capsys.readouterr().err


def test_syntax_errors_are_usage_errors(capsys):
    status, _ = run("eval", "--space", "r=2,d=3,n=0", "--monomial", "H^7 Q")
    assert status == 2
    assert "Syntax error" in capsys.readouterr().err


def test_argparse_errors():
    assert run("eval", "--space", "r=2,d=3,n=0")[0] == 2
    assert run("table", "sextics-p2")[0] == 2
    assert run()[0] == 2


def test_nd():
    assert run("nd", "4") == (0, "620\n")
    assert run("nd", "0")[0] == 3


def test_gw():
    assert run("gw", "3", "2", "2,2,2,2,2,2,2,2") == (0, "92\n")
    assert run("gw", "3", "1", "3,4")[0] == 3
    assert run("gw", "3", "1", "3,x")[0] == 2


def test_charnum_json():
    status, out = run("charnum", "--r", "2", "--d", "3", "--alpha", "2:3", "--beta", "5", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["value"] == "712"
    assert payload["query"].startswith("degree 3 rational curves in P^2")


def test_charnum_errors():
    assert run("charnum", "--r", "2", "--d", "3", "--alpha", "2:7")[0] == 3
    assert run("charnum", "--r", "2", "--d", "3", "--alpha", "two")[0] == 2


def test_cuspidal_and_oracle():
    assert run("cuspidal", "4") == (0, "2304\n")
    assert run("cuspidal", "6", "--no-verify") == (0, "156153600\n")
    assert run("cuspidal", "2")[0] == 3
    assert run("oracle", "4", "2") == (0, "504\n")


def test_conics():
    assert run("conics", "--points", "1", "--conics", "4") == (0, "816\n")
    assert run("conics", "--points", "1")[0] == 3


def test_picard_and_boundary():
    assert run("picard", "--space", "r=2,d=2,n=1") == (0, "3\n")
    assert run("picard", "--space", "r=2,d=0,n=4")[0] == 3
    assert run("boundary", "--space", "r=2,d=4,n=0") == (0, "K{dA=1}\t\t1\nK{dA=2}\t\t2\n")


def test_table_csv():
    status, out = run("table", "conics-p2", "--format", "csv", "--check-integer", "--jobs", "2")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "section,space,expression,value"
    assert 'products,"r=2,d=2,n=1",L1 K{dA=1}^5,102' in lines
    assert lines[-1] == 'conic tangency,"r=2,d=2,n=1",1/2 C^5 L1,3264'


def test_jobs_must_be_positive():
    assert run("table", "conics-p2", "--jobs", "0")[0] == 2


def test_cache_warm_and_cold_outputs_match(tmp_path):
    cache = str(tmp_path / "mbar.cache")
    cold = run("eval", "--space", "r=2,d=3,n=0", "--monomial", "H^2 K{dA=1}^6", "--cache", cache)
    with open(cache) as handle:
        assert handle.readline().strip() == CACHE_HEADER
    warm = run("eval", "--space", "r=2,d=3,n=0", "--monomial", "H^2 K{dA=1}^6", "--cache", cache)
    assert cold == warm == (0, "-8259/16\n")


def test_cache_from_environment(tmp_path, monkeypatch):
    from src.kontsevich.config import mbar_settings

    cache = tmp_path / "env.cache"
    monkeypatch.setattr(mbar_settings, "MBAR_CACHE", str(cache))
    assert run("nd", "3") == (0, "12\n")
    assert cache.exists()


def test_bad_cache_header(tmp_path):
    cache = tmp_path / "old.cache"
    cache.write_text("MBAR-CACHE v0\n")
    assert run("nd", "3", "--cache", str(cache))[0] == 4
