import json
from pathlib import Path

from maml.cli import main

VALID = '{"viewport_width":1200}\n{"type":"img","x":336,"y":15,"z":1,"w":268,"h":31,"display":true,"alt":"Alternate Text","fit":"fill","src":"https://example.com/img/abc.webp"}\n'
DANGLING = '{"viewport_width":800}\n{"type":"script","code":"on(\\"click\\",\\"button9\\"){show(\\"button9\\");}"}\n'

FIXTURES = Path(__file__).parent / "fixtures"


def run(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_validate_ok(tmp_path, capsys):
    f = tmp_path / "a.maml"
    f.write_text(VALID)
    assert run(["validate", str(f)]) == 0
    assert capsys.readouterr().err == ""


def test_validate_dangling_id(tmp_path, capsys):
    f = tmp_path / "a.maml"
    f.write_text(DANGLING)
    assert run(["validate", str(f)]) == 1
    err = capsys.readouterr().err
    assert "UnresolvedId" in err and err.count("\n") == 1


def test_validate_missing_file():
    assert run(["validate", "/nonexistent/x.maml"]) == 2


def test_fmt_check_canonical(tmp_path):
    f = tmp_path / "a.maml"
    f.write_text(VALID)
    assert run(["fmt", "--check", str(f)]) == 0


def test_fmt_rewrites_shuffled(tmp_path):
    f = tmp_path / "a.maml"
    shuffled = '{"viewport_width":1200}\n{"h":31,"w":268,"type":"img","z":1,"y":15,"x":336,"src":"https://e.com/a.png"}\n'
    f.write_text(shuffled)
    assert run(["fmt", "--check", str(f)]) == 1
    assert f.read_text() == shuffled  # --check never writes
    assert run(["fmt", str(f)]) == 0
    assert run(["fmt", "--check", str(f)]) == 0


def test_fmt_malformed(tmp_path):
    f = tmp_path / "a.maml"
    f.write_text('{"viewport_width":800}\n{oops\n')
    assert run(["fmt", str(f)]) == 1


def test_transpile_writes_html_and_manifest(tmp_path):
    f = tmp_path / "a.maml"
    f.write_text(VALID)
    out = tmp_path / "a.html"
    assert run(["transpile", str(f), "-o", str(out), "--emit-manifest"]) == 0
    html = out.read_text()
    assert "left:336px" in html
    manifest = json.loads((tmp_path / "a.assets.json").read_text())
    assert manifest == ["https://example.com/img/abc.webp"]


def test_transpile_invalid_doc_writes_nothing(tmp_path):
    f = tmp_path / "a.maml"
    f.write_text(DANGLING)
    out = tmp_path / "a.html"
    assert run(["transpile", str(f), "-o", str(out)]) == 1
    assert not out.exists()


def test_transpile_idempotent_bytes(tmp_path):
    f = tmp_path / "a.maml"
    f.write_text(VALID)
    out = tmp_path / "a.html"
    run(["transpile", str(f), "-o", str(out)])
    first = out.read_bytes()
    run(["transpile", str(f), "-o", str(out)])
    assert out.read_bytes() == first


def test_translate_golden(tmp_path):
    out = tmp_path / "basic.maml"
    snap = FIXTURES / "snapshots" / "basic.snapshot.json"
    assert run(["translate", str(snap), "-o", str(out)]) == 0
    assert out.read_text() == (FIXTURES / "snapshots" / "basic.maml").read_text()


def test_translate_empty_warns(tmp_path, capsys):
    out = tmp_path / "empty.maml"
    snap = FIXTURES / "snapshots" / "empty.snapshot.json"
    assert run(["translate", str(snap), "-o", str(out)]) == 0
    assert "warning" in capsys.readouterr().err
    assert out.read_text() == '{"viewport_width":800}\n'


def test_translate_schema_mismatch(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema":2,"viewport":{"width":100,"height":100},"root":{"tag":"body"}}')
    assert run(["translate", str(bad)]) == 1
    assert "schema" in capsys.readouterr().err


def test_analyze_identical_zero(tmp_path, capsys):
    page = tmp_path / "p.html"
    page.write_text("<html><head></head><body><p>x</p></body></html>")
    assert run(["analyze", str(page), str(page)]) == 0
    out = capsys.readouterr().out
    assert "bytes_total" in out


def test_analyze_json_flag(tmp_path, capsys):
    page = tmp_path / "p.html"
    page.write_text("<html><head></head><body><p>x</p></body></html>")
    assert run(["analyze", "--json", str(page), str(page)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["delta"]["bytes_total"] == 0


def test_analyze_malformed(tmp_path):
    page = tmp_path / "p.html"
    page.write_text("no markup at all")
    assert run(["analyze", str(page), str(page)]) == 1
