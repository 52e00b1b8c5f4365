"""Script language tests: tokenizer diagnostics, parse and pretty-print
round trips, interpreter exit codes, JSON determinism, the CLI entry
point, and disk cache semantics."""

import json
import os

import pytest

from linkage_lab import memo
from linkage_lab.cache import DiskStore, install_cache, resolve_cache_dir
from linkage_lab.cli import main, parse_probe_spec
from linkage_lab.dsl import DslError, parse, pretty_print
from linkage_lab.fields import QQ
from linkage_lab.modules import cyclic_module
from linkage_lab.resolutions import (
    minimal_free_resolution,
    set_resolution_store,
)
from linkage_lab.rings import make_ring
from linkage_lab.runner import RunConfig, execute, report_json, report_text

FULL_SCRIPT = """\
# exercises every statement form
ring S = poly(QQ, x, y);
ring R = quotient(S, [x*y]);
module M = coker(R, twists=[0], matrix=[[x]]);
module F = coker(R, twists=[0], matrix=[]);
let L = lambda(M);
let D = transpose_wrt(M, canonical(R));
assert is_horizontally_linked(M);
assert serre_tilde(M, 1);
assert depth(M) == 1;
assert rgr(L, F) >= 1;
print hilbert(M);
print dim(L);
check THM_MS(M = M);
check PROP_T1(M = M, C = canonical(R), n = 1);
suite [THM_MS] on corpus(R, 4);
"""


# -- parsing ------------------------------------------------------------------


def test_round_trip_parse_pretty_parse():
    script = parse(FULL_SCRIPT)
    printed = pretty_print(script)
    assert parse(printed) == script
    # pretty printing is idempotent
    assert pretty_print(parse(printed)) == printed


def test_comments_and_whitespace_ignored():
    a = parse("ring S = poly(QQ, x, y);")
    b = parse("# lead\n  ring   S =\n poly( QQ , x , y ) ;  # trail\n")
    assert a == b


def test_parse_error_reports_line_and_column():
    with pytest.raises(DslError) as e:
        parse("ring S = poly(QQ, x, y)\nmodule M = coker(S);")
    assert e.value.line == 2 and e.value.col == 1
    assert ";" in e.value.expected


def test_homogeneity_error_names_offending_monomial():
    with pytest.raises(DslError) as e:
        parse("ring S = poly(QQ, x, y);\nring R = quotient(S, [x^2 + y]);")
    msg = str(e.value)
    assert "not homogeneous" in msg
    assert "monomial y has degree 1" in msg
    assert e.value.line == 2


def test_undeclared_names_are_rejected():
    with pytest.raises(DslError) as e:
        parse("module M = coker(S, twists=[0], matrix=[[x]]);")
    assert "undeclared ring" in str(e.value)
    with pytest.raises(DslError):
        parse("ring S = poly(QQ, x, y);\nlet L = lambda(M);")


def test_duplicate_declaration_rejected():
    with pytest.raises(DslError) as e:
        parse("ring S = poly(QQ, x, y);\nring S = poly(QQ, z);")
    assert "already declared" in str(e.value)


def test_unknown_statement_lists_expected():
    with pytest.raises(DslError) as e:
        parse("rings S = poly(QQ, x, y);")
    assert "suite" in e.value.expected


def test_scalar_assert_requires_comparison():
    with pytest.raises(DslError) as e:
        parse("ring S = poly(QQ, x, y);\n"
              "module M = coker(S, twists=[0], matrix=[[x]]);\n"
              "assert depth(M);")
    assert "==" in e.value.expected


def test_matrix_twist_mismatch_is_parse_error():
    with pytest.raises(DslError) as e:
        parse("ring S = poly(QQ, x, y);\n"
              "module M = coker(S, twists=[0, 1], matrix=[[x]]);")
    assert "matrix has 1 rows but 2 twists" in str(e.value)


def test_gf_field_declaration():
    script = parse("ring S = poly(GF(7), x, y);")
    assert script.statements[0].field_name == "GF(7)"
    assert parse(pretty_print(script)) == script


def test_probe_spec_parsing():
    assert parse_probe_spec("x,y;y,z") == (("x", "y"), ("y", "z"))
    assert parse_probe_spec("") == ()
    assert parse_probe_spec(" x , y ") == (("x", "y"),)


# -- execution and exit codes -------------------------------------------------


def _run(source: str, **kw):
    return execute(parse(source), RunConfig(**kw))


def test_exit_code_zero_on_pass():
    res = _run(FULL_SCRIPT)
    assert res.exit_code() == 0
    kinds = [r["kind"] for r in res.results]
    assert kinds.count("assert") == 4
    assert kinds.count("check") == 2
    assert "suite" in kinds


def test_exit_code_one_on_failed_assert():
    res = _run("ring S = poly(QQ, x, y);\n"
               "module M = coker(S, twists=[0], matrix=[[x]]);\n"
               "assert depth(M) == 7;")
    assert res.exit_code() == 1
    assert not res.results[-1]["value"]["passed"]


def test_exit_code_three_on_budget():
    # the syzygy between x^13 and y^13 has degree 26, past the default
    # Groebner pair-degree budget
    res = _run("ring S = poly(QQ, x, y);\n"
               "module M = coker(S, twists=[0], matrix=[[x^13, y^13]]);\n"
               "print depth(M);")
    assert res.exit_code() == 3
    assert res.results[-1]["kind"] == "error"


def test_exit_code_four_needs_strict():
    src = ("ring S = poly(QQ, x, y);\n"
           "ring R = quotient(S, [x*y]);\n"
           "module F = coker(R, twists=[0], matrix=[]);\n"
           "check THM_TH1(M = F, C = F, n = 1);\n")
    assert _run(src).exit_code() == 0
    assert _run(src, strict=True).exit_code() == 4


def test_exit_code_one_outranks_strict_inapplicable():
    src = ("ring S = poly(QQ, x, y);\n"
           "ring R = quotient(S, [x*y]);\n"
           "module F = coker(R, twists=[0], matrix=[]);\n"
           "check THM_TH1(M = F, C = F, n = 1);\n"
           "assert is_stable(F);\n")
    assert _run(src, strict=True).exit_code() == 1


def test_fail_fast_stops_after_first_failure():
    src = ("ring S = poly(QQ, x, y);\n"
           "module M = coker(S, twists=[0], matrix=[[x]]);\n"
           "assert depth(M) == 7;\n"
           "print depth(M);\n")
    full = _run(src)
    assert [r["kind"] for r in full.results] == ["assert", "print"]
    clipped = _run(src, fail_fast=True)
    assert [r["kind"] for r in clipped.results] == ["assert"]


def test_empty_matrix_declares_free_module():
    res = _run("ring S = poly(QQ, x, y);\n"
               "module F = coker(S, twists=[0, -1], matrix=[]);\n"
               "assert depth(F) == 2;\n")
    assert res.exit_code() == 0


def test_json_report_is_byte_identical_across_runs():
    a = report_json(_run(FULL_SCRIPT))
    b = report_json(_run(FULL_SCRIPT))
    assert a == b
    payload = json.loads(a)
    assert set(payload) == {"version", "config", "declarations", "results"}
    assert "wall" not in a and "time" not in a


def test_json_serializes_infinity_as_string():
    res = _run("ring S = poly(QQ, x, y);\n"
               "ring R = quotient(S, [x*y]);\n"
               "module M = coker(R, twists=[0], matrix=[[x]]);\n"
               "module F = coker(R, twists=[0], matrix=[]);\n"
               "print rgr(M, F);\n")
    payload = json.loads(report_json(res))
    prints = [r for r in payload["results"] if r["kind"] == "print"]
    assert prints[0]["value"] == "infinity"


def test_text_report_has_one_line_per_result():
    res = _run("ring S = poly(QQ, x, y);\n"
               "module M = coker(S, twists=[0], matrix=[[x]]);\n"
               "assert depth(M) == 1;\n")
    text = report_text(res)
    assert "assert  ok" in text
    assert text.rstrip().endswith("exit 0")


def test_unknown_theorem_id_is_script_error():
    from linkage_lab.runner import ScriptError
    with pytest.raises(ScriptError) as e:
        _run("ring S = poly(QQ, x, y);\n"
             "module M = coker(S, twists=[0], matrix=[[x]]);\n"
             "check NOT_A_THEOREM(M = M);\n")
    assert "unknown theorem id" in str(e.value)


# -- CLI entry point ----------------------------------------------------------


def test_cli_run_and_check(tmp_path, capsys):
    script = tmp_path / "demo.link"
    script.write_text(
        "ring S = poly(QQ, x, y);\n"
        "ring R = quotient(S, [x*y]);\n"
        "module M = coker(R, twists=[0], matrix=[[x]]);\n"
        "assert depth(M) == 1;\n",
        encoding="utf-8")
    assert main(["run", str(script)]) == 0
    out = capsys.readouterr().out
    assert "assert  ok" in out

    assert main(["run", str(script), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["version"]

    assert main(["check", "THM_MS", str(script), "--bind", "M=M"]) == 0
    out = capsys.readouterr().out
    assert "Verified" in out

    # bind values may be expressions and ideal lists
    assert main(["check", "PROP_T1", str(script),
                 "--bind", "M=lambda(M)", "--bind", "C=canonical(R)",
                 "--bind", "n=1"]) == 0
    capsys.readouterr()


def test_cli_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.link"
    bad.write_text("ring S = poly(QQ, x, y;\n", encoding="utf-8")
    assert main(["run", str(bad)]) == 2
    assert "parse error" in capsys.readouterr().err


def test_cli_missing_file_exit_two(capsys):
    assert main(["run", "/nonexistent/path.link"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_cli_bad_bind_exit_two(tmp_path, capsys):
    script = tmp_path / "s.link"
    script.write_text("ring S = poly(QQ, x, y);\n", encoding="utf-8")
    assert main(["check", "THM_MS", str(script), "--bind", "Mnovalue"]) == 2
    assert "NAME=VALUE" in capsys.readouterr().err


# -- disk cache ---------------------------------------------------------------


def test_disk_store_first_write_wins(tmp_path):
    store = DiskStore(str(tmp_path))
    store.save("k", {"x": 1})
    store.save("k", {"x": 2})  # append-only: ignored
    assert store.load("k") == {"x": 1}
    assert store.load("missing") is None


def test_disk_store_corruption_recovers(tmp_path, capsys):
    store = DiskStore(str(tmp_path))
    store.save("k", {"x": 1})
    path = os.path.join(str(tmp_path), "k.json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{ not json")
    assert store.load("k") is None
    assert "cache" in capsys.readouterr().err


def test_resolve_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.delenv("LINKAGE_LAB_CACHE", raising=False)
    assert resolve_cache_dir(None) is None
    assert resolve_cache_dir(str(tmp_path)) == str(tmp_path)
    monkeypatch.setenv("LINKAGE_LAB_CACHE", "/from/env")
    assert resolve_cache_dir(None) == "/from/env"
    assert resolve_cache_dir(str(tmp_path)) == str(tmp_path)


def test_cached_resolution_round_trips(tmp_path):
    T = make_ring(QQ, ["x", "y", "z"], ["y*z", "x*z", "x*y"])
    k = cyclic_module(T, ["x", "y", "z"])
    try:
        install_cache(str(tmp_path))
        memo.clear()
        cold = minimal_free_resolution(k, 4)
        cold_data = [(cold.rank(i), cold.twists_at(i)) for i in range(5)]
        memo.clear()  # force the disk store to serve the second run
        warm = minimal_free_resolution(k, 4)
        warm_data = [(warm.rank(i), warm.twists_at(i)) for i in range(5)]
        assert cold_data == warm_data
        assert any(f.endswith(".json") for f in os.listdir(str(tmp_path)))
    finally:
        set_resolution_store(None)
        memo.clear()
