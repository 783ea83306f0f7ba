import json

import pytest

from thompson_leavitt import cli, thompson


def _write(tmp_path, name, sym):
    p = tmp_path / name
    p.write_text(sym.text(), encoding="utf-8")
    return str(p)


def test_compose_identity(tmp_path, capsys):
    e = _write(tmp_path, "e.sym", thompson.identity_symbol(2, 1))
    assert cli.main(["compose", e, e]) == 0
    out = capsys.readouterr().out
    assert out == "g n=2 r=1\n1. -> 1.\n"


def test_compose_with_inverse_gives_identity(tmp_path, capsys):
    a = thompson.random_symbol(3, 2, 5, seed=61)
    fa = _write(tmp_path, "a.sym", a)
    finv = _write(tmp_path, "ainv.sym", thompson.invert(a))
    assert cli.main(["compose", fa, finv]) == 0
    got = thompson.parse_symbol(capsys.readouterr().out)
    assert thompson.equals(got, thompson.identity_symbol(3, 2))


def test_compose_round_trips_through_text(tmp_path, capsys):
    a = thompson.random_symbol(2, 1, 6, seed=62)
    b = thompson.random_symbol(2, 1, 6, seed=63)
    fa = _write(tmp_path, "a.sym", a)
    fb = _write(tmp_path, "b.sym", b)
    assert cli.main(["compose", fa, fb]) == 0
    got = thompson.parse_symbol(capsys.readouterr().out)
    assert thompson.equals(got, thompson.compose(a, b))


COMPOSE_GOLDEN = (
    "g n=2 r=1\n1.1111 -> 1.12\n1.1112 -> 1.112\n1.112 -> 1.222222\n"
    "1.121 -> 1.2222212\n1.122 -> 1.222211\n1.21 -> 1.222212\n"
    "1.2211 -> 1.221\n1.22121 -> 1.21\n1.221221 -> 1.2221\n"
    "1.221222 -> 1.111\n1.222 -> 1.2222211\n")


def test_compose_golden_output(tmp_path, capsys):
    # frozen regression fixture: exact canonical text, not just equality
    fa = _write(tmp_path, "a.sym", thompson.random_symbol(2, 1, 6, seed=62))
    fb = _write(tmp_path, "b.sym", thompson.random_symbol(2, 1, 6, seed=63))
    assert cli.main(["compose", fa, fb]) == 0
    assert capsys.readouterr().out == COMPOSE_GOLDEN


def test_compose_rejects_parameter_mismatch(tmp_path, capsys):
    fa = _write(tmp_path, "a.sym", thompson.identity_symbol(2, 1))
    fb = _write(tmp_path, "b.sym", thompson.identity_symbol(3, 1))
    assert cli.main(["compose", fa, fb]) == 2
    assert "mismatch" in capsys.readouterr().err


def test_compose_reports_parse_line(tmp_path, capsys):
    bad = tmp_path / "bad.sym"
    bad.write_text("g n=2 r=1\n1.1 -> 1.2\n1.2 -> oops\n", encoding="utf-8")
    ok = _write(tmp_path, "e.sym", thompson.identity_symbol(2, 1))
    assert cli.main(["compose", str(bad), ok]) == 2
    assert "line 3" in capsys.readouterr().err


def test_classify_exit_codes_and_text(capsys):
    assert cli.main(["classify", "--n", "4", "--r", "1", "--m", "4", "--s", "2"]) == 0
    assert capsys.readouterr().out.strip() == "isomorphic"
    assert cli.main(["classify", "--n", "3", "--r", "1", "--m", "3", "--s", "2"]) == 1
    assert capsys.readouterr().out.strip() == "not-isomorphic"


def test_classify_json(capsys):
    assert cli.main(["--json", "classify", "--n", "2", "--r", "3",
                     "--m", "2", "--s", "7"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["isomorphic"] is True
    assert data["verdict"] == "isomorphic"


def test_classify_rejects_bad_parameters(capsys):
    assert cli.main(["classify", "--n", "1", "--r", "1", "--m", "2", "--s", "1"]) == 2


def test_map_identity_to_identity(tmp_path, capsys):
    e = _write(tmp_path, "e.sym", thompson.identity_symbol(4, 1))
    assert cli.main(["map", e, "--n", "4", "--r", "1", "--s", "2"]) == 0
    got = thompson.parse_symbol(capsys.readouterr().out)
    assert thompson.equals(got, thompson.identity_symbol(4, 2))


def test_map_matches_library(tmp_path, capsys):
    from thompson_leavitt import iso
    g = thompson.random_symbol(4, 1, 4, seed=64)
    fg = _write(tmp_path, "g.sym", g)
    assert cli.main(["--json", "map", fg, "--n", "4", "--r", "1", "--s", "2",
                     "--emit-matrix"]) == 0
    data = json.loads(capsys.readouterr().out)
    f = iso.group_iso(4, 1, 2)
    assert thompson.equals(thompson.parse_symbol(data["symbol"]), f(g))
    assert data["image_matrix"]["rows"] == 2


def test_map_gcd_mismatch_exits_nonzero(tmp_path, capsys):
    e = _write(tmp_path, "e.sym", thompson.identity_symbol(3, 1))
    assert cli.main(["map", e, "--n", "3", "--r", "1", "--s", "2"]) == 1
    assert "gcd" in capsys.readouterr().err


def test_verify_words_suite(capsys):
    assert cli.main(["verify", "words", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "words" in out and "all pass" in out


def test_verify_json_schema(capsys):
    assert cli.main(["--json", "verify", "words"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert data["suites"][0]["name"] == "words"
    assert data["suites"][0]["failed"] == 0


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nosuch"])
    assert exc.value.code == 2


def test_verify_single_generator_search(capsys):
    assert cli.main(["verify", "iso", "--d", "2", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "generation verified: True" in out
