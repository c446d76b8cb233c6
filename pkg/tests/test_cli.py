import json

import pytest

from vtcodes.bounds import generate_table, prime_length_report
from vtcodes.cli import BUDGET_ENV_VAR, SplitMix64, corrupt, main
from vtcodes.core import CodeSpec, parse_word, syndrome_profile
from vtcodes.erasure import decode_erasures
from vtcodes.errors import decode_errors


def test_splitmix64_reference_sequence():
    rng = SplitMix64(0)
    assert rng.next_word() == 0xE220A8397B1DCDAF
    assert rng.next_word() == 0x6E789E6AA1B965F4
    assert rng.next_word() == 0x06C45D188009454F


def test_splitmix64_below():
    rng = SplitMix64(1234567)
    assert [rng.below(10) for _ in range(8)] == [7, 3, 3, 1, 1, 4, 7, 7]
    assert SplitMix64(5).below(1) == 0
    with pytest.raises(ValueError):
        SplitMix64(5).below(0)


def test_corrupt_golden():
    assert corrupt((0, 1, 2, 3, 4), 5, erasures=1, errors=2, seed=42) == (
        0, 1, 0, None, 0,
    )
    assert corrupt((0,) * 7, 2, erasures=2, errors=1, seed=7) == (
        0, None, None, 1, 0, 0, 0,
    )


def test_corrupt_properties():
    word = tuple(range(10))
    out = corrupt(word, 11, erasures=3, errors=4, seed=500)
    assert out == corrupt(word, 11, erasures=3, errors=4, seed=500)
    assert sum(s is None for s in out) == 3
    changed = [i for i, s in enumerate(out) if s is not None and s != word[i]]
    assert len(changed) == 4
    assert all(0 <= out[i] < 11 for i in changed)


def test_corrupt_validation():
    with pytest.raises(ValueError):
        corrupt((0, 1), 2, erasures=2, errors=1)
    with pytest.raises(ValueError):
        corrupt((0, 5), 2)
    with pytest.raises(ValueError):
        corrupt((0, 1), 2, errors=-1)


def test_cli_check(capsys):
    rc = main(["check", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,0,0,1,1"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "codeword"
    rc = main(["check", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,1,1,1,1"])
    assert rc == 1
    assert capsys.readouterr().out.strip() == "not a codeword"


def test_cli_decode_erasures(capsys):
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,?,?,1,1"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "1,0,0,1,1"


def test_cli_decode_errors(capsys):
    for extra in ([], ["--single"]):
        rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
                   "--offset", "0,0", "--word", "1,0,1,1,1"] + extra)
        assert rc == 0
        assert capsys.readouterr().out.strip() == "1,0,0,1,1"


def test_cli_decode_failure(capsys):
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,1,1,1,0"])
    assert rc == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "decode failed" in captured.err


def test_cli_decode_inconsistent_erasures(capsys):
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,?,?,0,1"])
    assert rc == 1
    assert "decode failed" in capsys.readouterr().err


def test_cli_corrupt_then_decode(capsys):
    spec = CodeSpec(5, 9, 5)
    word = (3, 1, 4, 1, 0, 2, 0, 2, 4)
    offset = syndrome_profile(word, spec)
    rc = main(["corrupt", "--q", "5", "--word", ",".join(map(str, word)),
               "--erasures", "2", "--seed", "11"])
    assert rc == 0
    masked = parse_word(capsys.readouterr().out.strip())
    assert decode_erasures(masked, spec, offset) == word
    rc = main(["corrupt", "--q", "5", "--word", ",".join(map(str, word)),
               "--errors", "2", "--seed", "13"])
    assert rc == 0
    damaged = parse_word(capsys.readouterr().out.strip())
    assert decode_errors(damaged, spec, offset) == word


def test_cli_bounds_exact_output(capsys):
    rc = main(["bounds", "--q", "4", "--n", "22", "--d", "3"])
    assert rc == 0
    assert capsys.readouterr().out == "3.67\n"


def test_cli_bounds_records(capsys):
    rc = main(["--records", "bounds", "--q", "9", "--n", "41", "--d", "3",
               "--modulus", "41"])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["redundancy_upper"] == "2.98"


def test_cli_tables_matches_library(capsys):
    rc = main(["--records", "tables", "--q", "4", "--d", "3"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    got = [json.loads(line) for line in lines]
    expected = [row.to_record() for row in generate_table(4, 3)]
    assert got == expected


def test_cli_tables_text(capsys):
    rc = main(["tables", "--q", "3", "--d", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "q=3 d=3" in out
    assert out.count("5.87") == 6


def test_cli_tables_custom_lengths(capsys):
    rc = main(["--records", "tables", "--q", "4", "--d", "3",
               "--lengths", "22,40"])
    assert rc == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["n"] for r in rows] == [22, 40]
    assert rows[1]["linear_baseline"] is None


def test_cli_intervals(capsys):
    rc = main(["intervals", "--q", "7"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "[9, 13]" in out
    assert "[58, 92]" in out


def test_cli_intervals_empty(capsys):
    rc = main(["intervals", "--q", "2"])
    assert rc == 0
    assert "empty" in capsys.readouterr().out


def test_cli_interval_report_matches_library(capsys):
    rc = main(["--records", "intervals", "--q", "17", "--d", "5"])
    assert rc == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert rows == [row.to_record() for row in prime_length_report(17, 5)]


def test_cli_search(capsys):
    rc = main(["search", "--q", "2", "--n", "5", "--d", "3"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "offset 0,0 size 3"


def test_cli_verify(capsys):
    rc = main(["verify", "--q", "2", "--n", "5", "--d", "3",
               "--property", "partition"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS partition")
    assert "instances=32" in out

    rc = main(["verify", "--q", "2", "--n", "5", "--d", "3",
               "--property", "erasure", "--offset", "0,0"])
    assert rc == 0
    assert "instances=45" in capsys.readouterr().out


def test_cli_verify_records(capsys):
    rc = main(["--records", "verify", "--q", "2", "--n", "5", "--d", "3",
               "--property", "distance"])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["passed"] is True
    assert record["property"] == "min-distance"


def test_cli_budget_refusal(capsys):
    rc = main(["verify", "--q", "2", "--n", "40", "--d", "3",
               "--property", "partition", "--budget", "1000"])
    assert rc == 2
    assert "refused" in capsys.readouterr().err


def test_cli_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "10")
    rc = main(["search", "--q", "2", "--n", "5", "--d", "3"])
    assert rc == 2
    capsys.readouterr()
    rc = main(["search", "--q", "2", "--n", "5", "--d", "3", "--budget", "100"])
    assert rc == 0


def test_cli_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["decode", "--q", "2", "--n", "5", "--d", "3"])  # missing word
    assert exc.value.code == 2


def test_cli_value_error_becomes_usage_error(capsys):
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word", "1,0,1"])  # wrong length
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_cli_decode_reports_what_changed(capsys):
    main(["decode", "--q", "2", "--n", "5", "--d", "3",
          "--offset", "0,0", "--word", "1,0,1,1,1"])
    assert "corrected 1 position(s)" in capsys.readouterr().err
    main(["decode", "--q", "2", "--n", "5", "--d", "3",
          "--offset", "0,0", "--word", "1,0,0,1,1"])
    assert "unchanged" in capsys.readouterr().err
    main(["--records", "decode", "--q", "2", "--n", "5", "--d", "3",
          "--offset", "0,0", "--word", "1,?,?,1,1"])
    record = json.loads(capsys.readouterr().out)
    assert record == {"decoded": [1, 0, 0, 1, 1], "changed": 2}


def test_cli_decode_word_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("1,?,?,1,1\n# full comment\n\n1,0,0,1,1  # already clean\n")
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word-file", str(path)])
    assert rc == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines() == ["1,0,0,1,1", "1,0,0,1,1"]
    assert "word 1: corrected 2 position(s)" in captured.err
    assert "word 4: unchanged" in captured.err


def test_cli_decode_word_file_stops_at_first_failure(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("1,0,0,1,1\n1,1,1,1,0\n0,1,1,0,1\n")
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word-file", str(path)])
    assert rc == 1
    captured = capsys.readouterr()
    assert captured.out.splitlines() == ["1,0,0,1,1"]
    assert "word 2: decode failed" in captured.err


def test_cli_check_word_file_flags_any_outsider(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("1,0,0,1,1\n1,1,1,1,1\n")
    rc = main(["check", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word-file", str(path)])
    assert rc == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["word 1: codeword", "word 2: not a codeword"]


def test_cli_corrupt_word_file_advances_seed(capsys, tmp_path):
    word = (3, 1, 4, 1, 0, 2, 0, 2, 4)
    text = ",".join(map(str, word))
    path = tmp_path / "words.txt"
    path.write_text(f"{text}\n{text}\n")
    rc = main(["corrupt", "--q", "5", "--word-file", str(path),
               "--errors", "2", "--seed", "99"])
    assert rc == 0
    first, second = capsys.readouterr().out.splitlines()
    assert parse_word(first) == corrupt(word, 5, errors=2, seed=99)
    assert parse_word(second) == corrupt(word, 5, errors=2, seed=100)


def test_cli_word_sources_are_exclusive(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("1,0,0,1,1\n")
    with pytest.raises(SystemExit) as caught:
        main(["check", "--q", "2", "--n", "5", "--d", "3", "--offset", "0,0",
              "--word", "1,0,0,1,1", "--word-file", str(path)])
    assert caught.value.code == 2
    capsys.readouterr()


def test_cli_word_file_problems_are_usage_errors(tmp_path, capsys):
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word-file", str(tmp_path / "absent.txt")])
    assert rc == 2
    assert "error" in capsys.readouterr().err
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    rc = main(["decode", "--q", "2", "--n", "5", "--d", "3",
               "--offset", "0,0", "--word-file", str(empty)])
    assert rc == 2
    assert "no words" in capsys.readouterr().err
