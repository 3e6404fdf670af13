import json

from triheap.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_all_moves_listing(capsys):
    code, out, _ = run_cli(capsys, "analyze", "1", "1", "1", "1", "--all-moves")
    assert code == 0
    assert "winning move: diagonal -1" in out
    # (1,1,1,1) -> P requires reaching (0,0,0,0) or (1,1,1,2)-shaped
    # positions; only the diagonal works here
    assert "1 winning move(s) in total" in out


def test_all_moves_json(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "2", "3", "4", "5", "--all-moves",
        "--format", "json-lines",
    )
    assert code == 0
    lines = out.splitlines()
    records = [json.loads(line) for line in lines[1:]]
    assert all("winning_move" in r for r in records)
    assert len(records) >= 1


def test_all_moves_cap_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "analyze", "50", "60", "70", "80", "--all-moves", "--cap", "100"
    )
    assert code == 3
    assert "resource limit" in err


def test_all_moves_empty_for_p_position(capsys):
    code, out, _ = run_cli(capsys, "analyze", "3", "3", "4", "4", "--all-moves")
    assert code == 0
    assert "0 winning move(s) in total" in out
