import io
import json
import random

import pytest

from qkpt import serialize as ser
from qkpt.adelic import check_all
from qkpt.cli import main
from qkpt.cyclotomic import CycloNum
from qkpt.jfun import reconstruct_bigJ, small_j
from qkpt.lambda_ring import SymFunc
from qkpt.localseries import localize
from qkpt.moduli_oracle import trace_report
from qkpt.qseries import QRat

from randgen import laurent, positive, qrat, symfunc


@pytest.mark.parametrize("seed", range(10))
def test_round_trips(seed):
    rng = random.Random(seed)
    s = symfunc(rng, 4)
    assert ser.sym_from_json(ser.sym_to_json(s)) == s
    c = CycloNum(6, [rng.randint(-3, 3), rng.randint(-3, 3)])
    assert ser.cyclo_from_json(ser.cyclo_to_json(c)) == c
    f = qrat(rng, 4)
    assert ser.qrat_from_json(ser.qrat_to_json(f)) == f
    ls = localize(f, 3, 1, (-f.pole_order_at(3), 4))
    back = ser.series_from_json(ser.series_to_json(ls))
    assert back == ls and back.prec == ls.prec
    sol = reconstruct_bigJ(laurent(rng, 3, -1, 1, lowest=1))
    assert ser.solution_from_json(ser.solution_to_json(sol)) == sol
    rep = trace_report(2, QRat.const(positive(rng, 4)))
    assert ser.trace_from_json(ser.trace_to_json(rep)) == rep


def test_report_round_trip():
    r = check_all(small_j(SymFunc.gen(1, 3)) + QRat.one_over(1, 2, SymFunc.gen(1, 3), 3))
    assert ser.report_from_json(ser.report_to_json(r)) == r
    d = ser.report_to_json(r)
    assert d["overall"] is False and d["test_i"]["pass"] is False


def test_zero_qrat_round_trip():
    z = QRat.zero(3)
    assert ser.qrat_from_json(json.loads(ser.dumps(ser.qrat_to_json(z)))) == z


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_small_j(capsys):
    code, out, _ = run(["small-j", "--nu", "N1", "--deg", "2"], capsys)
    assert code == 0
    assert ser.qrat_from_json(json.loads(out)) == small_j(SymFunc.gen(1, 2))


def test_cli_check_pass_and_fail(capsys, tmp_path):
    code, out, _ = run(["check", "--f", "1-q"], capsys)
    assert code == 0 and json.loads(out)["overall"] is True
    d = 3
    bad = small_j(SymFunc.gen(1, d)) + QRat.one_over(1, 2, SymFunc.gen(1, d), d)
    path = tmp_path / "f.json"
    path.write_text(ser.dumps(ser.qrat_to_json(bad)))
    code, out, _ = run(["check", "--f", str(path), "--deg", "3"], capsys)
    report = json.loads(out)
    assert code == 1 and report["overall"] is False and "i" in report["failing"]


def test_cli_check_unsupported_denominator(capsys):
    code, out, _ = run(["check", "--f", "1/(1-2*q)"], capsys)
    report = json.loads(out)
    assert code == 1 and report["test_iii"] is False


def test_cli_parse_error(capsys):
    code, _, err = run(["tau", "--nu", "N1 +"], capsys)
    assert code == 2 and "position 4" in err


def test_cli_bad_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["tau", "--nu", "N1", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["tau", "--nu", "N1", "--deg", "0"])
    assert info.value.code == 2


def test_cli_oracle_compare(capsys):
    code, out, _ = run(["oracle", "--t", "N1", "--max-n", "2", "--compare"], capsys)
    assert code == 0 and json.loads(out)["equal"] is True


def test_cli_stdin(capsys, monkeypatch):
    code, out, _ = run(["pair", "--f", "-", "--g", "1/(1-q)"], capsys, "1", monkeypatch)
    assert code == 0 and ser.sym_from_json(json.loads(out)) == SymFunc.one(4)


def test_cli_expand_and_reconstruct_text(capsys):
    code, out, _ = run(["expand", "--f", "1/(1-q^2)", "--series-order", "2", "--format", "text"], capsys)
    assert code == 0 and out.startswith("[-1/2]*(q-1)^-1")
    code, out, _ = run(["reconstruct", "--t", "N1", "--format", "text"], capsys)
    assert code == 0 and "nu = N1" in out


def test_cli_deterministic(capsys):
    outs = [run(["check", "--f", "(1-q)*(1+N1/(1+q))"], capsys) for _ in range(2)]
    assert outs[0] == outs[1] and outs[0][0] == 1
