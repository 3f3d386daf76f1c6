import pytest

from seq2adic.adic import analyze
from seq2adic.numtheory import PrimePair
from seq2adic import verify
from seq2adic.verify import CHECK_NAMES, find_nontrivial, pairs_up_to, sweep, verify_pair


@pytest.mark.parametrize("p, q", [(3, 5), (3, 29), (13, 3)])
def test_verify_pair_passes(p, q):
    cert = verify_pair(PrimePair(p, q))
    assert cert.all_passed
    assert [c.name for c in cert.checks] == list(CHECK_NAMES)


def test_theorem_oracle_detail():
    detail = {c.name: c.detail for c in verify_pair(PrimePair(3, 29)).checks}
    assert detail["theorem_oracle"] == "d = 7 = 7*1"
    detail = {c.name: c.detail for c in verify_pair(PrimePair(13, 3)).checks}
    assert detail["theorem_oracle"] == "d = 7 = 1*7"


def test_failure_is_data_and_does_not_abort(monkeypatch):
    pair = PrimePair(3, 29)
    good = analyze(pair)
    # a tampered oracle value must surface as failures with full values
    bad = type(good)(**{**good.__dict__, "d": 49})
    monkeypatch.setattr(verify, "analyze", lambda _: bad)
    cert = verify_pair(pair)
    assert not cert.all_passed
    assert len(cert.checks) == 12
    failed = {c.name: c.detail for c in cert.checks if not c.passed}
    assert set(failed) == {"lemma2_product", "theorem_oracle"}
    assert "49" in failed["theorem_oracle"]


def test_crashing_check_is_recorded(monkeypatch):
    def boom(*args, **kwargs):
        raise ArithmeticError("simulated")

    monkeypatch.setattr(verify, "eq2_lhs_rhs", boom)
    cert = verify_pair(PrimePair(3, 5))
    eq2 = [c for c in cert.checks if c.name == "eq2"][0]
    assert not eq2.passed and "simulated" in eq2.detail
    assert sum(c.passed for c in cert.checks) == 11


def test_sweep_small_ranges():
    assert [(r.pair.p, r.pair.q) for r, _ in sweep(15)] == [(3, 5), (5, 3)]
    assert [tuple((pr.p, pr.q)) for pr in pairs_up_to(35)] == [
        (3, 5), (3, 7), (3, 11), (5, 3), (5, 7), (7, 3), (7, 5), (11, 3)]
    assert sweep(14) == []


def test_sweep_full_range_passes():
    rows = sweep(1200)
    assert len(rows) > 90
    pairs = [(r.pair.p, r.pair.q) for r, _ in rows]
    assert pairs == sorted(pairs)
    for report, cert in rows:
        assert cert.all_passed, cert
        assert len(cert.checks) == 12


def test_sweep_worker_count_independent():
    assert sweep(300, workers=1) == sweep(300, workers=4)


def test_sweep_rejects_bad_workers():
    with pytest.raises(ValueError):
        sweep(15, workers=0)


def test_find_nontrivial():
    assert find_nontrivial(15) == []
    assert PrimePair(3, 29) in find_nontrivial(87)
    assert PrimePair(13, 3) in find_nontrivial(39)
    for pr in find_nontrivial(1200):
        assert analyze(pr).d > 1
