import json
import math

import pytest

from _oracles import trial_factorize, trial_is_prime
from vpal import (
    CANDIDATE_FLOOR,
    CheckpointCorrupt,
    DomainError,
    anchor,
    check_anchor,
    converse_identity,
    is_v_palindrome,
    length,
    primes_upto,
    reverse,
    search_anchors,
    verify_characterization,
)
from vpal import anchors as anchors_mod


class TestAnchor:
    @pytest.mark.parametrize(
        "m,p,q", [(1, 49, 47), (2, 499, 497), (4, 49999, 49997)]
    )
    def test_values(self, m, p, q):
        assert anchor(m) == (p, q)

    def test_digit_shapes(self):
        for m in range(1, 30):
            p, q = anchor(m)
            assert p - q == 2
            assert str(p) == "4" + "9" * m
            assert str(q) == "4" + "9" * (m - 1) + "7"

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            anchor(0)


class TestCheckAnchor:
    def test_small_composite_partners(self):
        r2 = check_anchor(2)
        assert r2.p_verdict.status == "prime"
        assert r2.q_verdict.status == "composite"
        assert trial_factorize(497) == [(7, 1), (71, 1)]
        assert not r2.is_candidate

        r3 = check_anchor(3)
        assert r3.p_verdict.status == "prime"
        assert r3.q_verdict.status == "composite"
        assert trial_factorize(4997) == [(19, 1), (263, 1)]
        assert not r3.is_candidate

        r4 = check_anchor(4)
        assert r4.q_verdict.status == "composite"
        assert trial_factorize(49997) == [(17, 2), (173, 1)]
        assert not r4.is_candidate

    def test_floor_flag(self):
        assert not check_anchor(3).meets_floor
        assert check_anchor(4).meets_floor
        assert check_anchor(4, floor=5).meets_floor is False

    def test_oracle_agreement_small_m(self):
        for m in range(1, 11):
            res = check_anchor(m)
            assert res.p_verdict.status == (
                "prime" if trial_is_prime(res.p) else "composite"
            )
            assert res.q_verdict.status == (
                "prime" if trial_is_prime(res.q) else "composite"
            )

    def test_candidate_definition(self):
        for m in range(1, 13):
            res = check_anchor(m)
            expected = (
                res.meets_floor
                and res.p_verdict.non_composite
                and res.q_verdict.non_composite
            )
            assert res.is_candidate == expected
            # any fully proven candidate must be a v-palindrome
            if (
                res.is_candidate
                and res.p_verdict.status == "prime"
                and res.q_verdict.status == "prime"
            ):
                assert is_v_palindrome(res.p)


class TestConverseIdentity:
    def test_small(self):
        assert converse_identity(1)  # r(49) = 94 = 2*47
        assert converse_identity(4)  # r(49999) = 99994 = 2*49997

    def test_holds_through_200(self):
        assert all(converse_identity(m) for m in range(1, 201))

    def test_closed_form(self):
        for m in (1, 5, 50):
            p, q = anchor(m)
            assert reverse(p, 10) == 10 ** (m + 1) - 6 == 2 * q


class TestSearchAnchors:
    def test_range_and_order(self):
        results = search_anchors(1, 10)
        assert [r.m for r in results] == list(range(1, 11))
        assert all(not r.is_candidate for r in results if r.m <= 4)

    def test_singleton_matches_check(self):
        assert search_anchors(4, 4) == [check_anchor(4)]

    def test_bad_range(self):
        with pytest.raises(DomainError):
            search_anchors(0, 3)
        with pytest.raises(DomainError):
            search_anchors(5, 2)

    def test_workers_match_sequential(self):
        assert search_anchors(1, 8, workers=4) == search_anchors(1, 8)

    def test_checkpoint_roundtrip(self, tmp_path):
        path = tmp_path / "search.ckpt"
        first = search_anchors(1, 5, checkpoint_path=str(path))
        lines = path.read_text().splitlines()
        header = json.loads(lines[0])
        assert header["record"] == "header"
        assert header["rounds"] == 64
        assert len(lines) == 6  # header + one record per m
        again = search_anchors(1, 5, checkpoint_path=str(path))
        assert again == first

    def test_resume_skips_recorded_indices(self, tmp_path, monkeypatch):
        path = tmp_path / "search.ckpt"
        search_anchors(1, 7, checkpoint_path=str(path))
        calls = []
        real = anchors_mod.check_anchor

        def counting(m, rounds=64, floor=CANDIDATE_FLOOR):
            calls.append(m)
            return real(m, rounds, floor)

        monkeypatch.setattr(anchors_mod, "check_anchor", counting)
        results = search_anchors(1, 9, checkpoint_path=str(path))
        assert calls == [8, 9]
        assert [r.m for r in results] == list(range(1, 10))

    def test_corrupt_checkpoint_refuses(self, tmp_path):
        path = tmp_path / "search.ckpt"
        search_anchors(1, 3, checkpoint_path=str(path))
        with open(path, "a") as fh:
            fh.write('{"record": "result", "m": 4')  # torn write
        with pytest.raises(CheckpointCorrupt):
            search_anchors(1, 5, checkpoint_path=str(path))

    def test_foreign_file_refuses(self, tmp_path):
        path = tmp_path / "other.txt"
        path.write_text("some unrelated file\n")
        with pytest.raises(CheckpointCorrupt):
            search_anchors(1, 3, checkpoint_path=str(path))

    def test_rounds_mismatch_refuses(self, tmp_path):
        path = tmp_path / "search.ckpt"
        search_anchors(1, 3, rounds=64, checkpoint_path=str(path))
        with pytest.raises(CheckpointCorrupt):
            search_anchors(1, 3, rounds=8, checkpoint_path=str(path))


class TestVerifyCharacterization:
    def test_small_bounds_empty_and_consistent(self):
        rep = verify_characterization(100)
        assert rep.brute_force_hits == []
        assert rep.characterization_hits == []
        assert rep.consistent

    def test_ten_to_five(self):
        rep = verify_characterization(10**5)
        assert rep.brute_force_hits == []
        assert rep.consistent

    def test_workers_match_sequential(self):
        seq = verify_characterization(3 * 10**6)
        par = verify_characterization(3 * 10**6, workers=4)
        assert seq == par

    def test_bound_below_two_rejected(self):
        with pytest.raises(DomainError):
            verify_characterization(1)

    def test_reversal_beyond_bound_handled(self):
        # bound not a power of ten: reversals can exceed the sieve table
        rep = verify_characterization(5 * 10**4)
        assert rep.consistent

    def test_shard_scanner_agrees_with_predicate(self):
        # the brute-force scanner must flag exactly the primes the raw
        # predicate flags, so an empty result means "none exist", not
        # "none were visible to the scanner"
        anchors_mod._init_spf(10**4)
        try:
            hits = anchors_mod._verify_shard((2, 10**4, 10**4, 10))
        finally:
            anchors_mod._SPF = None
        expected = [
            p for p in primes_upto(10**4) if is_v_palindrome(p)
        ]
        assert hits == expected

    def test_brute_hits_must_have_anchor_shape(self):
        # any prime v-palindrome ends in 9, leads with 4, and is all 9s in
        # between; the loop encodes the law and is vacuous while none exist
        rep = verify_characterization(10**6)
        for p in rep.brute_force_hits:
            s = str(p)
            assert p % 10 == 9
            assert s[0] == "4"
            assert set(s[1:]) == {"9"}
        assert rep.brute_force_hits == []

    def test_prime_digit_range_bracket(self):
        # a k+1-digit prime that is coprime to 10 and not a reversal fixed
        # point sits in [10^k + 3, 10^(k+1) - 3]
        for p in primes_upto(10**5):
            if p % 10 == 0 or reverse(p, 10) == p:
                continue
            k = length(p, 10) - 1
            assert 10**k + 3 <= p <= 10 ** (k + 1) - 3


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 3.0, 10.0])
def test_log_inequality_spot_checks(x):
    assert math.log2(10 ** (x + 1) - 1) < (x + 1) * math.log2(10)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 12])
def test_exponent_gap_spot_checks(n):
    assert (n + 1) * math.log2(10) < 10 ** (n - 1)
