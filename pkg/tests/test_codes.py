import random

import numpy as np
import pytest

from fibcodes.avoidance import AvoidanceGraph, CapacityError, gamma
from fibcodes.bitword import DimensionError, Word, max_run_ones, word_from_string as W
from fibcodes.codes import (
    BiasFunction,
    Code,
    CodeStream,
    NotInDomain,
    Status,
    VerificationReport,
    construct_run_avoiding_code,
    example_gamma7_code,
    hamming_code,
    is_code,
    lemma_partition_index,
    run_avoiding_bias,
    run_avoiding_bound,
    run_histogram,
    translate_code,
    vasilev_extend,
    verify_perfect_qn,
)
from oracles import all_strings, brute_force_perfect_codes, is_perfect, vasilev

C = Code.from_strings


def random_bias(rng, r):
    return BiasFunction.from_table(r, {s: rng.randint(0, 1) for s in all_strings(r)})


class TestCodeType:
    def test_sorted_and_deduplicated(self):
        c = C(["111", "000", "111"])
        assert c.strings() == ["000", "111"]
        assert len(c) == 2
        assert W("111") in c and W("011") not in c

    def test_rejects_mixed_lengths(self):
        with pytest.raises(DimensionError):
            C(["00", "000"])

    def test_equality_and_hash(self):
        assert C(["000", "111"]) == Code.from_masks(3, [7, 0])
        assert len({C(["000", "111"]), Code.from_masks(3, [0, 7])}) == 1


class TestIsCode:
    def test_examples(self):
        assert is_code(C(["000", "111"])) == (True, None)
        assert is_code(C(["000", "011"])) == (False, (W("000"), W("011")))
        assert is_code(C(["010", "101"]))[0]

    def test_smallest_witness(self):
        ok, pair = is_code(C(["0000", "0011", "1100", "1111", "0001"]))
        # masks: 0000=0, 1100=3, 0011=12, 0001=8; (0, 3) is the smallest pair
        assert not ok and pair == (W("0000"), W("1100"))

    def test_distance_two_in_gamma_needs_common_neighbour(self):
        assert not is_code(C(["1010", "0000"]), gamma(4, 2))[0]
        # 0000 and 0110 are at distance 2 in Q_4, but both middle words 0100
        # and 0010 contain 010, so in Gamma_4(010) they are 3 apart
        g = AvoidanceGraph(4, W("010"))
        code = C(["0000", "0110"])
        assert not is_code(code)[0]
        assert is_code(code, g) == (True, None)


class TestVerifyQn:
    def test_examples(self):
        assert verify_perfect_qn(C(["000", "111"])).status is Status.PERFECT
        rep = verify_perfect_qn(C(["000"]))
        # 110, 101, 011 and 111 are all undominated; 110 has the smallest mask
        assert rep.status is Status.NOT_DOMINATED and rep.witness == (W("110"),)
        assert verify_perfect_qn(C(["010", "101"])).perfect

    def test_not_code(self):
        rep = verify_perfect_qn(C(["000", "011"]))
        assert rep.status is Status.NOT_CODE
        assert rep.witness == (W("000"), W("011"))

    def test_sphere_packing_flag(self):
        assert verify_perfect_qn(hamming_code(3)).sphere_packing
        assert not verify_perfect_qn(C(["000"])).sphere_packing

    def test_agrees_with_oracle_on_all_codes_of_q3(self):
        everything = all_strings(3)
        perfect = {tuple(c) for c in brute_force_perfect_codes(everything)}
        for mask in range(1, 256):
            subset = [s for i, s in enumerate(everything) if mask >> i & 1]
            code = C(subset)
            assert verify_perfect_qn(code).perfect == (tuple(sorted(subset)) in perfect)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            verify_perfect_qn(Code.from_masks(26, [0]))

    def test_report_round_trip(self):
        rep = verify_perfect_qn(C(["000", "011"]))
        assert VerificationReport.from_kv(rep.to_kv()) == rep
        rep = verify_perfect_qn(hamming_code(3))
        assert VerificationReport.from_kv(rep.to_kv()) == rep


class TestVasilev:
    def test_small_examples(self):
        base = C(["0"])
        assert vasilev_extend(base, BiasFunction.from_table(1, {"0": 1}, default=0)) == C(["010", "101"])
        assert vasilev_extend(base, BiasFunction.zero(1)) == C(["000", "111"])
        out = vasilev_extend(C(["000", "111"]), BiasFunction.zero(3))
        assert len(out) == 16 and verify_perfect_qn(out).perfect

    def test_matches_string_oracle(self):
        rng = random.Random(7)
        for base in ([["000", "111"], ["001", "110"], ["010", "101"]]):
            table = {c: rng.randint(0, 1) for c in base}
            bias = BiasFunction.from_table(3, table, default=0)
            assert sorted(vasilev_extend(C(base), bias).strings()) == vasilev(base, table)

    def test_soundness_over_all_bases_of_q3(self):
        rng = random.Random(2024)
        bases = brute_force_perfect_codes(all_strings(3))
        assert len(bases) == 4
        for base in bases:
            for _ in range(30):
                out = vasilev_extend(C(base), random_bias(rng, 3))
                assert len(out) == 16
                assert verify_perfect_qn(out).perfect

    def test_dimension_checks(self):
        with pytest.raises(DimensionError):
            vasilev_extend(C(["000", "111"]), BiasFunction.zero(2))
        with pytest.raises(ValueError):
            vasilev_extend(C(["000", "011"]), BiasFunction.zero(3), verify_base=True)

    def test_bias_table_must_be_total(self):
        with pytest.raises(ValueError):
            BiasFunction.from_table(3, {"000": 1})


class TestHamming:
    def test_small(self):
        assert hamming_code(1) == C(["0"])
        assert hamming_code(2) == C(["000", "111"])
        h = hamming_code(3)
        assert len(h) == 16 and W("0000000") in h and W("1111111") in h

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_linear_and_perfect(self, p):
        h = hamming_code(p)
        n = h.n
        assert len(h) * (n + 1) == 1 << n
        assert 0 in h.masks
        members = set(h.masks.tolist())
        rng = random.Random(p)
        pairs = [(a, b) for a in members for b in members] if len(h) <= 16 else [
            (rng.choice(h.masks.tolist()), rng.choice(h.masks.tolist())) for _ in range(2000)
        ]
        assert all(a ^ b in members for a, b in pairs)
        assert verify_perfect_qn(h).perfect

    def test_histogram_contains_all_ones(self):
        assert run_histogram(hamming_code(3)) == {0: 1, 1: 3, 2: 8, 3: 1, 4: 2, 7: 1}

    def test_range(self):
        with pytest.raises(ValueError):
            hamming_code(0)


class TestLemma:
    def test_examples(self):
        part = lemma_partition_index(W("0000101"), 3)
        assert (part.i, part.y) == (0, "101")
        part = lemma_partition_index(W("0100001"), 3)
        assert (part.i, part.z, part.y) == (2, "0", "1")
        with pytest.raises(NotInDomain):
            lemma_partition_index(W("1010101"), 3)

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
    def test_partition_is_exact(self, m):
        n = 2 * m + 1
        # the blocks A_i built directly from their defining patterns
        blocks = {0: {"0" * (m + 1) + y for y in all_strings(m)} if m else {"0"}}
        for i in range(1, m + 1):
            zs = all_strings(i - 1) if i > 1 else [""]
            ys = all_strings(m - i) if m - i > 0 else [""]
            blocks[i] = {z + "1" + "0" * (m + 1) + y for z in zs for y in ys}
        for i in blocks:
            for j in blocks:
                if i < j:
                    assert not blocks[i] & blocks[j]
        for w in all_strings(n):
            if "0" * (m + 1) in w:
                part = lemma_partition_index(W(w), m)
                assert [i for i in blocks if w in blocks[i]] == [part.i]
                assert part.reassemble() == w
                assert len(part.z) == max(part.i - 1, 0)
            else:
                assert not any(w in b for b in blocks.values())
                with pytest.raises(NotInDomain):
                    lemma_partition_index(W(w), m)


class TestRunAvoidingBias:
    def test_examples(self):
        f1 = run_avoiding_bias(1)
        assert f1(W("000")) == 1 and f1(W("001")) == 1
        assert f1(W("100")) == 0 and f1(W("110")) == 0
        assert run_avoiding_bias(3)(W("1100001")) == 1

    def test_m0(self):
        f0 = run_avoiding_bias(0)
        assert (f0(W("0")), f0(W("1"))) == (1, 0)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_case_table(self, m):
        f = run_avoiding_bias(m)
        zeros = "0" * (m + 1)
        for w in all_strings(2 * m + 1):
            i = w.find(zeros)
            if i < 0:
                want = 0
            elif i == 0:
                want = 1
            elif i == 1:
                want = 0
            else:
                want = w[: i - 1].count("1") % 2
            assert f(W(w)) == want, w


class TestRunAvoidingCode:
    def test_p2(self):
        c = construct_run_avoiding_code(2)
        assert c == C(["010", "101"]) and c.max_run() == 1 < 3

    def test_p3(self):
        c = construct_run_avoiding_code(3)
        assert len(c) == 16
        assert run_histogram(c) == {1: 5, 2: 4, 3: 5, 4: 2}
        assert verify_perfect_qn(c).perfect

    def test_p4(self):
        c = construct_run_avoiding_code(4)
        assert len(c) == 2048
        hist = run_histogram(c)
        assert max(hist) == 11 and sum(hist.values()) == 2048
        assert hist == {1: 104, 2: 575, 3: 605, 4: 394, 5: 197, 6: 94, 7: 40,
                        8: 22, 9: 10, 10: 6, 11: 1}

    @pytest.mark.parametrize("p", [2, 3, 4])
    def test_bound_and_cardinality(self, p):
        c = construct_run_avoiding_code(p)
        assert c.max_run() < run_avoiding_bound(p)
        assert len(c) * (c.n + 1) == 1 << c.n

    def test_other_base(self):
        base = translate_code(hamming_code(3), W("0010000"))
        c = construct_run_avoiding_code(4, base=base)
        assert verify_perfect_qn(c).perfect
        assert c.max_run() < 12

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            construct_run_avoiding_code(1)
        with pytest.raises(DimensionError):
            construct_run_avoiding_code(3, base=C(["0"]))
        with pytest.raises(ValueError):
            construct_run_avoiding_code(3, base=C(["000"]))

    def test_stream_matches_materialised(self):
        streamed = construct_run_avoiding_code(4, stream=True)
        assert isinstance(streamed, CodeStream) and len(streamed) == 2048
        flat = np.concatenate(list(streamed.chunks()))
        assert np.array_equal(flat, construct_run_avoiding_code(4).masks)
        assert [str(w) for w in streamed][:2] == construct_run_avoiding_code(4).strings()[:2]


class TestTranslate:
    def test_examples(self):
        assert translate_code(C(["000", "111"]), W("010")) == C(["010", "101"])
        h = hamming_code(3)
        assert translate_code(h, Word.zeros(7)) == h
        t = W("0110010")
        assert translate_code(translate_code(h, t), t) == h
        with pytest.raises(DimensionError):
            translate_code(h, W("01"))

    def test_preserves_distances_and_perfectness(self):
        rng = random.Random(11)
        h = construct_run_avoiding_code(4)
        for _ in range(5):
            t = Word(15, rng.getrandbits(15))
            moved = translate_code(h, t)
            assert verify_perfect_qn(moved).perfect
            a = h.masks[:64]
            b = h.masks[64:128]
            before = np.bitwise_count(a ^ b)
            after = np.bitwise_count((a ^ np.uint64(t.bits)) ^ (b ^ np.uint64(t.bits)))
            assert np.array_equal(before, after)


class TestGamma7Example:
    def test_properties(self):
        c = example_gamma7_code()
        assert len(c) == 16
        assert max(max_run_ones(w) for w in c) <= 4
        assert not any(s.startswith("11111") for s in c.strings())
        assert verify_perfect_qn(c).perfect

    def test_excluded_prefixes(self):
        strings = sorted(example_gamma7_code().strings())
        assert [s for s in strings if s.startswith("011")] == ["0111011", "0111100"]
        assert "0011111" not in strings

    def test_is_translate_of_hamming(self):
        assert example_gamma7_code() == translate_code(hamming_code(3), W("0001000"))

    def test_oracle(self):
        strings = sorted(example_gamma7_code().strings())
        assert strings == vasilev(["000", "111"], {"000": 1, "111": 1})
        assert is_perfect(strings, all_strings(7))


def test_histogram_examples():
    assert run_histogram(C(["010", "101"])) == {1: 2}
    assert run_histogram([np.array([0, 7], dtype=np.uint64)]) == {0: 1, 3: 1}
