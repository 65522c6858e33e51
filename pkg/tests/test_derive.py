"""
Unit tests for parameter derivations, propagation rules and closures.
"""

import numpy as np
import pytest

from stabilens.core.config import StabiLensConfig
from stabilens.core.errors import (
    BudgetExceeded, DimensionOverflow, DimensionUnderflow, KTooLarge, MalformedCertificate,
    NoValidExtension
)
from stabilens.core.types import DerivationRecord, QuantumParams, Rule, TheoremInputs
from stabilens.derive import (
    AMBIGUOUS_MARKER, ClosureEngine, best_extension, closure, derive_base, derive_extended,
    derive_from_theorem, extension_candidates, format_chain, infer_inputs, lengthen,
    record_from_dict, record_from_params, record_to_dict, replay_chain, subcode
)
from stabilens.partition import kmax

from .fixtures import BINARY_SEEDS, TABLE1, TABLE1_AMBIGUOUS


def binary_seeds():
    return [record_from_params(QuantumParams(q=2, N=N, K=K, D=D)) for N, K, D in BINARY_SEEDS]


def test_derive_base():
    assert derive_base(3, 10, 2, 3).key == (3, 10, 6, 3)
    with pytest.raises(DimensionOverflow):
        derive_base(3, 5, 3, 2)


def test_derive_extended():
    assert derive_extended(2, 4, 63, 6, 7).key == (2, 252, 204, 7)
    assert derive_extended(2, 4, 62, 7, 8).key == (2, 248, 192, 8)


def test_derive_from_theorem():
    record = derive_from_theorem(2, 4, 63, 6)
    assert record.params.key == (2, 252, 204, 7)
    assert record.rule is Rule.EXTENSION
    assert record.inputs == TheoremInputs(q=2, m=4, n=63, k=6)
    assert derive_from_theorem(9, 1, 55, 3).rule is Rule.BASE_HERMITIAN


def test_k_above_kmax():
    with pytest.raises(KTooLarge, match="1..7"):
        derive_from_theorem(2, 4, 63, 8)


def test_infer_inputs():
    assert infer_inputs(QuantumParams(q=4, N=152, K=124, D=8)) == TheoremInputs(q=4, m=2, n=76, k=7)
    assert infer_inputs(QuantumParams(q=2, N=251, K=200, D=7)) is None


def test_lengthen_and_subcode():
    seed = derive_from_theorem(2, 4, 63, 6)
    assert lengthen(seed).params.key == (2, 253, 204, 7)
    assert subcode(seed).params.key == (2, 252, 203, 7)
    assert subcode(seed).parent is seed
    assert lengthen(subcode(seed)).rule_path == (Rule.SUBCODE, Rule.LENGTHEN)


def test_subcode_underflow():
    record = derive_from_theorem(3, 1, 2, 1)
    assert record.params.K == 0
    with pytest.raises(DimensionUnderflow):
        subcode(record)


def test_rules_commute():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        N = int(rng.integers(2, 500))
        K = int(rng.integers(1, N + 1))
        D = int(rng.integers(1, 40))
        record = DerivationRecord(params=QuantumParams(q=2, N=N, K=K, D=D), rule=Rule.BASE_HERMITIAN)
        assert lengthen(subcode(record)).params == subcode(lengthen(record)).params


def test_closure_trivial_bounds():
    seed = derive_from_theorem(2, 4, 63, 6)
    assert [r.params for r in closure([seed], 252, 0, max_steps=0)] == [seed.params]
    assert [r.params for r in closure([seed], 252, 204)] == [seed.params]


def test_closure_of_empty_seed_list():
    assert closure([], 300, 0) == []


def test_closure_contains_binary_records():
    found = {r.params.key for r in closure(binary_seeds(), 252, 183)}
    assert {(2, N, K, D) for N, K, D, _ in TABLE1} <= found


def test_closure_markers():
    result = ClosureEngine().run(binary_seeds(), 252, 183)
    for N, K, D, marker in TABLE1:
        params = QuantumParams(q=2, N=N, K=K, D=D)
        expected = AMBIGUOUS_MARKER if (N, K, D) in TABLE1_AMBIGUOUS else marker
        assert result.marker(params) == expected, (N, K, D)


def test_closure_prefers_earlier_rule():
    result = ClosureEngine().run(binary_seeds(), 252, 183)
    record = result.get(QuantumParams(q=2, N=251, K=199, D=7))
    assert record.rule_path == (Rule.LENGTHEN, Rule.LENGTHEN, Rule.LENGTHEN, Rule.SUBCODE)
    assert record.root.params.key == (2, 248, 200, 7)


def test_closure_order_is_deterministic():
    records = closure(binary_seeds(), 252, 183)
    keys = [(-r.params.N, -r.params.K, r.params.D) for r in records]
    assert keys == sorted(keys)


def test_closure_budget():
    config = StabiLensConfig()
    config.closure.frontier_limit = 1
    with pytest.raises(BudgetExceeded):
        ClosureEngine(config).run([derive_from_theorem(2, 4, 63, 6)], 260, 0)


def test_best_extension_examples():
    record = best_extension(4, 152, 8)
    assert record.params.key == (4, 152, 124, 8)
    assert record.inputs.m == 2
    assert record.rule is Rule.BEST_EXTENSION
    assert best_extension(2, 252, 7).params.key == (2, 252, 204, 7)
    with pytest.raises(NoValidExtension):
        best_extension(3, 7, 9)


def test_extension_candidates_dominance():
    candidates = extension_candidates(2, 252, 7)
    assert candidates[0].m == 4
    Ks = [c.params.K for c in candidates]
    assert Ks == sorted(Ks, reverse=True)
    assert all(c.kmax >= 6 for c in candidates)


def test_chain_round_trip():
    record = lengthen(subcode(derive_from_theorem(2, 4, 63, 6)))
    text = format_chain(record)
    assert text == "extension(q=2,m=4,n=63,k=6);subcode;lengthen"
    again = replay_chain(text)
    assert again.params == record.params
    assert record_from_dict(record_to_dict(record)).params == record.params


def test_replay_best_extension():
    record = replay_chain("best-extension(q=4,m=2,n=76,k=7);lengthen")
    assert record.params.key == (4, 153, 124, 8)
    assert record.root.rule is Rule.BEST_EXTENSION


def test_malformed_chains():
    with pytest.raises(MalformedCertificate):
        replay_chain("lengthen")
    with pytest.raises(MalformedCertificate):
        replay_chain("base-hermitian(q=2,m=4,n=63,k=6)")
    with pytest.raises(MalformedCertificate):
        replay_chain("extension(q=2,m=4,n=63,k=6);puncture")
    with pytest.raises(MalformedCertificate):
        record_from_dict({'q': 2, 'N': 252, 'K': 200, 'D': 7, 'chain': "extension(q=2,m=4,n=63,k=6)"})


@pytest.mark.parametrize("inputs,expected", [
    ((3, 2, 55, 3), (3, 110, 98, 4)),
    ((4, 3, 255, 18), (4, 765, 657, 19)),
    ((9, 2, 162, 12), (9, 324, 276, 13)),
])
def test_derive_family_examples(inputs, expected):
    assert derive_from_theorem(*inputs).params.key == expected


def test_extended_with_m1_is_base():
    for n in range(2, 30):
        for k in range(0, n // 2 + 1):
            assert derive_extended(4, 1, n, k, k + 1) == derive_base(4, n, k, k + 1)


def test_theorem_parameter_shape():
    for q, m in [(2, 2), (3, 1), (2, 3), (4, 1), (3, 2)]:
        e = q ** m
        for n in range(2, e * e + 1):
            for k in range(1, kmax(e, n).value + 1):
                params = derive_from_theorem(q, m, n, k).params
                assert params.N == m * n
                assert params.N - params.K == 2 * m * k
                assert params.D == k + 1


def test_closure_size_monotone_in_bounds():
    seeds = [derive_from_theorem(2, 4, 63, 6)]
    sizes = {(n_max, k_min): len(closure(seeds, n_max, k_min))
             for n_max in range(252, 259) for k_min in range(196, 205)}
    for (n_max, k_min), size in sizes.items():
        if (n_max + 1, k_min) in sizes:
            assert sizes[(n_max + 1, k_min)] >= size
        if (n_max, k_min + 1) in sizes:
            assert sizes[(n_max, k_min + 1)] <= size


def test_repeated_seed_keeps_both_signatures(caplog):
    seed = derive_from_theorem(2, 4, 63, 6)
    with caplog.at_level('WARNING', logger='stabilens.derive.engine'):
        result = ClosureEngine().run([seed, seed], 253, 203)
    assert 'repeats' in caplog.text
    assert len(result.records) == 4
    assert result.signatures[seed.params.key] == frozenset({(0, 0, 0), (1, 0, 0)})
    assert result.marker(seed.params) == '*'
    lengthened = result.signatures[(2, 253, 204, 7)]
    assert {sig[0] for sig in lengthened} == {0, 1}
