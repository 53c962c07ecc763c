from itertools import product

import networkx as nx
import pytest

from caf.analysis import component_structure
from caf.compact import witness
from caf.core import ArgumentationFramework
from caf.counting import (achievable_counts, count_profile, extremal_af, prime_factor_count, product_realizable,
                          realize_count_noncompact, sigma_max, sigma_max_2, sigma_max_con, triage)
from caf.semantics import ExtensionSet, enumerate_extensions, enumerate_masks, oracle_enumerate

from helpers import random_af


def test_sigma_max_values():
    assert sigma_max(8) == 18
    assert sigma_max(0) == sigma_max(1) == 1
    assert sigma_max(7) == 12


def test_sigma_max_con_values():
    assert sigma_max_con(8) == 15
    assert sigma_max_con(5) == 5
    assert sigma_max_con(9) == 22


def test_sigma_max_2_values():
    assert sigma_max_2(8) == 16
    assert sigma_max_2(7) == 11
    assert sigma_max_2(10) == 33
    with pytest.raises(ValueError):
        sigma_max_2(0)


def test_profile_invariants():
    for n in range(1, 40):
        p = count_profile(n)
        assert p.sigma_max_2 < p.sigma_max
        assert p.sigma_max_con <= p.sigma_max


@pytest.mark.parametrize("n", range(2, 13))
def test_extremal_af(n):
    assert len(enumerate_masks(extremal_af(n), "stb")) == sigma_max(n)


def test_extremal_af_shapes():
    assert len(extremal_af(7).attacks) == 6 + 12
    assert len(extremal_af(2).attacks) == 2
    with pytest.raises(ValueError):
        extremal_af(1)


def _labelled_counts_oracle(n):
    """Stable counts of compact connected frameworks, scanning every labelled relation."""
    out = set()
    names = "abcd"[:n]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for bits_ in product([0, 1], repeat=len(pairs)):
        atts = frozenset(p for p, b in zip(pairs, bits_) if b)
        F = ArgumentationFramework(tuple(names), atts)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from((a, b) for a, b in atts if a != b)
        if not nx.is_connected(g):
            continue
        S = oracle_enumerate(F, "stb")
        if S.args == F.full:
            out.add(len(S))
    return out


def test_achievable_counts_examples():
    assert achievable_counts(2) == {2}
    assert achievable_counts(1) == {1}
    assert achievable_counts(3) == {2, 3}
    assert achievable_counts(3) == _labelled_counts_oracle(3)


def test_achievable_counts_four_against_oracle():
    assert achievable_counts(4) == {2, 3, 4} == _labelled_counts_oracle(4)


def test_achievable_counts_guard():
    with pytest.raises(ValueError):
        achievable_counts(5)


def test_realize_count_noncompact_examples():
    F = realize_count_noncompact(8, 17)
    S = enumerate_extensions(F, "stb")
    assert len(S) == 17 and len(S.arg_names()) == 8
    K3 = realize_count_noncompact(3, 3)
    assert len(K3) == 3 and len(K3.attacks) == 6
    G = realize_count_noncompact(6, 8)
    assert len(G) == 7
    with pytest.raises(ValueError):
        realize_count_noncompact(3, 4)


def test_prime_factor_count():
    assert [prime_factor_count(k) for k in (1, 2, 4, 12, 17, 64)] == [0, 1, 2, 3, 1, 6]


def test_product_rule_forces_eight():
    assert not product_realizable(4, [2, 2, 2])
    assert product_realizable(8, [2, 2, 2])


def E(*sets):
    return ExtensionSet.of(sets)


def test_triage_intro_parity():
    v = triage(enumerate_extensions(witness("intro-F1"), "stb"))
    assert v.impossible and v.rule == "parity"


def test_triage_gap():
    v = triage(enumerate_extensions(witness("sect4-F2"), "stb"))
    assert v.impossible and v.rule == "sigma-max-2-gap"
    assert "16 < 17 < 18" in v.reason


def test_triage_four_selections():
    S = E({"a", "b", "c"}, {"a", "b'", "c'"}, {"a'", "b", "c'"}, {"a'", "b'", "c"})
    v = triage(S)
    assert v.impossible and v.rule == "factorization"
    assert [len(b) for b in component_structure(S)] == [2, 2, 2]


def test_triage_sigma_max_rule():
    assert triage(E({"a"}, {"b"}, {"c"}, {"a", "b"})).rule == "sigma-max"
    assert triage(E({"a"}, {"b"}, {"c"}, {"d"})).outcome == "realized"


def test_triage_prime_rule():
    # 23 of the 27 one-per-block selections over three blocks of three
    blocks = [[f"{p}{i}" for i in range(1, 4)] for p in "abc"]
    drop = [{"a1", "b1", "c1"}, {"a2", "b2", "c2"}, {"a3", "b3", "c3"}, {"a1", "b2", "c3"}]
    sets = [set(t) for t in product(*blocks) if set(t) not in drop]
    S = E(*sets)
    assert [len(b) for b in component_structure(S)] == [3, 3, 3]
    assert sigma_max_con(9) == 22 < 23 < sigma_max_2(9)
    assert triage(S).rule == "prime"


def test_triage_product_rule():
    # two components of size 4 (path-shaped conflicts); 10 = 2 * 5 needs a factor 5 from four arguments
    side_a = [{"a1", "a3"}, {"a1", "a4"}, {"a2", "a4"}]
    side_b = [{"b1", "b3"}, {"b1", "b4"}, {"b2", "b4"}]
    sets = [x | y for x in side_a for y in side_b] + [{"a1", "a3", "b2"}]
    S = E(*sets)
    assert len(S) == 10
    assert sorted(len(b) for b in component_structure(S)) == [4, 4]
    v = triage(S)
    assert v.rule == "product"


def test_product_rule_interval_above_guard():
    assert product_realizable(5, [5], guard=4)
    assert not product_realizable(7, [5], guard=4)


def test_triage_degenerate_and_signature():
    assert triage(E()).rule == "degenerate"
    assert triage(E(set())).rule == "degenerate"
    assert triage(E({"a"}, {"a", "b"})).rule == "signature"


def test_triage_realizes():
    v = triage(E({"a", "b"}, {"c"}))
    assert v.outcome == "realized"
    assert enumerate_extensions(v.framework, "stb") == E({"a", "b"}, {"c"})


def test_triage_unknown_for_other_semantics():
    v = triage(E({"a", "b"}, {"c"}), "pref")
    assert v.outcome == "unknown"


def test_triage_never_rejects_compact_frameworks(rng):
    for _ in range(400):
        F = random_af(rng, max_n=7)
        S = enumerate_extensions(F, "stb")
        if len(S) and S.args == F.full:
            v = triage(S)
            assert not v.impossible, (F, v)
