from itertools import product

import pytest

from caf.analysis import plus_of
from caf.compact import is_compact, witness
from caf.core import ArgumentationFramework
from caf.realization import (canonical_cf_af, ec_counterexample_search, find_exclusion_mapping,
                             is_conflict_explicit, is_independent, make_conflict_explicit, realize_stable_compact,
                             stb_of_conflict_explicit_is_independent)
from caf.semantics import MAIN_SEMANTICS, ExtensionSet, enumerate_extensions

from helpers import random_af


def E(*sets):
    return ExtensionSet.of(sets)


F1_EXTS = E({"a", "b", "c"}, {"a", "b'", "c'"}, {"a'", "b", "c'"}, {"a'", "b'", "c"},
            {"a", "b", "c'"}, {"a'", "b", "c"}, {"a", "b'", "c"})
FOUR = E({"a", "b", "c"}, {"a", "b'", "c'"}, {"a'", "b", "c'"}, {"a'", "b'", "c"})


def test_canonical_framework_examples():
    F = canonical_cf_af(E({"a", "b"}, {"c"}))
    assert F.attack_names() == {("a", "c"), ("c", "a"), ("b", "c"), ("c", "b")}
    G = canonical_cf_af(E({"a"}))
    assert G.names == ("a",) and not G.attacks
    for s in MAIN_SEMANTICS:
        assert enumerate_extensions(G, s) == E({"a"})
    with pytest.raises(ValueError):
        canonical_cf_af(E())


def test_canonical_framework_realizes_plus():
    H = canonical_cf_af(F1_EXTS)
    assert not H.loops
    assert H.attack_names() == {(b, a) for a, b in H.attack_names()}
    for s in MAIN_SEMANTICS:
        assert enumerate_extensions(H, s) == plus_of(F1_EXTS)


def test_canonical_framework_random(rng):
    for _ in range(200):
        S = enumerate_extensions(random_af(rng, max_n=6), "stb")
        if not len(S) or not S.args:
            continue
        H = canonical_cf_af(S)
        for s in MAIN_SEMANTICS:
            assert enumerate_extensions(H, s) == plus_of(S)


def test_exclusion_mapping_examples():
    m = find_exclusion_mapping(E({"a"}, {"b"}))
    assert m is not None and not m.assignment
    assert not is_independent(F1_EXTS)
    assert is_independent(E({"a", "b"}, {"c"}))


def test_intro_set_fails_for_every_single_target():
    # the only spurious set is {a',b',c'}; each of a, b, c as target breaks some wanted extension
    assert {frozenset(m) for m in (plus_of(F1_EXTS).sets() - F1_EXTS.sets())} == {frozenset({"a'", "b'", "c'"})}
    assert find_exclusion_mapping(F1_EXTS) is None


def test_exclusion_mapping_is_antisymmetric_and_induced(rng):
    found = 0
    for _ in range(300):
        S = enumerate_extensions(random_af(rng, max_n=6), "stb")
        m = find_exclusion_mapping(S)
        if m is None:
            continue
        found += 1
        pairs = m.named_pairs()
        assert not any((b, a) in pairs for a, b in pairs)
        assert all(t not in T for T, t in m.named_assignment())
    assert found > 50


def test_realize_examples():
    S = E({"a", "b"}, {"c"})
    F = realize_stable_compact(S)
    assert F.same_as(canonical_cf_af(S))
    assert enumerate_extensions(F, "stb") == S
    assert realize_stable_compact(F1_EXTS) is None
    assert realize_stable_compact(FOUR) is None
    with pytest.raises(ValueError):
        realize_stable_compact(E())
    with pytest.raises(ValueError):
        realize_stable_compact(E({"a"}, {"a", "b"}))


def test_small_sets_always_realized(rng):
    for _ in range(300):
        S = enumerate_extensions(random_af(rng, max_n=6), "stb")
        if 1 <= len(S) <= 3 and S.args:
            F = realize_stable_compact(S)
            assert F is not None and enumerate_extensions(F, "stb") == S and is_compact(F, "stb")


def test_conflict_explicit_examples():
    F = witness("sect52-cd")
    assert not is_conflict_explicit(F, "stb")
    assert is_conflict_explicit(F.with_attacks(add=[("c", "d")]), "stb")
    assert not is_conflict_explicit(witness("fig4-orientation"), "stb")


def test_reflexive_reading_flag():
    F = ArgumentationFramework.build("ab", [("a", "b")])
    assert not is_conflict_explicit(F, "stb")
    assert is_conflict_explicit(F, "stb", reflexive=False)
    G = make_conflict_explicit(F)
    assert ("b", "b") in G.attack_names()


def test_repair_two_pair_witness():
    F = witness("sect52-cd")
    G = make_conflict_explicit(F)
    added = G.attack_names() - F.attack_names()
    assert added & {("c", "d"), ("d", "c")}
    assert enumerate_extensions(G, "stb").sets() == {frozenset("ad"), frozenset("bc")}


def test_repair_orientation_witness():
    F = witness("fig4-orientation")
    G = make_conflict_explicit(F)
    assert enumerate_extensions(G, "stb") == enumerate_extensions(F, "stb")
    assert is_conflict_explicit(G, "stb")
    wrong = F.with_attacks(add=[("a1", "s")])
    assert frozenset({"a1", "a2", "a3"}) in enumerate_extensions(wrong, "stb")
    right = F.with_attacks(add=[("s", "a1")])
    assert enumerate_extensions(right, "stb") == enumerate_extensions(F, "stb")


def test_repair_needs_reorientation():
    F = witness("fig5-ec")
    S = enumerate_extensions(F, "stb")
    for i in "123":
        bad = enumerate_extensions(F.with_attacks(add=[(f"s{i}", f"a{i}")]), "stb")
        assert bad.sets() - S.sets() == {frozenset({f"s{i}", f"t{i}", f"u{i}"})}
    every = enumerate_extensions(F.with_attacks(add=[(f"a{i}", f"s{i}") for i in "123"]), "stb")
    assert frozenset({"a1", "a2", "a3"}) in every
    G = make_conflict_explicit(F)
    assert enumerate_extensions(G, "stb") == S and is_conflict_explicit(G, "stb")
    assert F.attack_names() - G.attack_names()
    assert stb_of_conflict_explicit_is_independent(G)


def test_repair_guard():
    with pytest.raises(ValueError):
        make_conflict_explicit(witness("fig5-ec"), guard=10)
    with pytest.raises(ValueError):
        make_conflict_explicit(witness("sect52-cd"), "pref")


def test_repairs_verified_random(rng):
    for _ in range(300):
        F = random_af(rng, max_n=6)
        G = make_conflict_explicit(F)
        assert G is not None
        assert enumerate_extensions(G, "stb") == enumerate_extensions(F, "stb")
        assert is_conflict_explicit(G, "stb")


def test_independence_of_explicit_frameworks():
    K2 = ArgumentationFramework.build("ab", [("a", "b"), ("b", "a")])
    assert stb_of_conflict_explicit_is_independent(K2)
    G = make_conflict_explicit(witness("sect52-cd"))
    assert stb_of_conflict_explicit_is_independent(G)
    with pytest.raises(ValueError):
        stb_of_conflict_explicit_is_independent(witness("intro-F1"))


def test_ec_search_small():
    rep = ec_counterexample_search(2)
    assert rep["tested"] == 2 + 10
    assert rep["repaired"] == rep["tested"] and rep["counterexamples"] == []
    with pytest.raises(ValueError):
        ec_counterexample_search(6)


def test_ec_search_parallel_matches_serial():
    a = ec_counterexample_search(3, threads=1)
    b = ec_counterexample_search(3, threads=2, chunk=16)
    for k in ("tested", "repaired", "already_explicit", "counterexamples"):
        assert a[k] == b[k]


def test_published_explicit_alternative():
    F = witness("fig5-ec")
    G = F.with_attacks(add=[("a1", "s1"), ("a2", "s2"), ("a3", "s3")],
                       remove=[("a1", "x_a_23"), ("a2", "x_a_13"), ("a3", "x_a_12")])
    assert enumerate_extensions(G, "stb") == enumerate_extensions(F, "stb")
    assert is_conflict_explicit(G, "stb") and is_compact(G, "stb")
