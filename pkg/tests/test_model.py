from dataclasses import replace

from hypothesis import given, strategies as st

from grothext.catgen import gen_cluster_A, gen_mod_dynkin
from grothext.model import (Conflation, cancel_split_summands, direct_sum, opposite,
                            relation_vector, split_conflation, validate)

vec3 = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple)
conflations = st.builds(Conflation, vec3, vec3, vec3, st.just(False), st.booleans())


def test_a2_is_valid(a2):
    report = validate(a2)
    assert report.ok, report.violations
    assert any("ext" in n for n in report.notices)


def test_relation_vector_of_a2(a2):
    assert relation_vector(a2.conflations[0]) == (1, 1, -1)


def test_missing_ar_conflation_reported(a2):
    report = validate(a2.with_conflations([]))
    assert not report.ok
    assert "non-projective S1 has no AR conflation ending at it" in report.violations


def test_ar_flag_on_projective_end(a2):
    bad = Conflation(a2.vector(S2=1), a2.vector(S2=1), a2.vector(P1=1), ar=True)
    report = validate(a2.with_conflations(list(a2.conflations) + [bad]))
    assert any("AR conflation ends at projective P1" in v for v in report.violations)


def test_duplicate_ar_conflation_reported(a2):
    report = validate(a2.with_conflations(a2.conflations * 2))
    assert any("2 AR conflations ending" in v for v in report.violations)


def test_tau_checks(a2):
    report = validate(replace(a2, tau=(None, None, None)))
    assert "tau is undefined on non-projective S1" in report.violations
    report = validate(replace(a2, tau=(1, None, 1)))
    assert any("projective P1" in v for v in report.violations)


def test_other_violations(a2):
    assert any("duplicate" in v for v in validate(
        replace(a2, indecomposables=("S1", "S1", "P1"))).violations)
    assert any("negative" in v for v in validate(
        replace(a2, hom=((1, 0, 0), (0, -1, 1), (1, 0, 1)))).violations)
    assert any("not 3x3" in v for v in validate(replace(a2, hom=((1,),))).violations)
    assert any("permutation" in v for v in validate(replace(a2, shift=(0, 0, 1))).violations)
    triv = Conflation((0, 0, 0), (0, 0, 0), (0, 0, 0))
    assert any("trivial" in v for v in validate(
        a2.with_conflations(list(a2.conflations) + [triv])).violations)


def test_violation_order_is_deterministic(a2):
    p = replace(a2.with_conflations([]), shift=(0, 0, 1))
    assert validate(p).violations == validate(p).violations


@given(conflations)
def test_cancel_split_preserves_relation_and_is_idempotent(conf):
    reduced = cancel_split_summands(conf)
    assert relation_vector(reduced) == relation_vector(conf)
    assert cancel_split_summands(reduced) == reduced
    assert all(min(b, c) == 0 for b, c in zip(reduced.b, reduced.c))


@given(vec3, vec3)
def test_split_conflation_has_zero_relation(x, y):
    conf = split_conflation(x, y)
    assert relation_vector(conf) == (0, 0, 0)
    assert conf.rel_t and not conf.ar


@given(conflations, conflations)
def test_direct_sum_adds_relations(l, r):
    s = direct_sum(l, r)
    assert relation_vector(s) == tuple(a + b for a, b in zip(relation_vector(l), relation_vector(r)))
    assert s.rel_t == (l.rel_t and r.rel_t)
    assert not s.ar


def test_cancel_split_example():
    conf = Conflation((1, 0, 0), (1, 1, 1), (0, 1, 1))
    assert cancel_split_summands(conf) == Conflation((0, 0, 0), (0, 0, 0), (0, 0, 0))
    conf = Conflation((1, 0, 0), (1, 2, 0), (0, 1, 1))
    assert cancel_split_summands(conf) == Conflation((0, 0, 0), (0, 1, 0), (0, 0, 1))


def test_opposite_is_valid_and_involutive():
    for p in (gen_mod_dynkin("A", 3), gen_mod_dynkin("D", 4), gen_cluster_A(3)):
        op = opposite(p)
        assert validate(op).ok, validate(op).violations
        assert replace(opposite(op), name=p.name) == p


def test_describe(a2):
    assert a2.describe(a2.vector(S1=2, P1=1)) == "2*S1 + P1"
    assert a2.describe((0, 0, 0)) == "0"
    assert a2.describe_relation((1, 1, -1)) == "S1 + S2 - P1"
    assert a2.describe_relation((-2, 0, 1)) == "-2*S1 + P1"
