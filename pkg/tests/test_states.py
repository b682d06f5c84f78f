from fractions import Fraction

import pytest

from greechie import corpus
from greechie.diagram import MmpDiagram, parse_mmp
from greechie.errors import Infeasible, LengthMismatch, NotAdmissible, NotValidated
from greechie.lattice import ATOM, ZERO
from greechie.states import (
    Classification,
    admits_classically_strong,
    admits_strong_01_set,
    admits_strong_set,
    atom_range,
    classify_states,
    enumerate_01_states,
    is_state,
)
from greechie.structure import validate
from conftest import random_admissible, random_diagram
from oracles import brute_01_states, polytope_vertices, strong_set_by_vertices

F = Fraction
PENTAGON = "123,345,567,789,9A1."


def test_is_state_published_vectors():
    d = corpus.diagram("35-35e")
    for vec in corpus.KNOWN_STATES["35-35e"]:
        assert is_state(d, vec)


def test_is_state_uniform_third_on_3_uniform(rng):
    for _ in range(50):
        d = random_diagram(rng)
        assert is_state(d, [F(1, 3)] * d.atom_count)


def test_is_state_rejections():
    d = parse_mmp("123.")
    assert not is_state(d, [F(1, 2)] * 3)
    assert not is_state(d, [F(2), F(-1), F(0)])
    with pytest.raises(LengthMismatch):
        is_state(d, [F(1)])


def test_classify_single_block():
    s = classify_states(parse_mmp("123."))
    assert s.classification is Classification.MORE_THAN_ONE
    assert s.atom_ranges == ((F(0), F(1)),) * 3
    assert is_state(parse_mmp("123."), s.witness_state)
    assert is_state(parse_mmp("123."), s.second_witness)
    assert s.witness_state != s.second_witness


def test_classify_requires_validity():
    with pytest.raises(NotValidated):
        classify_states(MmpDiagram(4, ((0, 1, 2),)))


def test_classify_corpus_single_state_lattices():
    for name in ("35-35a", "36-36", "38-38e", "44-44", "73-73"):
        s = classify_states(corpus.diagram(name))
        assert s.classification is Classification.EXACTLY_ONE
        assert set(s.unique_state) == {F(1, 3)}


def test_classify_weber_original_has_no_states():
    s = classify_states(corpus.diagram("73-78-ngv"))
    assert s.classification is Classification.NONE


def test_classify_35_35e_and_witnesses():
    d = corpus.diagram("35-35e")
    s = classify_states(d)
    assert s.classification is Classification.MORE_THAN_ONE
    assert is_state(d, s.witness_state) and is_state(d, s.second_witness)


def test_classification_agrees_with_vertex_enumeration(rng):
    seen = {Classification.EXACTLY_ONE: 0, Classification.MORE_THAN_ONE: 0}
    for _ in range(120):
        d = random_diagram(rng, max_atoms=9, max_blocks=5)
        rep = validate(d)
        if not (rep.mmp_i and rep.mmp_ii and rep.mmp_iii):
            continue
        s = classify_states(d)
        verts = polytope_vertices(d)
        if s.classification is Classification.NONE:
            assert not verts
        elif s.classification is Classification.EXACTLY_ONE:
            assert verts == {s.unique_state}
            seen[s.classification] += 1
        else:
            assert len(verts) >= 2
            seen[s.classification] += 1
    assert seen[Classification.MORE_THAN_ONE] > 0


def test_atom_range_examples():
    d = parse_mmp("123.")
    assert atom_range(d, 0) == (F(0), F(1))
    assert atom_range(corpus.diagram("35-35a"), 0) == (F(1, 3), F(1, 3))
    pent = parse_mmp(PENTAGON)
    verts = polytope_vertices(pent)
    lo = min(v[0] for v in verts)
    hi = max(v[0] for v in verts)
    assert (lo, hi) == (F(0), F(1))
    assert atom_range(pent, 0) == (lo, hi)
    with pytest.raises(Infeasible):
        atom_range(corpus.diagram("73-78-ngv"), 0)


def test_enumerate_01_states_single_block():
    states = enumerate_01_states(parse_mmp("123."))
    assert len(states) == 3
    assert states == brute_01_states(parse_mmp("123."))


def test_enumerate_01_states_pentagon():
    pent = parse_mmp(PENTAGON)
    states = enumerate_01_states(pent)
    assert len(states) == 11
    assert states == brute_01_states(pent)


def test_enumerate_01_states_corpus_single_state_empty():
    assert enumerate_01_states(corpus.diagram("35-35a")) == []


def test_enumerate_01_states_matches_brute_force(rng):
    for _ in range(80):
        d = random_diagram(rng, max_atoms=10, max_blocks=5)
        rep = validate(d)
        if not (rep.mmp_i and rep.mmp_ii and rep.mmp_iii):
            continue
        assert enumerate_01_states(d) == brute_01_states(d)


def test_admits_strong_set_boolean_block():
    rep = admits_strong_set(parse_mmp("123."))
    assert rep.admits and rep.witness_pair is None
    assert strong_set_by_vertices(parse_mmp("123."))


def test_admits_strong_set_pentagon_with_oracle():
    pent = parse_mmp(PENTAGON)
    assert admits_strong_set(pent).admits == strong_set_by_vertices(pent) == True  # noqa: E712


def test_admits_strong_set_oracle_random(rng):
    decided = {True: 0, False: 0}
    for _ in range(40):
        d = random_admissible(rng, max_blocks=4)
        if not validate(d).greechie_admissible or d.atom_count > 12:
            continue
        got = admits_strong_set(d).admits
        assert got == strong_set_by_vertices(d)
        decided[got] += 1
    assert decided[True] > 0


def test_admits_strong_set_single_state_failure_shape():
    rep = admits_strong_set(corpus.diagram("35-35a"))
    assert not rep.admits
    x, y = rep.witness_pair
    # no state puts 1 on any atom, so the first atom fails against zero
    assert x.kind == ATOM and x.atom == 0
    assert y.kind == ZERO


def test_admits_strong_set_requires_admissibility():
    with pytest.raises(NotAdmissible):
        admits_strong_set(parse_mmp("123,345,567,781."))


def test_admits_strong_01_set_examples():
    assert admits_strong_01_set(parse_mmp("123.")).admits
    rep = admits_strong_01_set(corpus.diagram("35-35a"))
    assert not rep.admits  # no 0-1 states at all
    pent = parse_mmp(PENTAGON)
    assert admits_strong_01_set(pent).admits  # decided over its 11 states


def test_strong_set_monotonicity(rng):
    # a subset of the states can only fail more pairs
    for _ in range(30):
        d = random_admissible(rng, max_blocks=4)
        if not validate(d).greechie_admissible:
            continue
        if not admits_strong_set(d).admits:
            assert not admits_strong_01_set(d).admits


def _subset_is_strong(d, states):
    from greechie.lattice import build_oml
    from greechie.states import _element_form, _form_value, _incomparable_pairs

    poset = build_oml(d)
    forms = {id(e): _element_form(poset, e) for e in poset.elements}
    vals = [{id(e): _form_value(forms[id(e)], s) for e in poset.elements} for s in states]
    for x, y in _incomparable_pairs(poset):
        ones = [v for v in vals if v[id(x)] == 1]
        if not ones or all(v[id(y)] == 1 for v in ones):
            return False
    return True


def test_maximality_reduction_subsets_fail_too(rng):
    # Deciding against the set of ALL states really does rule out every
    # nonempty subset.  With a unique state the one candidate subset is
    # checked outright; with several states, sampled subsets are checked
    # by direct exact evaluation.
    d = corpus.diagram("35-35a")
    assert not admits_strong_set(d).admits
    unique = classify_states(d).unique_state
    assert not _subset_is_strong(d, [unique])  # the only nonempty subset

    e = corpus.diagram("35-35e")
    assert not admits_strong_set(e).admits
    v1, v2 = corpus.KNOWN_STATES["35-35e"]
    mix = tuple((a + b) / 2 for a, b in zip(v1, v2))
    assert is_state(e, mix)
    third = tuple(F(1, 3) for _ in range(35))
    for subset in ([v1], [v2], [mix], [v1, v2], [v1, v2, mix, third]):
        assert not _subset_is_strong(e, subset)


def test_full_state_set_is_strong_when_decision_is_positive(rng):
    # the converse side of the reduction, on vertex-enumerable diagrams
    checked = 0
    for _ in range(25):
        d = random_admissible(rng, max_blocks=4)
        if not validate(d).greechie_admissible or d.atom_count > 12:
            continue
        if admits_strong_set(d).admits:
            assert _subset_is_strong(d, sorted(polytope_vertices(d)))
            checked += 1
    assert checked > 0


def test_admits_classically_strong():
    assert admits_classically_strong(MmpDiagram(0, ()))  # the 0 < 1 chain
    assert not admits_classically_strong(parse_mmp("123."))
    assert not admits_classically_strong(corpus.diagram("35-35e"))


def test_every_witness_is_exact(rng):
    for _ in range(40):
        d = random_diagram(rng, max_atoms=9, max_blocks=4)
        rep = validate(d)
        if not (rep.mmp_i and rep.mmp_ii and rep.mmp_iii):
            continue
        s = classify_states(d)
        for w in (s.unique_state, s.witness_state, s.second_witness):
            if w is not None:
                assert is_state(d, w)
