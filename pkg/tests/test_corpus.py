from fractions import Fraction

import pytest

from greechie import corpus
from greechie.diagram import parse_mmp
from greechie.structure import element_count, validate


def test_names_and_count():
    names = corpus.names()
    assert len(names) == len(set(names)) == 18
    assert names[:5] == ("35-35a", "35-35b", "35-35c", "35-35d", "35-35e")
    assert "44-44" in names and "73-73" in names


def test_get_unknown_name():
    with pytest.raises(KeyError):
        corpus.get("99-99")


def test_every_entry_parses_validates_and_counts():
    sizes = {
        "35": (35, 35), "36": (36, 36), "38": (38, 38), "44": (44, 44),
    }
    for entry in corpus.ENTRIES:
        d = entry.diagram()
        rep = validate(d)
        assert rep.greechie_admissible, entry.name
        assert rep.connected, entry.name
        assert rep.alphabet_contiguous, entry.name
        prefix = entry.name.split("-")[0]
        if prefix in sizes:
            assert (d.atom_count, d.block_count) == sizes[prefix]
    weber = corpus.diagram("73-78-ngv")
    assert (weber.atom_count, weber.block_count) == (73, 78)
    assert sorted(len(b) for b in weber.blocks)[-1] == 4  # the 123/ block
    assert (corpus.diagram("73-73").atom_count, corpus.diagram("73-73").block_count) == (73, 73)


def test_element_counts_match_claims():
    for entry in corpus.ENTRIES:
        if entry.element_count is not None:
            assert element_count(entry.diagram()) == entry.element_count, entry.name


def test_44_44_line_matches_published_form():
    line = corpus.get("44-44").mmp_line
    assert line.startswith("123,345,567,789,9AB,")
    assert line.endswith("ahC.")
    d = parse_mmp(line)
    assert d.atom_count == 44 and d.block_count == 44


def test_known_states_are_exact_states():
    from greechie.states import is_state

    d = corpus.diagram("35-35e")
    vec1, vec2 = corpus.KNOWN_STATES["35-35e"]
    assert is_state(d, vec1) and is_state(d, vec2)
    assert vec1 != vec2
    # the two published states sum to the constant 2/3 coordinatewise
    assert all(a + b == Fraction(2, 3) for a, b in zip(vec1, vec2))


def test_single_state_names():
    assert len(corpus.SINGLE_STATE_NAMES) == 16
    assert "35-35e" not in corpus.SINGLE_STATE_NAMES
    assert "73-78-ngv" not in corpus.SINGLE_STATE_NAMES
