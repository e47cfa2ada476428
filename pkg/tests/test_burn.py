import json

import pytest
from hypothesis import given, strategies as st

from combburn.burn import BurningSequence, simulate_strict, verify_cover
from combburn.comb import ball, comb, path, read_edgelist


def test_path16_sequence(data_dir):
    g = read_edgelist(data_dir / "p16.edges")
    seq = BurningSequence.from_json(json.loads((data_dir / "p16_seq.json").read_text()))
    cover = verify_cover(g, seq)
    assert cover.covered and cover.uncovered == ()
    assert simulate_strict(g, seq).strict
    # fire i owns exactly its ball of radius k - i
    assert cover.burned_by[:7] == (1,) * 7 and cover.burned_by[15] == 4


def test_path16_shorter_horizon_misses_vertices():
    g = path(16)
    report = verify_cover(g, BurningSequence(3, [3, 9, 13]))
    assert not report.covered
    assert report.uncovered == (0, 6, 7, 11, 12, 14, 15)


def test_no_fire_single_vertex():
    report = verify_cover(path(1), BurningSequence(1, []))
    assert not report.covered and report.uncovered == (0,)


def test_sequence_validation():
    with pytest.raises(ValueError):
        BurningSequence(0, [])
    with pytest.raises(ValueError):
        BurningSequence(2, [0, 1, 2])
    with pytest.raises(ValueError):
        BurningSequence.from_json({"centers": []})
    with pytest.raises(ValueError):
        verify_cover(path(3), BurningSequence(2, [7]))
    with pytest.raises(ValueError):
        verify_cover(comb(2, 2), BurningSequence(2, [(3, 1)]))


def test_json_roundtrip():
    seq = BurningSequence(3, [(1, 1), (2, 2)])
    assert BurningSequence.from_json(json.loads(seq.dumps())) == seq


comb_seqs = st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 6)).flatmap(
    lambda t: st.tuples(st.just(t[0]), st.just(t[1]), st.just(t[2]),
                        st.lists(st.tuples(st.integers(1, t[0]), st.integers(1, t[1])), max_size=t[2])))


@given(comb_seqs)
def test_cover_is_union_of_balls(case):
    n, m, k, centers = case
    g = comb(n, m)
    seq = BurningSequence(k, centers)
    union = set()
    for i, c in enumerate(centers, start=1):
        union |= ball(g, c, k - i)
    report = verify_cover(g, seq)
    assert set(report.uncovered) == set(g.vertices()) - union
    assert all(t is None or t <= k for t in report.burn_time)


@given(comb_seqs)
def test_strict_process_matches_cover_when_strict(case):
    n, m, k, centers = case
    g = comb(n, m)
    seq = BurningSequence(k, centers)
    strict = simulate_strict(g, seq)
    cover = verify_cover(g, seq)
    if strict.strict:
        assert strict.burn_time == cover.burn_time
        assert strict.covered == cover.covered
    # a lost fire can only shrink what gets burned
    assert set(cover.uncovered) <= set(strict.uncovered)


@given(comb_seqs, st.randoms())
def test_cover_depends_on_order(case, rnd):
    n, m, k, centers = case
    g = comb(n, m)
    shuffled = list(centers)
    rnd.shuffle(shuffled)
    a = verify_cover(g, BurningSequence(k, centers))
    b = verify_cover(g, BurningSequence(k, shuffled))
    # radii are tied to positions, so only the multiset of (center, radius) matters
    pairs = sorted((c, k - i) for i, c in enumerate(centers, 1))
    if pairs == sorted((c, k - i) for i, c in enumerate(shuffled, 1)):
        assert a.uncovered == b.uncovered


def test_order_matters_example():
    g = path(4)
    assert verify_cover(g, BurningSequence(2, [1, 3])).covered
    report = verify_cover(g, BurningSequence(2, [3, 1]))
    assert not report.covered and report.uncovered == (0,)
