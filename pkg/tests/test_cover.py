import pytest

from conftest import brute_force_rho, mono
from spreadcover.bounds import ggr_bounds
from spreadcover.cover import (
    GREEDY,
    MANDATORY,
    CliqueCover,
    UpwardClique,
    cliques_containing,
    cover_from_bases,
    frequencies,
    greedy_cover,
    is_minimal,
    mandatory_bases,
    prune,
    upward_clique,
    verify_cover,
)
from spreadcover.errors import ContractViolationError, InvalidArgumentError
from spreadcover.monomials import enumerate_monomials


def test_upward_clique_examples():
    assert upward_clique(mono(1, 1, 0), 3) == {mono(2, 1, 0), mono(1, 2, 0), mono(1, 1, 1)}
    assert upward_clique(mono(2, 0, 0), 3) == {mono(3, 0, 0), mono(2, 1, 0), mono(2, 0, 1)}
    for n in (2, 4):
        base = mono(*([4] + [0] * (n - 1)))
        assert mono(*([5] + [0] * (n - 1))) in upward_clique(base, n)


def test_cliques_containing():
    assert [c.base for c in cliques_containing(mono(1, 2, 0))] == [mono(0, 2, 0), mono(1, 1, 0)]
    assert [c.base for c in cliques_containing(mono(0, 4, 0))] == [mono(0, 3, 0)]
    assert len(cliques_containing(mono(1, 1, 1))) == 3
    with pytest.raises(InvalidArgumentError):
        cliques_containing(mono(0, 0))


def test_cover_rejects_wrong_degree_base():
    with pytest.raises(InvalidArgumentError):
        CliqueCover(3, 3, [UpwardClique(mono(1, 0, 0))])


def test_frequencies_example(example_cover_bases):
    c = cover_from_bases(3, 3, example_cover_bases)
    freq = frequencies(c)
    assert freq[mono(2, 1, 0)] == 2
    assert all(freq[mono(*e)] == 1 for e in [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    empty = CliqueCover(3, 3)
    assert set(frequencies(empty).values()) == {0}


def test_mandatory_only_frequencies():
    for n, d in [(3, 4), (4, 3)]:
        c = cover_from_bases(n, d, mandatory_bases(n, d), MANDATORY)
        freq = frequencies(c)
        for i in range(n):
            e = [0] * n
            e[i] = d
            assert freq[mono(*e)] == 1


def test_verify_example(example_cover_bases):
    assert verify_cover(cover_from_bases(3, 3, example_cover_bases)).valid


def test_verify_missing():
    rep = verify_cover(cover_from_bases(3, 3, mandatory_bases(3, 3)))
    assert not rep.valid and rep.missing == [mono(1, 1, 1)]
    rep = verify_cover(CliqueCover(3, 3))
    assert len(rep.missing) == 10
    assert rep.missing == enumerate_monomials(3, 3)


def test_prune_removes_duplicate(example_cover_bases):
    c = cover_from_bases(3, 3, example_cover_bases + [mono(1, 1, 0)])
    pruned = prune(c)
    assert pruned.bases == example_cover_bases


def test_prune_keeps_minimal(example_cover_bases):
    c = cover_from_bases(3, 3, example_cover_bases)
    assert prune(c).bases == c.bases
    assert is_minimal(c)


def test_prune_never_drops_mandatory():
    bases = enumerate_monomials(3, 3)  # every clique of S_3(4)
    c = cover_from_bases(3, 4, bases)
    pruned = prune(c)
    assert set(mandatory_bases(3, 4)) <= set(pruned.bases)
    assert verify_cover(pruned).valid and is_minimal(pruned)
    # subsequence of the input
    it = iter(c.bases)
    assert all(b in it for b in pruned.bases)


def test_prune_requires_valid_cover():
    with pytest.raises(ContractViolationError):
        prune(CliqueCover(3, 3))
    with pytest.raises(ContractViolationError):
        is_minimal(CliqueCover(3, 3))


def test_is_minimal_detects_redundancy(example_cover_bases):
    c = cover_from_bases(3, 3, example_cover_bases + [mono(0, 1, 1)])
    assert verify_cover(c).valid
    assert not is_minimal(c)


def test_greedy_s33():
    c = greedy_cover(3, 3)
    assert len(c) == 4 == brute_force_rho(3, 3)
    assert c.origins[:3] == [MANDATORY] * 3
    assert is_minimal(c)


@pytest.mark.parametrize("d", range(1, 13))
def test_greedy_two_variables(d):
    c = greedy_cover(2, d)
    assert len(c) == -(-(d - 1) // 2) + 1 == brute_force_rho(2, d)


def test_greedy_degree_one():
    c = greedy_cover(4, 1)
    assert c.bases == [mono(0, 0, 0, 0)]
    assert verify_cover(c).valid


def test_greedy_argument_checks():
    with pytest.raises(InvalidArgumentError):
        greedy_cover(1, 3)
    with pytest.raises(InvalidArgumentError):
        greedy_cover(3, 0)


def test_greedy_is_deterministic():
    a, b = greedy_cover(4, 7), greedy_cover(4, 7)
    assert a.bases == b.bases and a.origins == b.origins


def test_greedy_tie_break_prefers_rlex_greatest_base():
    trace = []
    c = greedy_cover(3, 3, trace=lambda v, clique, covered: trace.append((v, clique.base, covered)))
    # only x1x2x3 survives the mandatory cliques; its three cliques each
    # already hold two covered vertices, so the tie-break decides
    assert trace == [(mono(1, 1, 1), mono(1, 1, 0), 2)]
    assert c.bases == [mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2), mono(1, 1, 0)]


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 6) for d in range(2, 9)])
def test_greedy_valid_and_within_ggr(n, d):
    c = greedy_cover(n, d)
    assert verify_cover(c).valid
    assert set(mandatory_bases(n, d)) <= set(c.bases)
    assert is_minimal(c)
    assert len(c) <= ggr_bounds(n, d)[1]
    assert all(o in (MANDATORY, GREEDY) for o in c.origins)


def test_json_round_trip():
    c = greedy_cover(4, 5)
    back = CliqueCover.loads(c.dumps())
    assert back.bases == c.bases and (back.n, back.d) == (4, 5)
    assert back.origins == c.origins


def test_from_json_malformed():
    with pytest.raises(InvalidArgumentError):
        CliqueCover.from_json({"n": 3})
