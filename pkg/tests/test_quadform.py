import pytest

from trib11.gfext import Shape, splitting_type
from trib11.modmath import ModPrime, NotPrime, jacobi
from trib11.quadform import Representation, represent, represent_bruteforce

from oracles import brute_rep_hits, sieve_list


def test_fixed_representations():
    assert represent(11) == Representation(11, 0, 1, True)
    assert represent(47) == Representation(47, 6, 1, True)
    assert represent(53) == Representation(53, 3, 2, True)


def test_fixed_non_representations():
    for p in (2, 3, 5, 7, 13, 19):
        rep = represent(p)
        assert not rep.exists
        assert rep.x is None and rep.y is None


def test_represent_requires_prime():
    with pytest.raises(NotPrime):
        represent(12)


def test_bruteforce_values():
    assert represent_bruteforce(11) == Representation(11, 0, 1, True)
    assert represent_bruteforce(53) == Representation(53, 3, 2, True)
    assert not represent_bruteforce(19).exists
    # composites are fine for the oracle path
    assert represent_bruteforce(12) == Representation(12, 1, 1, True)
    assert represent_bruteforce(44) == Representation(44, 0, 2, True)
    with pytest.raises(ValueError):
        represent_bruteforce(0)


def test_representation_solves_the_form():
    for p in sieve_list(5000):
        rep = represent(ModPrime(p))
        if rep.exists:
            assert rep.x >= 0 and rep.y >= 0
            assert rep.x * rep.x + 11 * rep.y * rep.y == p


def test_agrees_with_bruteforce_and_unique():
    for p in sieve_list(20000):
        fast = represent(ModPrime(p))
        slow = represent_bruteforce(p)
        assert fast == slow, p
        hits = brute_rep_hits(p)
        assert len(hits) <= 1, p  # essentially unique for primes
        assert fast.exists == bool(hits)


def test_exists_implies_quadratic_residue():
    for p in sieve_list(20000):
        if p == 2 or p == 11:
            continue
        if represent(ModPrime(p)).exists:
            assert jacobi(-11, p) != -1, p


def test_exists_iff_three_roots():
    for p in sieve_list(5000):
        if p == 11:
            continue
        exists = represent(ModPrime(p)).exists
        split = splitting_type(ModPrime(p)).shape is Shape.THREE_DISTINCT_ROOTS
        assert exists == split, p
