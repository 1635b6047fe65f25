import random

import pytest

from genpell.arith import (
    FAILS_ED,
    FAILS_ED2,
    NOT_DIVISIBLE,
    NOT_SQUAREFREE,
    YES,
    GenusCharacter,
    eval_character,
    factor,
    genus_components,
    in_family,
    is_prime,
    jacobi,
    kronecker,
    primes_upto,
    sqrts_mod,
    squarefree_sieve,
)


def test_jacobi_examples():
    assert jacobi(2, 15) == 1
    assert jacobi(3, 7) == -1
    for a in (-5, 0, 1, 7, 100):
        assert jacobi(a, 1) == 1
    with pytest.raises(ValueError):
        jacobi(3, 8)
    with pytest.raises(ValueError):
        jacobi(3, -7)


def test_jacobi_matches_legendre():
    for p in primes_upto(60):
        if p == 2:
            continue
        for a in range(1, p):
            euler = pow(a, (p - 1) // 2, p)
            expected = 1 if euler == 1 else -1
            assert jacobi(a, p) == expected


def test_quadratic_reciprocity_bulk():
    rng = random.Random(2024)
    count = 0
    while count < 10_000:
        m = rng.randrange(3, 10**6, 2)
        n = rng.randrange(3, 10**6, 2)
        import math

        if math.gcd(m, n) != 1:
            continue
        sign = -1 if (m % 4 == 3 and n % 4 == 3) else 1
        assert jacobi(m, n) * jacobi(n, m) == sign
        count += 1


def test_kronecker_basics():
    # (a/2) = 0, 1, -1 per a mod 8
    assert kronecker(2, 2) == 0
    assert kronecker(7, 2) == 1
    assert kronecker(3, 2) == -1
    # negative lower argument
    assert kronecker(-1, -1) == -1
    assert kronecker(5, -1) == 1
    # routing (l/p) for negative l
    assert kronecker(-3, 7) == jacobi(4, 7)
    assert kronecker(-11, 3) == jacobi(1, 3)


def test_is_prime():
    assert is_prime(2) and is_prime(999983) and is_prime(10**12 + 39)
    assert not is_prime(1) and not is_prime(999966000289)


def test_squarefree_sieve_examples():
    vals = list(squarefree_sieve(20))
    assert len(vals) == 13
    assert set(vals) == set(range(1, 21)) - {4, 8, 9, 12, 16, 18, 20}
    assert list(squarefree_sieve(3)) == [1, 2, 3]
    assert 49 not in set(squarefree_sieve(49))
    # segmented path agrees with direct marking
    assert list(squarefree_sieve(3000, segment_size=64)) == list(squarefree_sieve(3000))


def test_factor_examples():
    assert factor(34) == [(2, 1), (17, 1)]
    assert factor(105) == [(3, 1), (5, 1), (7, 1)]
    assert factor(999966000289) == [(999983, 2)]
    assert factor(1) == []
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(10**12 + 1)


def test_sqrts_mod_brute():
    rng = random.Random(7)
    moduli = [1, 2, 3, 4, 8, 9, 12, 16, 25, 32, 48, 64, 75, 81, 100, 128, 180, 256]
    for m in moduli:
        for _ in range(12):
            a = rng.randrange(m) if m > 1 else 0
            expected = sorted(x for x in range(m) if (x * x - a) % m == 0)
            assert sqrts_mod(a, m) == expected, (a, m)


def test_sqrts_mod_large():
    m = 4 * 999983
    a = 12345**2 % m
    roots = sqrts_mod(a, m)
    assert 12345 % m in roots
    for r in roots:
        assert (r * r - a) % m == 0


def test_genus_components_examples():
    f = genus_components(34)
    assert f.delta == 136
    assert [c.disc for c in f.components] == [8, 17]
    f = genus_components(3)
    assert f.delta == 12
    assert [c.disc for c in f.components] == [-4, -3]
    f = genus_components(5)
    assert f.delta == 5
    assert [c.disc for c in f.components] == [5]
    with pytest.raises(ValueError):
        genus_components(12)
    with pytest.raises(ValueError):
        genus_components(1)


def test_genus_component_count():
    # t = number of primes dividing delta
    for d in (6, 15, 21, 30, 105, 210):
        f = genus_components(d)
        extra = 1 if (d % 2 == 0 or d % 4 == 3) else 0
        assert f.t == len(f.prime_factors) + (extra if d % 2 == 1 else 0) + (0 if d % 2 == 1 else 0)
        assert f.t == (len(f.prime_factors) if d % 2 == 0 or d % 4 == 1 else len(f.prime_factors) + 1)


def test_eval_character_examples():
    chi5 = GenusCharacter(5, 5)
    assert eval_character(chi5, 3) == 1
    chi8 = GenusCharacter(8, 2)
    assert eval_character(chi8, 17) == 0
    chi4 = GenusCharacter(-4, 2)
    for q in (5, 13, 17, 29):
        assert eval_character(chi4, q) == 0
    for q in (3, 7, 11, 19):
        assert eval_character(chi4, q) == 1
    with pytest.raises(ValueError):
        eval_character(chi5, 10)


def test_character_product_is_kronecker_of_delta():
    rng = random.Random(11)
    primes = [p for p in primes_upto(10_000) if p > 2]
    ds = []
    d = 2
    sf = iter(squarefree_sieve(5000))
    ds = [x for x in sf]
    rng.shuffle(ds)
    for d in ds[:1000]:
        f = genus_components(d)
        for _ in range(50):
            q = primes[rng.randrange(len(primes))]
            if f.delta % q == 0:
                continue
            total = sum(c.eval(q) for c in f.components) % 2
            expected = 0 if kronecker(f.delta, q) == 1 else 1
            assert total == expected, (d, q)


def test_in_family_examples():
    assert in_family(33, 3) == YES
    assert in_family(3, 3) == FAILS_ED2
    assert in_family(15, 3) == FAILS_ED
    assert in_family(4, 3) == NOT_DIVISIBLE
    assert in_family(18, 3) == NOT_SQUAREFREE
    with pytest.raises(ValueError):
        in_family(10, 5)  # 5 is 1 mod 4
    with pytest.raises(ValueError):
        in_family(10, 9)  # not prime


def test_in_family_negative_one():
    verdicts = {d: in_family(d, -1) for d in range(2, 11)}
    assert [d for d, v in verdicts.items() if v == YES] == [2, 5, 10]
    assert verdicts[3] == FAILS_ED
    assert verdicts[8] == NOT_SQUAREFREE


def test_in_family_negative_l():
    # d = |l| is in the family for l < 0: N_d(0, 1) = -d = l
    assert in_family(3, -3) == YES
    assert in_family(7, -7) == YES
    # and fails ed2 for l > 0 automatically
    assert in_family(7, 7) == FAILS_ED2


def test_in_family_membership_conditions():
    # yes implies divisibility and squarefree d, for a small sweep
    for l in (3, -3, 7, -7, 11, -11, -1):
        for d in range(2, 400):
            if in_family(d, l) == YES:
                assert d % abs(l) == 0
                assert all(e == 1 for _, e in factor(d))
