"""Elementary number theory: Jacobi/Kronecker symbols, sieves, factoring,
square roots mod m, genus-character decompositions, and the local family
conditions for solubility of the principal form equation over Q.

Negative or even "numerators" in symbol evaluations are routed through the
Kronecker symbol, so (l/p) for l < 0 carries the (-1/p) factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

_TRIAL_LIMIT = 10**6


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extending Jacobi to all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 10^12 factoring cap."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> List[int]:
    """Primes <= n by a plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(2, n + 1) if sieve[i]]


def squarefree_sieve(n: int, segment_size: int = 1 << 20) -> Iterator[int]:
    """Yield the squarefree integers in [1, n], ascending, segmented."""
    if n > 10**9:
        raise ValueError("squarefree_sieve capped at 10^9")
    if n < 1:
        return
    small = primes_upto(math.isqrt(n))
    lo = 1
    while lo <= n:
        hi = min(lo + segment_size - 1, n)
        flags = bytearray([1]) * (hi - lo + 1)
        for p in small:
            p2 = p * p
            if p2 > hi:
                break
            start = ((lo + p2 - 1) // p2) * p2
            for q in range(start, hi + 1, p2):
                flags[q - lo] = 0
        for i, ok in enumerate(flags):
            if ok:
                yield lo + i
        lo = hi + 1


_trial_primes: List[int] | None = None


def _get_trial_primes() -> List[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = primes_upto(_TRIAL_LIMIT)
    return _trial_primes


def factor(n: int) -> List[Tuple[int, int]]:
    """Complete factorization of n <= 10^12 as an ascending (prime, exponent) list.

    Trial division to 10^6, then a deterministic primality check on the
    cofactor.  A composite unfactored cofactor raises (out of range input).
    """
    if n <= 0:
        raise ValueError("factor requires a positive integer")
    if n > 10**12:
        raise ValueError("factor capped at 10^12")
    out: List[Tuple[int, int]] = []
    if n < _TRIAL_LIMIT:
        # Small inputs: plain trial division without building the prime table.
        d = 2
        while d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                out.append((d, e))
            d += 1 if d == 2 else 2
        if n > 1:
            out.append((n, 1))
        return out
    for p in _get_trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if not is_prime(n):
            raise ValueError("composite cofactor survived trial division")
        out.append((n, 1))
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor(n))


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a mod prime p (Tonelli-Shanks), or None."""
    a %= p
    if p == 2:
        return a
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _sqrts_mod_2power(a: int, k: int) -> List[int]:
    """All square roots of a modulo 2^k."""
    pk = 1 << k
    a %= pk
    if k == 1:
        return [a & 1]
    if k == 2:
        return {0: [0, 2], 1: [1, 3]}.get(a, [])
    if a == 0:
        step = 1 << ((k + 1) // 2)
        return list(range(0, pk, step))
    if a % 2 == 1:
        if a % 8 != 1:
            return []
        r = 1
        for j in range(3, k):
            if (r * r - a) % (1 << (j + 1)):
                r += 1 << (j - 1)
        half = pk >> 1
        return sorted({r % pk, (pk - r) % pk, (r + half) % pk, (half - r) % pk})
    return _lift_zero(a, 2, k)


def _sqrts_mod_prime_power(a: int, p: int, k: int) -> List[int]:
    """All square roots of a modulo p^k."""
    if p == 2:
        return _sqrts_mod_2power(a, k)
    pk = p**k
    a %= pk
    if k == 1:
        if a % p == 0:
            return [0]
        r = sqrt_mod_prime(a, p)
        return [] if r is None else sorted({r, p - r})
    if a % p == 0:
        return _lift_zero(a, p, k)
    r = sqrt_mod_prime(a % p, p)
    if r is None:
        return []
    # Hensel lift: f(x) = x^2 - a, f'(r) = 2r invertible.
    mod = p
    while mod < pk:
        mod *= p
        inv = pow(2 * r, -1, mod)
        r = (r - (r * r - a) * inv) % mod
    return sorted({r % pk, (pk - r) % pk})


def _lift_zero(a: int, p: int, k: int) -> List[int]:
    pk = p**k
    j = 0
    aa = a
    while aa % p == 0:
        aa //= p
        j += 1
    if j >= k:
        step = p ** ((k + 1) // 2)
        return list(range(0, pk, step))
    if j % 2 == 1:
        return []
    roots = _sqrts_mod_prime_power(aa, p, k - j)
    half = p ** (j // 2)
    out = set()
    for r in roots:
        base = r * half % pk
        period = p ** (k - j // 2)
        for t in range(0, pk, period):
            out.add((base + t) % pk)
    return sorted(out)


def sqrts_mod(a: int, m: int) -> List[int]:
    """All x mod m with x^2 = a (mod m), via CRT over the factorization of m."""
    if m == 1:
        return [0]
    residues = [[_sqrts_mod_prime_power(a, p, e), p**e] for p, e in factor(m)]
    out = [0]
    mod = 1
    for roots, pe in residues:
        if not roots:
            return []
        new = []
        inv_m = pow(mod, -1, pe)
        for x in out:
            for r in roots:
                # x' = x (mod mod), x' = r (mod pe)
                t = ((r - x) * inv_m) % pe
                new.append(x + mod * t)
        out = new
        mod *= pe
    return sorted(set(out))


# ---------------------------------------------------------------------------
# Genus characters


@dataclass(frozen=True)
class GenusCharacter:
    """A prime-discriminant quadratic character chi_D, attached to one ramified prime.

    disc is a prime discriminant: p* = (-1)^((p-1)/2) p for odd p, or one of
    -4, 8, -8 for the prime 2.
    """

    disc: int
    prime: int

    def eval(self, q: int) -> int:
        """chi(Frob q) in F2: 0 iff q splits in Q(sqrt(disc))."""
        if q % self.prime == 0:
            raise ValueError(f"character of conductor {self.prime} evaluated at {q}")
        return 0 if kronecker(self.disc, q) == 1 else 1


@dataclass(frozen=True)
class QuadField:
    """A squarefree d > 1 with its fundamental discriminant and genus data."""

    d: int
    prime_factors: Tuple[int, ...]
    delta: int
    components: Tuple[GenusCharacter, ...]

    @property
    def t(self) -> int:
        return len(self.components)


def prime_disc(p: int) -> int:
    """p* for an odd prime: the sign making it 1 mod 4."""
    return p if p % 4 == 1 else -p


def genus_components(d: int) -> QuadField:
    """Decompose chi_d into prime-discriminant characters, one per ramified prime."""
    if d <= 1:
        raise ValueError("d must be a squarefree integer > 1")
    fac = factor(d)
    if any(e > 1 for _, e in fac):
        raise ValueError(f"{d} is not squarefree")
    primes = [p for p, _ in fac]
    delta = d if d % 4 == 1 else 4 * d
    comps: List[GenusCharacter] = []
    if d % 2 == 0:
        m = d // 2
        comps.append(GenusCharacter(8 if m % 4 == 1 else -8, 2))
    elif d % 4 == 3:
        comps.append(GenusCharacter(-4, 2))
    for p in primes:
        if p != 2:
            comps.append(GenusCharacter(prime_disc(p), p))
    comps.sort(key=lambda c: c.prime)
    prod = 1
    for c in comps:
        prod *= c.disc
    if prod != delta:
        raise AssertionError(f"component discs multiply to {prod}, expected {delta}")
    return QuadField(d, tuple(primes), delta, tuple(comps))


def eval_character(c: GenusCharacter, q: int) -> int:
    return c.eval(q)


# ---------------------------------------------------------------------------
# Family membership

YES = "yes"
FAILS_ED = "fails_ed"
FAILS_ED2 = "fails_ed2"
NOT_DIVISIBLE = "not_divisible"
NOT_SQUAREFREE = "not_squarefree"


def check_l(l: int) -> None:
    if l == -1:
        return
    if abs(l) % 4 == 3 and is_prime(abs(l)):
        return
    raise ValueError("l must be -1 or have |l| an odd prime congruent to 3 mod 4")


def in_family(d: int, l: int, d_factors: List[Tuple[int, int]] | None = None) -> str:
    """Membership of d in the family where N_d = l is soluble over Q.

    For |l| prime: l | d, every odd p | (d/l) splits Q(sqrt(l)), and
    (-(d/l)/|l|) = 1.  For l = -1 the same conditions degenerate to
    "every odd prime divisor of d is 1 mod 4".
    """
    check_l(l)
    if d <= 1:
        return NOT_DIVISIBLE
    al = abs(l)
    if d % al != 0:
        return NOT_DIVISIBLE
    fac = d_factors if d_factors is not None else factor(d)
    if any(e > 1 for _, e in fac):
        return NOT_SQUAREFREE
    for p, _ in fac:
        if p == 2 or p == al:
            continue
        if kronecker(l, p) != 1:
            return FAILS_ED
    if al > 1:
        m = d // l  # signed: negative for l < 0
        if jacobi(-m, al) != 1:
            return FAILS_ED2
    return YES
