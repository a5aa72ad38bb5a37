"""Multiplicative structure of F_p at desk scale.

Primitive roots, the quadratic-residue symbol, mu_n-valued function tables,
multiplicative characters, the exhaustive function enumerators, and the
brute-force homomorphism oracle that every analytic test is checked against.
Primality is decided by trial division: moduli stay small by design.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterator

#: Functions an enumeration may visit before refusing to run (CLI-overridable).
DEFAULT_BUDGET = 10 ** 7


class BudgetExceededError(ValueError):
    """An enumeration would visit more functions than the budget allows."""

    def __init__(self, count: int, budget: int):
        super().__init__(
            f"enumeration would visit {count} functions, exceeding the budget of {budget}")
        self.count = count
        self.budget = budget


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def find_primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group of units mod p; deterministic."""
    check_odd_prime(p)
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError(f"no primitive root modulo {p}")


def mod_inverse(a: int, p: int) -> int:
    """The unique b in [1, p) with a*b = 1 (mod p); a must be a unit."""
    check_odd_prime(p)
    if a % p == 0:
        raise ZeroDivisionError(f"{a} is 0 mod {p} and has no inverse")
    return pow(a, -1, p)


@functools.lru_cache(maxsize=None)
def _nonzero_squares(p: int) -> frozenset:
    return frozenset(x * x % p for x in range(1, p))


def legendre_symbol(a: int, p: int) -> int:
    """1 for nonzero squares mod p, -1 for nonsquares, 0 when p divides a.

    Decided by membership in the explicit square set, not by a power
    computation.
    """
    check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if a in _nonzero_squares(p) else -1


# ---------------------------------------------------------------------------
# Function tables valued in roots of unity.

_FUNCTION_RE = re.compile(
    r"\s*p\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s+exps\s*=\s*([0-9,\s]+?)\s*$")


@dataclass(frozen=True)
class UnitFunction:
    """A function f from the units mod p into the n-th roots of unity.

    ``exps[x - 1]`` is the exponent k_x with f(x) = e(k_x / n) for
    x = 1, ..., p - 1, where e(t) = exp(2*pi*i*t).  The extension f(0) = 0
    is a convention of every sum in this package, not a stored value.
    """

    p: int
    n: int
    exps: tuple

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.n < 1:
            raise ValueError(f"value order n must be at least 1, got {self.n}")
        if len(self.exps) != self.p - 1:
            raise ValueError(
                f"need {self.p - 1} exponents for p = {self.p}, got {len(self.exps)}")
        if any(not (0 <= e < self.n) for e in self.exps):
            raise ValueError(f"exponents must lie in [0, {self.n})")

    def exponent(self, x: int) -> int:
        """The k with f(x) = e(k/n); x must be a unit mod p."""
        r = x % self.p
        if r == 0:
            raise ValueError("f(0) = 0 by convention and has no exponent")
        return self.exps[r - 1]

    @property
    def is_trivial(self) -> bool:
        return not any(self.exps)

    @property
    def is_constant(self) -> bool:
        first = self.exps[0]
        return all(e == first for e in self.exps)

    def normalized(self) -> "UnitFunction":
        """conj(f(1)) * f: the rescaling of f whose value at 1 is 1."""
        k1 = self.exps[0]
        if k1 == 0:
            return self
        return UnitFunction(self.p, self.n, tuple((e - k1) % self.n for e in self.exps))

    def to_text(self) -> str:
        return f"p={self.p} n={self.n} exps=" + ",".join(map(str, self.exps))


def parse_unit_function(text: str) -> UnitFunction:
    """Parse the textual format ``p=<p> n=<n> exps=<k_1>,...,<k_{p-1}>``.

    Whitespace-tolerant; exponents are validated against [0, n).
    """
    m = _FUNCTION_RE.match(text)
    if not m:
        raise ValueError(
            "malformed function text; expected "
            "'p=<int> n=<int> exps=<comma-separated ints>'")
    p, n = int(m.group(1)), int(m.group(2))
    try:
        exps = tuple(int(tok.strip()) for tok in m.group(3).split(","))
    except ValueError:
        raise ValueError("bad exponent list; expected comma-separated integers") from None
    return UnitFunction(p, n, exps)


def legendre_unit_function(p: int) -> UnitFunction:
    """The quadratic-residue indicator as a mu_2-valued table."""
    exps = tuple(0 if legendre_symbol(x, p) == 1 else 1 for x in range(1, p))
    return UnitFunction(p, 2, exps)


# ---------------------------------------------------------------------------
# Multiplicative characters.

def _multiplicative_order(g: int, p: int) -> int:
    if g % p == 0:
        return 0
    k, acc = 1, g % p
    while acc != 1:
        acc = acc * g % p
        k += 1
    return k


@dataclass(frozen=True)
class Character:
    """The multiplicative character chi_j with chi_j(g^t) = e(j*t / (p-1))."""

    p: int
    g: int
    j: int

    def __post_init__(self):
        check_odd_prime(self.p)
        if not 0 <= self.j < self.p - 1:
            raise ValueError(f"character index must lie in [0, {self.p - 1})")
        if _multiplicative_order(self.g, self.p) != self.p - 1:
            raise ValueError(f"{self.g} does not generate the units modulo {self.p}")

    @property
    def is_trivial(self) -> bool:
        return self.j == 0

    @property
    def order(self) -> int:
        """Order of the character as an element of the dual group."""
        return (self.p - 1) // gcd(self.j, self.p - 1)

    def unit_function(self, n: "int | None" = None) -> UnitFunction:
        """The character as a mu_n-valued table (default n = p - 1).

        Requires the character order to divide n, so that every value is an
        n-th root of unity.
        """
        p = self.p
        if n is None:
            n = p - 1
        if self.j * n % (p - 1) != 0:
            raise ValueError(
                f"character of order {self.order} does not take values in mu_{n}")
        scale = self.j * n // (p - 1)
        exps = [0] * (p - 1)
        x = 1
        for t in range(p - 1):
            exps[x - 1] = scale * t % n
            x = x * self.g % p
        return UnitFunction(p, n, tuple(exps))


def character_function(chi: Character) -> UnitFunction:
    """Exponent table of a character with denominator p - 1."""
    return chi.unit_function()


def enumerate_characters(p: int, n: int) -> list:
    """All characters mod p whose values are n-th roots of unity, by index.

    These are the chi_j whose order (p-1)/gcd(j, p-1) divides n; there are
    exactly gcd(n, p-1) of them, the trivial character first.
    """
    check_odd_prime(p)
    if n < 1:
        raise ValueError(f"value order n must be at least 1, got {n}")
    g = find_primitive_root(p)
    return [Character(p, g, j) for j in range(p - 1) if j * n % (p - 1) == 0]


# ---------------------------------------------------------------------------
# Exhaustive enumeration and the independent oracle.

def is_character_oracle(f: UnitFunction) -> bool:
    """Brute-force homomorphism test, independent of all spectral machinery.

    True iff f(1) = 1 and f(a*b) = f(a) f(b) for all units a, b, checked
    exhaustively in exponent arithmetic mod n.  Quadratic in p.
    """
    p, n, exps = f.p, f.n, f.exps
    if exps[0] != 0:
        return False
    for a in range(2, p):
        ea = exps[a - 1]
        for b in range(a, p):
            if (ea + exps[b - 1]) % n != exps[a * b % p - 1]:
                return False
    return True


def count_unit_functions(p: int, n: int, fix_f1: bool) -> int:
    """Size of the enumeration: n^(p-2) with f(1) pinned, n^(p-1) without."""
    check_odd_prime(p)
    if n < 1:
        raise ValueError(f"value order n must be at least 1, got {n}")
    return n ** (p - 2 if fix_f1 else p - 1)


def enumerate_unit_functions(p: int, n: int, fix_f1: bool = True,
                             budget: int = DEFAULT_BUDGET) -> Iterator[UnitFunction]:
    """Every mu_n-valued table exactly once, in lexicographic exponent order.

    With ``fix_f1`` the exponent at x = 1 is pinned to 0, i.e. f(1) = 1.
    Refuses to start (BudgetExceededError, carrying the computed count) when
    the enumeration size exceeds the budget.
    """
    total = count_unit_functions(p, n, fix_f1)
    if total > budget:
        raise BudgetExceededError(total, budget)
    return _unit_function_stream(p, n, fix_f1)


def _unit_function_stream(p: int, n: int, fix_f1: bool) -> Iterator[UnitFunction]:
    free = p - 2 if fix_f1 else p - 1
    head = (0,) if fix_f1 else ()
    for tail in itertools.product(range(n), repeat=free):
        yield UnitFunction(p, n, head + tail)
