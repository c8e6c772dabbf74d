"""Exact arithmetic in F_q, q = p**n with p an odd prime."""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul_mod(a, b, modulus, p):
    """Product of two coefficient tuples, reduced mod (modulus, p)."""
    n = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    # modulus is monic: x^n = -(lower part)
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c == 0:
            continue
        out[k] = 0
        for i in range(n):
            out[k - n + i] = (out[k - n + i] - c * modulus[i]) % p
    out = out[:n] + [0] * (n - len(out))
    return tuple(x % p for x in out[:n])


def _poly_divides(divisor, poly, p):
    """True when monic `divisor` divides `poly` over Z_p."""
    rem = [x % p for x in poly]
    d = len(divisor) - 1
    while len(_poly_trim(rem)) - 1 >= d:
        rem = list(_poly_trim(rem))
        k = len(rem) - 1
        c = rem[k]
        for i in range(d + 1):
            rem[k - d + i] = (rem[k - d + i] - c * divisor[i]) % p
    return not _poly_trim(rem)


def _monic_polys(degree: int, p: int) -> Iterator[tuple[int, ...]]:
    """All monic polynomials of the given degree, lexicographic on low-first coefficients."""
    for lower in itertools.product(range(p), repeat=degree):
        yield lower + (1,)


def irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over Z_p (small degrees)."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(d, p):
            if _poly_divides(cand, coeffs, p):
                return False
    return True


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible degree-n polynomial over Z_p."""
    if n == 1:
        return (0, 1)
    for cand in _monic_polys(n, p):
        if irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable: they always exist


class FieldElem:
    """Element of a FiniteField, stored as power-basis coordinates (low degree first)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs: Sequence[int]):
        self.field = field
        c = [x % field.p for x in coeffs]
        if len(c) > field.n:
            raise ValueError(f"coordinate vector longer than extension degree {field.n}")
        c += [0] * (field.n - len(c))
        self.coeffs = tuple(c)

    def _check(self, other: "FieldElem") -> "FieldElem":
        if isinstance(other, int):
            return self.field.element(other)
        if not isinstance(other, FieldElem) or other.field is not self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FieldElem(self.field, [(a + b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FieldElem(self.field, [(a - b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, [(-a) % p for a in self.coeffs])

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        return FieldElem(f, _poly_mul_mod(self.coeffs, other.coeffs, f.modulus, f.p))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.element(other)
        return (
            isinstance(other, FieldElem)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.field.n == 1:
            return f"F{self.field.q}({self.coeffs[0]})"
        return f"F{self.field.q}{list(self.coeffs)}"


class FiniteField:
    """The field F_q with q = p**n, p an odd prime, as Z_p[x]/(modulus)."""

    def __init__(self, p: int, n: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("even characteristic is not supported")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.n = n
        self.q = p**n
        if modulus is None:
            self.modulus = default_modulus(p, n)
        else:
            m = tuple(x % p for x in modulus[:-1]) + (modulus[-1],)
            if len(m) != n + 1 or m[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {n}")
            if n > 1 and not irreducible(m, p):
                raise ValueError(f"modulus {list(m)} is reducible over Z_{p}")
            self.modulus = m
        self.zero = FieldElem(self, [0])
        self.one = FieldElem(self, [1])

    def element(self, value) -> FieldElem:
        """Coerce an int (constant) or coordinate sequence into a field element."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, [value])
        return FieldElem(self, list(value))

    def elements(self) -> list[FieldElem]:
        """All q elements, sorted by coordinate sequence."""
        return [
            FieldElem(self, coeffs) for coeffs in itertools.product(range(self.p), repeat=self.n)
        ]

    def nonzero_elements(self) -> list[FieldElem]:
        return [x for x in self.elements() if not x.is_zero()]

    def trace(self, x: FieldElem) -> int:
        """Absolute trace tr(x) = sum of x**(p**i), an element of Z_p returned as int."""
        x = self.element(x)
        acc = self.zero
        power = x
        for _ in range(self.n):
            acc = acc + power
            power = power**self.p
        assert all(c == 0 for c in acc.coeffs[1:]), "trace landed outside the prime field"
        return acc.coeffs[0]

    def quad_char(self, x: FieldElem) -> int:
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 on nonsquares."""
        x = self.element(x)
        if x.is_zero():
            return 0
        value = x ** ((self.q - 1) // 2)
        if value == self.one:
            return 1
        if value == -self.one:
            return -1
        raise AssertionError("x^((q-1)/2) must be a square root of 1")

    def fourth_roots(self) -> tuple[list[FieldElem], list[FieldElem]]:
        """All solutions of e**4 = 1 and f**2 = -1, each list sorted by coordinates.

        Requires q = 1 (mod 4), otherwise no square root of -1 exists.
        """
        if self.q % 4 != 1:
            raise ValueError(f"q = {self.q} is not 1 mod 4: no square root of -1")
        one, minus_one = self.one, -self.one
        e_list = [x for x in self.elements() if x**4 == one]
        f_list = [x for x in self.elements() if x * x == minus_one]
        assert len(e_list) == 4 and len(f_list) == 2
        return e_list, f_list

    def cubic_eta_sum(self) -> int:
        """Sum of the quadratic character over 2x + x**3 for nonzero x.

        The Weil bound caps its absolute value at 2*sqrt(q); asserted in tests.
        """
        two = self.element(2)
        return sum(self.quad_char(two * x + x**3) for x in self.nonzero_elements())

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteField":
        return cls(int(data["p"]), int(data["n"]), data.get("modulus"))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.n}, modulus={list(self.modulus)})"
