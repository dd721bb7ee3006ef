"""Exact arithmetic in the cyclotomic ring Z[zeta_n].

Elements are integer coordinate vectors in the power basis
zeta^0 .. zeta^{phi(n)-1}, kept fully reduced modulo the n-th cyclotomic
polynomial, so equality of vectors is equality of ring elements. The same
object doubles as an exact planar point via the numeric embedding
zeta -> exp(2*pi*i/n).

Coefficients are plain Python ints (arbitrary precision); nothing here may
assume they stay small, since power iterations elsewhere grow them.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Iterable, Iterator

from mpmath import iv


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler's totient of n (n >= 1)."""
    if n < 1:
        raise ValueError(f"phi requires n >= 1, got {n}")
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num / den for integer polynomials, den monic, remainder 0."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for k, dk in enumerate(den):
                num[i + k] -= c * dk
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by dividing x^n - 1 by the product of all lower-index
    cyclotomic polynomials for divisors of n; monic of degree phi(n).
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial requires n >= 1, got {n}")
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _embed_basis(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * j / n) for j in range(phi(n)))


def _reduce(n: int, coeffs: Iterable[int]) -> tuple[int, ...]:
    """Reduce a coefficient vector of any length mod the n-th cyclotomic polynomial."""
    deg = phi(n)
    c = list(coeffs)
    if len(c) < deg:
        c.extend([0] * (deg - len(c)))
    if len(c) > deg:
        mod = cyclotomic_polynomial(n)
        for i in range(len(c) - 1, deg - 1, -1):
            top = c[i]
            if top:
                base = i - deg
                for k in range(deg + 1):
                    c[base + k] -= top * mod[k]
        del c[deg:]
    return tuple(c)


class CycInt:
    """An element of Z[zeta_n] in reduced power-basis form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[int]):
        if n < 1:
            raise ValueError(f"modulus index must be >= 1, got {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", _reduce(n, coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycInt is immutable")

    @classmethod
    def zero(cls, n: int) -> CycInt:
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> CycInt:
        return cls(n, (1,))

    @classmethod
    def from_int(cls, n: int, value: int) -> CycInt:
        return cls(n, (value,))

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> CycInt:
        """zeta_n^power as a ring element."""
        power %= n
        c = [0] * (power + 1)
        c[power] = 1
        return cls(n, c)

    def __repr__(self) -> str:
        return f"CycInt({self.n}, {list(self.coeffs)})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == CycInt.from_int(self.n, other)
        if isinstance(other, CycInt):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def _check_same_ring(self, other: CycInt) -> None:
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} != {other.n}")

    def __add__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(self.n, other)
        self._check_same_ring(other)
        return CycInt(self.n, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(self.n, other)
        self._check_same_ring(other)
        return CycInt(self.n, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: int | CycInt) -> CycInt:
        return (-self) + other

    def __neg__(self) -> CycInt:
        return CycInt(self.n, (-a for a in self.coeffs))

    def __mul__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.n, (a * other for a in self.coeffs))
        self._check_same_ring(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycInt(self.n, prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycInt:
        if exponent < 0:
            raise ValueError("negative powers are not ring elements")
        result = CycInt.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def galois(self, a: int) -> CycInt:
        return galois_apply(a, self)

    def conj(self) -> CycInt:
        """Complex conjugate, the Galois automorphism zeta -> zeta^(n-1)."""
        return galois_apply(self.n - 1 if self.n > 1 else 1, self)

    def is_real(self) -> bool:
        return self == self.conj()

    def embed(self) -> complex:
        """Numeric value under zeta -> exp(2*pi*i/n), 64-bit floats."""
        basis = _embed_basis(self.n)
        total = 0j
        for c, w in zip(self.coeffs, basis):
            if c:
                total += c * w
        return total

    def embed_xy(self) -> tuple[float, float]:
        v = self.embed()
        return (v.real, v.imag)

    def to_dict(self) -> dict:
        return {"n": self.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data: dict) -> CycInt:
        n = int(data["n"])
        coeffs = [int(c) for c in data["coeffs"]]
        if len(coeffs) != phi(n):
            raise ValueError(
                f"coefficient vector has length {len(coeffs)}, expected phi({n}) = {phi(n)}"
            )
        return cls(n, coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)


def galois_apply(a: int, z: CycInt) -> CycInt:
    """Image of z under the automorphism zeta -> zeta^a; requires gcd(a, n) = 1."""
    n = z.n
    a %= n
    if math.gcd(a if a else n, n) != 1:
        raise ValueError(f"{a} is not coprime to {n}: not a Galois automorphism")
    out = [0] * n
    for j, c in enumerate(z.coeffs):
        if c:
            out[(a * j) % n] += c
    return CycInt(n, out)


# --- exact sign of real/imaginary parts -------------------------------------
#
# Signs of cross products and coordinate comparisons must be exact even though
# the numeric embedding is float. A float evaluation with a rigorous error
# bound settles almost every case; the exact zero test catches degeneracy, and
# interval arithmetic at growing precision settles anything left over.

_EPS = 2.220446049250313e-16


def _float_sum_sign(n: int, coeffs: tuple[int, ...], use_sin: bool) -> int | None:
    total = 0.0
    abs_total = 0.0
    for j, c in enumerate(coeffs):
        if c:
            angle = 2.0 * math.pi * j / n
            w = math.sin(angle) if use_sin else math.cos(angle)
            total += c * w
            abs_total += abs(c)
    bound = _EPS * (abs_total + 1.0) * (len(coeffs) + 8)
    if total > bound:
        return 1
    if total < -bound:
        return -1
    return None


def _interval_sum_sign(n: int, coeffs: tuple[int, ...], use_sin: bool) -> int:
    for prec in (128, 256, 512, 1024, 2048, 4096, 8192, 16384):
        iv.prec = prec
        total = iv.mpf(0)
        two_pi = 2 * iv.pi
        for j, c in enumerate(coeffs):
            if c:
                angle = two_pi * j / n
                w = iv.sin(angle) if use_sin else iv.cos(angle)
                total += c * w
        if total.a > 0:
            return 1
        if total.b < 0:
            return -1
    raise ArithmeticError("interval refinement failed to separate a nonzero value from 0")


def real_part_sign(z: CycInt) -> int:
    """Sign (-1, 0, 1) of the real part of the embedded value, exact."""
    w = z + z.conj()
    if w.is_zero():
        return 0
    s = _float_sum_sign(w.n, w.coeffs, use_sin=False)
    return s if s is not None else _interval_sum_sign(w.n, w.coeffs, use_sin=False)


def imag_part_sign(z: CycInt) -> int:
    """Sign (-1, 0, 1) of the imaginary part of the embedded value, exact."""
    w = z - z.conj()
    if w.is_zero():
        return 0
    s = _float_sum_sign(w.n, w.coeffs, use_sin=True)
    return s if s is not None else _interval_sum_sign(w.n, w.coeffs, use_sin=True)


def is_parallel(u: CycInt, w: CycInt) -> bool:
    """Exact parallelism of two plane vectors: u*conj(w) == conj(u)*w."""
    if u.n != w.n:
        raise ValueError(f"modulus mismatch: {u.n} != {w.n}")
    return u * w.conj() == u.conj() * w


def cross_sign(u: CycInt, w: CycInt) -> int:
    """Exact sign of the 2D cross product u x w of the embedded vectors."""
    # conj(u)*w - u*conj(w) equals 2i * (u x w), a purely imaginary element.
    s = u.conj() * w - u * w.conj()
    return imag_part_sign(s)


def primitive_2n_root(n: int) -> CycInt:
    """For odd n, the element -zeta_n^((n+1)/2), a primitive 2n-th root of unity.

    Equals exp(pi*i/n) exactly, which is what makes Z[zeta_n] = Z[zeta_2n].
    """
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    return -CycInt.zeta(n, (n + 1) // 2)
