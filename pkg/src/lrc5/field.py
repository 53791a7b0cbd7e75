"""Exact arithmetic in GF(p^m) for prime powers up to 2^16.

Field elements are plain ints in [0, q). The base-p digits of an index are
the coefficients of the representative polynomial, constant term first, so
index 0 is the additive zero, index 1 the multiplicative one, and index p
the polynomial x (when m > 1). Multiplication, inversion, and powers run on
log/antilog tables built once at construction; addition is digitwise mod p
(a single xor when p = 2, plain mod-p ints when m = 1).

The reducing modulus defaults to the first monic irreducible polynomial of
degree m in index order (non-leading coefficients read as a base-p integer,
constant term least significant). That choice is re-derivable from (p, m)
alone, so serialized fields are self-describing. For m = 1 the modulus is
the placeholder x and arithmetic is plain mod p.
"""

from collections.abc import Sequence

from .errors import NotADivisorError, NotPrimeError, TooLargeError

MAX_ORDER = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(v: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(v % p)
        v //= p
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _poly_divmod_tail(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of polynomial division, coefficients constant-first, den monic."""
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for t in range(dd + 1):
                rem[i - dd + t] = (rem[i - dd + t] - c * den[t]) % p
    return rem[:dd]


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for v in range(p**deg):
            den = _digits(v, p, deg) + [1]
            if not any(_poly_divmod_tail(list(coeffs), den, p)):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for v in range(p**m):
        cand = _digits(v, p, m) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """Arithmetic tables for GF(p^m).

    Attributes:
        p: field characteristic (prime).
        m: extension degree, at least 1.
        q: field order p^m.
        modulus: m+1 coefficients of the reducing polynomial, constant first.
        generator: index of the canonical primitive element, the smallest
            index of multiplicative order q-1.
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "exp", "log", "_qm1")

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be at least 1")
        q = p**m
        if q > MAX_ORDER:
            raise TooLargeError(f"field order {p}^{m} exceeds 2^16")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = (0, 1) if m == 1 else _smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            self._check_modulus(modulus)
        self.modulus = modulus
        self._qm1 = q - 1
        self.generator = self._find_generator()
        self._build_tables()

    def _check_modulus(self, modulus: tuple[int, ...]) -> None:
        p, m = self.p, self.m
        if m == 1:
            if modulus != (0, 1):
                raise ValueError("prime fields use the placeholder modulus x")
            return
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")

    # Bootstrap arithmetic on polynomial indices, used only to build tables.
    def _raw_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        prod = [c % p for c in prod]
        return _undigits(_poly_divmod_tail(prod, self.modulus, p), p)

    def _raw_pow(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        qm1 = self._qm1
        if qm1 == 1:
            return 1
        checks = [qm1 // f for f in _prime_factors(qm1)]
        for a in range(2, self.q):
            if all(self._raw_pow(a, e) != 1 for e in checks):
                return a
        raise AssertionError("no primitive element found")  # unreachable

    def _build_tables(self) -> None:
        qm1 = self._qm1
        # exp is doubled so mul never reduces the summed logs mod q-1
        exp = [1] * (2 * qm1)
        log = [0] * self.q
        e = 1
        for i in range(qm1):
            exp[i] = e
            log[e] = i
            e = self._raw_mul(e, self.generator)
        for i in range(qm1, 2 * qm1):
            exp[i] = exp[i - qm1]
        self.exp = exp
        self.log = log

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element index of {self!r}")
        return a

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        da = _digits(a, p, self.m)
        db = _digits(b, p, self.m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return (-a) % p
        if p == 2:
            return a
        return _undigits([(-x) % p for x in _digits(a, p, self.m)], p)

    def sub(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a - b) % p
        if p == 2:
            return a ^ b
        da = _digits(a, p, self.m)
        db = _digits(b, p, self.m)
        return _undigits([(x - y) % p for x, y in zip(da, db)], p)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.exp[self._qm1 - self.log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp[self.log[a] + self._qm1 - self.log[b]]

    def pow(self, a: int, e: int) -> int:
        """a**e with 0**0 = 1; negative exponents invert (a must be nonzero)."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no negative powers")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self._qm1]

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        """Inner product; hot path for syndromes and matrix products."""
        if self.m == 1:
            return sum(map(int.__mul__, xs, ys)) % self.p
        if self.p == 2:
            exp = self.exp
            log = self.log
            acc = 0
            for x, y in zip(xs, ys):
                if x and y:
                    acc ^= exp[log[x] + log[y]]
            return acc
        acc = 0
        add, mul = self.add, self.mul
        for x, y in zip(xs, ys):
            acc = add(acc, mul(x, y))
        return acc

    def spec_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus), "q": self.q}


def field_new(p: int, m: int = 1) -> Field:
    """Build GF(p^m) with the canonical modulus."""
    return Field(p, m)


def primitive_element(field: Field) -> int:
    """Smallest element index of multiplicative order q-1."""
    return field.generator


def subgroup_of_order(field: Field, t: int) -> list[int]:
    """The unique multiplicative subgroup of order t, listed as successive
    powers of g^((q-1)/t) starting at 1."""
    qm1 = field.q - 1
    if t < 1 or qm1 % t:
        raise NotADivisorError(f"{t} does not divide the group order {qm1}")
    h = field.pow(field.generator, qm1 // t)
    out = [1]
    cur = 1
    for _ in range(t - 1):
        cur = field.mul(cur, h)
        out.append(cur)
    return out
