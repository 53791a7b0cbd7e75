"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from scratch with plain integer
arithmetic: no imports from lrc5 except in the tests that compare the two
sides. Extension fields get a tuple-coefficient polynomial model instead of
the package's index tables.
"""

from __future__ import annotations

from itertools import combinations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, m) with n = p^m and p prime, else None."""
    for p in range(2, n + 1):
        if not is_prime(p):
            continue
        m, v = 0, n
        while v % p == 0:
            v //= p
            m += 1
        if v == 1 and m >= 1:
            return p, m
        if p * p > n:
            break
    return None


# --- plain mod-p linear algebra -------------------------------------------


def rank_mod(rows: list[list[int]], p: int) -> int:
    """Row rank over GF(p), p prime, by fresh Gaussian elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if mat[i][col] % p), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = pow(mat[row][col], p - 2, p)
        mat[row] = [(x * inv) % p for x in mat[row]]
        for i in range(nrows):
            if i != row and mat[i][col] % p:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def mat_vec_mod(rows: list[list[int]], x: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(r, x)) % p for r in rows]


# --- tuple-coefficient extension field model -------------------------------


class PolyField:
    """GF(p^m) with elements as little-endian coefficient tuples.

    The modulus is the first monic degree-m polynomial, in ascending order
    of the integer index of its low coefficients, that has no factorization
    witness; for m <= 3 irreducibility is exactly having no root in GF(p).
    """

    def __init__(self, p: int, m: int):
        assert m in (2, 3), "root test only certifies m <= 3"
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = self._first_irreducible()

    def _first_irreducible(self) -> tuple[int, ...]:
        p, m = self.p, self.m
        for tail_index in range(p**m):
            coeffs = self.idx_to_tuple(tail_index) + (1,)
            if all(self._poly_eval(coeffs, x) % p for x in range(p)):
                return coeffs
        raise AssertionError("no irreducible polynomial found")

    def _poly_eval(self, coeffs: tuple[int, ...], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def idx_to_tuple(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def tuple_to_idx(self, t: tuple[int, ...]) -> int:
        v = 0
        for c in reversed(t):
            v = v * self.p + c
        return v

    def add_idx(self, a: int, b: int) -> int:
        ta, tb = self.idx_to_tuple(a), self.idx_to_tuple(b)
        return self.tuple_to_idx(tuple((x + y) % self.p for x, y in zip(ta, tb)))

    def mul_idx(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        ta, tb = self.idx_to_tuple(a), self.idx_to_tuple(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ta):
            for j, y in enumerate(tb):
                prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for d in range(len(prod) - 1, m - 1, -1):
            f = prod[d]
            if f:
                for i, c in enumerate(mod):
                    prod[d - m + i] = (prod[d - m + i] - f * c) % p
        return self.tuple_to_idx(tuple(prod[:m]))

    def pow_idx(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul_idx(out, a)
        return out

    def inv_idx(self, a: int) -> int:
        assert a != 0
        return self.pow_idx(a, self.q - 2)

    def order_idx(self, a: int) -> int:
        assert a != 0
        x, k = a, 1
        while x != 1:
            x = self.mul_idx(x, a)
            k += 1
        return k

    def smallest_generator(self) -> int:
        for a in range(1, self.q):
            if self.order_idx(a) == self.q - 1:
                return a
        raise AssertionError("no generator")


def mult_order(x: int, q: int) -> int:
    """Multiplicative order of x mod prime q."""
    acc, k = x % q, 1
    while acc != 1:
        acc = (acc * x) % q
        k += 1
    return k


def smallest_generator(q: int) -> int:
    for x in range(2, q):
        if mult_order(x, q) == q - 1:
            return x
    raise AssertionError("no generator")


# --- construction reimplemented from the public contract -------------------


def oracle_monomials(q: int, r: int) -> list[tuple[int, int]]:
    removed = {(0, 0), (q - 3, q - 2), (q - 4, q - 2)}
    return [
        (i, j)
        for i in range(q - 1)
        for j in range(q - 1)
        if i % (r + 1) != r and (i, j) not in removed
    ]


def oracle_points(q: int, r: int) -> list[tuple[int, int]]:
    """Grid ordering for prime q: index t(q-1) + c(r+1) + s -> (g^c h^s, g^t)."""
    g = smallest_generator(q)
    h = pow(g, (q - 1) // (r + 1), q)
    ncosets = (q - 1) // (r + 1)
    pts = []
    for t in range(q - 1):
        y = pow(g, t, q)
        for c in range(ncosets):
            base = pow(g, c, q)
            for s in range(r + 1):
                pts.append(((base * pow(h, s, q)) % q, y))
    return pts


def oracle_generator_matrix(q: int, r: int) -> list[list[int]]:
    """Evaluation matrix over prime q with plain pow arithmetic."""
    pts = oracle_points(q, r)
    return [
        [(pow(x, i, q) * pow(y, j, q)) % q for (x, y) in pts]
        for (i, j) in oracle_monomials(q, r)
    ]


def oracle_supports_codeword(g_rows: list[list[int]], q: int, support: list[int]) -> bool:
    """Whether a nonzero codeword lives entirely inside the given positions.

    Such a word exists iff deleting those columns drops the row rank of G.
    """
    k = len(g_rows)
    keep = [c for c in range(len(g_rows[0])) if c not in set(support)]
    reduced = [[row[c] for c in keep] for row in g_rows]
    return rank_mod(reduced, q) < k


def oracle_min_distance_at_most(g_rows: list[list[int]], q: int, w: int) -> bool:
    n = len(g_rows[0])
    return any(
        oracle_supports_codeword(g_rows, q, list(s)) for s in combinations(range(n), w)
    )


def oracle_lemma_matrix(points: list[tuple[int, int]], q: int) -> list[list[int]]:
    """7x4 moment matrix at four grid points, plain arithmetic, prime q."""
    rows = []
    for (i, j) in ((0, 0), (1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (1, 4)):
        rows.append([(pow(a, i, q) * pow(b, j, q)) % q for (a, b) in points])
    return rows
