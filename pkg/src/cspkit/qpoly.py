"""Dense integer polynomials in q, q-analogues, and evaluation at roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from .errors import NegativeExponent, OutOfDomain


class IntPoly:
    """Polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, c: list) -> "IntPoly":
        # c is a fresh list of ints owned by the caller
        while c and c[-1] == 0:
            c.pop()
        out = cls.__new__(cls)
        out.coeffs = tuple(c)
        return out

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPoly":
        if exp < 0:
            raise NegativeExponent(f"q^{exp}")
        return cls([0] * exp + [coeff])

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls([c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw([-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return IntPoly([other]) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if min(len(a), len(b)) < 8:
            out = [0] * (len(a) + len(b) - 1)
            for j, y in enumerate(b):
                if y:
                    for i, x in enumerate(a):
                        out[i + j] += x * y
            return IntPoly._raw(out)
        return IntPoly._raw(_kronecker_mul(a, b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k; a negative k must not push any term below q^0."""
        if k >= 0:
            return IntPoly._raw([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise NegativeExponent(f"shift by {k} leaves negative powers")
        return IntPoly(self.coeffs[-k:])

    def low_degree(self) -> int:
        for i, x in enumerate(self.coeffs):
            if x:
                return i
        return -1

    def divmod(self, divisor: "IntPoly"):
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        lead = d[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = len(d) - 1
        if len(rem) <= dd:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                base = i - dd
                for j, y in enumerate(d):
                    rem[base + j] -= c * y
        return IntPoly(quot), IntPoly(rem[:dd])

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"non-zero remainder {rem} dividing {self} by {divisor}")
        return quot

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPoly":
        return cls(int(x) for x in data)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mon = "q" if i == 1 else f"q^{i}"
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


def _pack(c, width: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in c), "little")


def _unpack(v: int, width: int, length: int) -> list:
    raw = v.to_bytes(width * length, "little")
    return [int.from_bytes(raw[i : i + width], "little") for i in range(0, width * length, width)]


def _kronecker_mul(a, b) -> list:
    """Convolution of coefficient sequences through one big-integer product per sign pattern."""
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = (bound.bit_length() + 8) // 8
    length = len(a) + len(b) - 1
    ap, an = [max(x, 0) for x in a], [max(-x, 0) for x in a]
    bp, bn = [max(x, 0) for x in b], [max(-x, 0) for x in b]
    out = [0] * length
    for x, y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(x) and any(y):
            prod = _unpack(_pack(x, width) * _pack(y, width), width, length)
            for i, v in enumerate(prod):
                if v:
                    out[i] += sign * v
    return out


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


def _mul_one_minus(c: list, a: int) -> list:
    # c * (1 - q^a), in place on a fresh list
    out = c + [0] * a
    for i in range(len(c)):
        out[i + a] -= c[i]
    return out


def _div_one_minus(c: list, b: int) -> list:
    # c / (1 - q^b), assumed exact
    out = list(c)
    for i in range(b, len(out)):
        out[i] += out[i - b]
    # exactness: the tail of length b must vanish
    if any(out[len(out) - b:]):
        raise ArithmeticError("inexact division by 1 - q^b")
    return out[: len(out) - b]


def q_int(n: int) -> IntPoly:
    if n < 0:
        raise OutOfDomain(f"[{n}]_q")
    return IntPoly([1] * n)


def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise OutOfDomain(f"[{n}]_q!")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=4096)
def q_binomial(n: int, k: int) -> IntPoly:
    """Gaussian binomial; zero unless 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    c = [1]
    for i in range(k):
        c = _mul_one_minus(c, n - i)
        c = _div_one_minus(c, i + 1)
    return IntPoly(c)


def q_multinomial(n: int, parts) -> IntPoly:
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        return ZERO
    out = ONE
    rest = n
    for p in parts:
        out = out * q_binomial(rest, p)
        rest -= p
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    if d < 1:
        raise OutOfDomain(f"cyclotomic({d})")
    num = IntPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = num.exact_div(cyclotomic(e))
    return num


@dataclass(frozen=True)
class RootOfUnityValue:
    """f evaluated at a primitive `order`-th root of unity, kept as a residue mod the cyclotomic polynomial."""

    order: int
    exponent: int
    residue: IntPoly

    @property
    def is_integer(self) -> bool:
        return self.residue.degree() <= 0

    @property
    def value(self):
        return self.residue[0] if self.is_integer else None

    def to_json(self):
        if self.is_integer:
            return str(self.value)
        return {"non_integer_residue": self.residue.to_json()}

    def __str__(self):
        return str(self.value) if self.is_integer else f"<non-integer: {self.residue} mod Phi_{self.order}>"


def reduce_at_order(f: IntPoly, o: int) -> IntPoly:
    folded = [0] * o
    for i, c in enumerate(f.coeffs):
        folded[i % o] += c
    return IntPoly(folded).divmod(cyclotomic(o))[1]


def root_order(m: int, d: int) -> int:
    return m // gcd(m, d)


def eval_at_root(f: IntPoly, m: int, d: int) -> RootOfUnityValue:
    """Evaluate f at xi^d where xi is a primitive m-th root of unity."""
    if m < 1:
        raise OutOfDomain(f"root order {m}")
    o = root_order(m, d)
    return RootOfUnityValue(o, d, reduce_at_order(f, o))


def q_lucas_eval(n: int, k: int, o: int) -> RootOfUnityValue:
    """q-binomial at a primitive o-th root via the q-Lucas factorisation."""
    if o < 1:
        raise OutOfDomain(f"root order {o}")
    if k < 0 or k > n:
        return RootOfUnityValue(o, 1, ZERO)
    n1, n0 = divmod(n, o)
    k1, k0 = divmod(k, o)
    small = reduce_at_order(q_binomial(n0, k0), o)
    return RootOfUnityValue(o, 1, small * comb(n1, k1))


def is_palindromic(f: IntPoly) -> bool:
    lo = f.low_degree()
    if lo < 0:
        return True
    c = f.coeffs[lo:]
    return c == c[::-1]


# named polynomials


def q_catalan(n: int) -> IntPoly:
    if n < 0:
        raise OutOfDomain(f"Cat_q({n})")
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - 1).shift(1)


@lru_cache(maxsize=4096)
def q_narayana(n: int, k: int) -> IntPoly:
    if n == 0:
        return ONE if k == 0 else ZERO
    if n < 0:
        raise OutOfDomain(f"Nar_q({n},{k})")
    if k < 1 or k > n:
        return ZERO
    top = (q_binomial(n, k) * q_binomial(n, k - 1)).shift(k * (k - 1))
    return top.exact_div(q_int(n))


def narayana_b(n: int, k: int) -> IntPoly:
    b = q_binomial(n, k)
    return (b * b).shift(k * k)


def skew_paths_pmaj(n: int, s: int) -> IntPoly:
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1)


def skew_paths_maj(n: int, s: int) -> IntPoly:
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1).shift(s + 1)


def cyclic_descent_catalan(n: int, k: int) -> IntPoly:
    """Distribution of maj - n over two-row tableaux with k cyclic descents."""
    if n < 0 or k < 0:
        raise OutOfDomain(f"g({n},{k})")
    if n <= 1 or k <= 1:
        return ONE if (n, k) in ((0, 0), (1, 1)) else ZERO
    num = (q_binomial(n + 1, k) * q_binomial(n - 2, k - 2) * (ONE + Q.shift(n - 1))).shift(k * (k - 2))
    return num.exact_div(q_int(n + 1))


def cyclic_descent_catalan_three_term(n: int, k: int) -> IntPoly:
    out = q_narayana(n, k) - q_narayana(n - 1, k).shift(k - 1)
    tail = q_narayana(n - 1, k - 1)
    if not tail.is_zero():
        out = out + tail.shift(k - 2)
    return out


def cyclic_descent_words(n: int, k: int) -> IntPoly:
    if n == 0 and k == 0:
        return ONE
    if not 1 <= k <= n:
        return ZERO
    return (q_binomial(n, k) * q_binomial(n - 1, k - 1) * (ONE + Q.shift(n - 1))).shift(k * (k - 1))


def ncc_refined(n: int, e: int, l: int) -> IntPoly:
    if min(n, e, l) < 0:
        return ZERO
    p = q_binomial(n, 2 * e) * q_catalan(e) * q_binomial(n - 2 * e, l)
    return p.shift(e * (e + 1) + (n + 1) * l)


def ncc_refined_b_candidate(n: int, e: int, l: int) -> IntPoly:
    if min(n, e, l) < 0:
        return ZERO
    p = q_int(e + 1) * q_binomial(n, 2 * e) * q_catalan(e) * q_binomial(n - 2 * e, l)
    return p.shift(e * e + n * l)


def ncc_refined_b(n: int, e: int, l: int) -> IntPoly:
    return (ONE + q_int(e)) * ncc_refined(n, e, l)


def pi_b_coeff(n: int, k: int) -> IntPoly:
    if n < 1:
        raise OutOfDomain(f"Pi_{n}")
    if k < 0:
        return ZERO
    j, odd = divmod(k, 2)
    head = q_binomial(n, j).shift(j * j)
    if odd:
        return head * q_binomial(n - 1, j)
    if j == 0:
        return ZERO
    return head * q_binomial(n - 1, j - 1).shift(n - j)


def b_ncc_by_size(n: int, k: int) -> IntPoly:
    out = ZERO
    for e in range(0, k + 1):
        out = out + ncc_refined_b(n, e, k - e)
    return out


def triangulation_ears(n: int, k: int) -> IntPoly:
    if n < 4 or not 2 <= k <= n // 2:
        raise OutOfDomain(f"Tri_q({n},{k}) needs n >= 4 and 2 <= k <= n/2")
    tail = ZERO
    for j in range(n - 2 * k + 1):
        tail = tail + q_binomial(n - 2 * k, j).shift(j * (n - 2))
    num = (q_int(n) * q_binomial(n - 4, 2 * k - 4) * q_catalan(k - 2) * tail).shift(k * (k - 2))
    return num.exact_div(q_int(k))


def twisted_catalan(n: int) -> IntPoly:
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - 2).shift(2)


def ab_candidate(n: int, k: int) -> IntPoly:
    if k < 1 or k > n:
        return ZERO
    return (q_binomial(n - 1, k - 1) * q_binomial(n + 1, k)).shift(k * (k - 1))


def marked_matchings(n: int, k: int, r: int) -> IntPoly:
    return q_narayana(n, k + 1) * q_binomial(n + 1, r)


def schur_interpolant(n: int, k: int, s: int) -> IntPoly:
    b = q_binomial(n, k)
    cross = (q_binomial(n, k - s - 1) * q_binomial(n, k + s + 1)).shift((s + 1) ** 2)
    return (b * b - cross).shift(k * (k + 1))


def _need(params, *names):
    missing = [x for x in names if x not in params]
    if missing:
        raise OutOfDomain(f"missing parameters {missing}")
    bad = [x for x in names if not isinstance(params[x], int) or params[x] < 0]
    if bad:
        raise OutOfDomain(f"parameters must be non-negative integers: {bad}")
    return [params[x] for x in names]


REGISTRY = {
    "CAT": (("n",), q_catalan),
    "NAR": (("n", "k"), q_narayana),
    "CATB": (("n",), lambda n: q_binomial(2 * n, n)),
    "NARB": (("n", "k"), narayana_b),
    "X_NS": (("n", "s"), skew_paths_pmaj),
    "Y_NS": (("n", "s"), skew_paths_maj),
    "G_CDES": (("n", "k"), cyclic_descent_catalan),
    "QBW": (("n", "k"), cyclic_descent_words),
    "QNCC": (("n", "e", "l"), ncc_refined),
    "QNCCB": (("n", "e", "l"), ncc_refined_b_candidate),
    "QNCCB_TRUE": (("n", "e", "l"), ncc_refined_b),
    "PI_B_COEFF": (("n", "k"), pi_b_coeff),
    "NARB_PAIRED": (("n", "k"), narayana_b),
    "U_NK": (("n", "k"), b_ncc_by_size),
    "TRI_EAR": (("n", "k"), triangulation_ears),
    "TWIST_CAT": (("n",), twisted_catalan),
    "AB_CANDIDATE_SN": (("n", "k"), ab_candidate),
    "MARKED_NCM": (("n", "k", "r"), marked_matchings),
    "SCHUR_INTERP": (("n", "k", "s"), schur_interpolant),
    "QBINOM": (("n", "k"), q_binomial),
}


def named_polynomial(name: str, **params) -> IntPoly:
    if name not in REGISTRY:
        raise OutOfDomain(f"unknown polynomial {name!r}")
    names, fn = REGISTRY[name]
    extra = set(params) - set(names)
    if extra:
        raise OutOfDomain(f"{name} takes {names}, got extra {sorted(extra)}")
    return fn(*_need(params, *names))
