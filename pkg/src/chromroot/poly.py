"""Dense univariate polynomials with Python ``int`` coefficients, plus
Sturm-sequence root counting, isolation and bisection refinement.

Rationals are :class:`fractions.Fraction`.  No floating point is used;
every sign decision is made on exact integers.
"""

import math

from fractions import Fraction
from math import gcd

from chromroot.errors import NotDivisibleError

Rat = Fraction


def as_rat(x):
    """Coerce ints, Fractions and strings such as ``"32/27"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(x)


class IntPoly:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def linear_root(cls, r):
        """``x - r`` for an integer ``r``."""
        return cls((-r, 1))

    @classmethod
    def from_descending(cls, coeffs):
        return cls(reversed(list(coeffs)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if i == 1 else f"x^{i}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        return eval_rat(self, x)

    def shift(self, k):
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Divide by the content, keeping the sign of every coefficient."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(c // g for c in self.coeffs)


def _coerce(p):
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as an IntPoly")


def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_mul(a, b):
    return a * b


def poly_scale(a, c):
    return a * c


def poly_pow(a, e):
    return a ** e


def falling_factorial(k):
    """x(x-1)...(x-k+1); the empty product for k = 0."""
    out = IntPoly((1,))
    for i in range(k):
        out = out * IntPoly((-i, 1))
    return out


def derivative(p):
    return IntPoly(i * c for i, c in enumerate(p.coeffs) if i)


def eval_rat(p, x):
    """Exact value of ``p`` at the rational ``x`` (Horner)."""
    x = as_rat(x)
    num, den = x.numerator, x.denominator
    if den == 1:
        acc = 0
        for c in reversed(p.coeffs):
            acc = acc * num + c
        return Fraction(acc)
    # homogenised Horner keeps everything in integers
    acc = 0
    scale = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * scale
        scale *= den
    d = p.degree
    if d < 0:
        return Fraction(0)
    return Fraction(acc, den ** d)


def sign_at(p, x):
    """Sign (-1, 0, 1) of ``p(x)`` without forming the full Fraction."""
    x = as_rat(x)
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def divmod_rat(p, d):
    """Quotient and remainder over the rationals, as Fraction coefficient lists."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p.coeffs]
    dc = d.coeffs
    dd = len(dc) - 1
    lead = Fraction(dc[-1])
    if len(rem) - 1 < dd:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        q = rem[i] / lead
        quot[i - dd] = q
        if q:
            for j, c in enumerate(dc):
                rem[i - dd + j] -= q * c
    rem = rem[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def divide_exact(p, d):
    """Return ``q`` with ``p == q * d``; raises :class:`NotDivisibleError` otherwise."""
    quot, rem = divmod_rat(p, d)
    if rem:
        raise NotDivisibleError(f"{p} is not divisible by {d}")
    if any(q.denominator != 1 for q in quot):
        raise NotDivisibleError(f"{p} / {d} does not have integer coefficients")
    return IntPoly(int(q) for q in quot)


def _primitive_from_fractions(coeffs):
    """Positive rational multiple of ``coeffs`` that is a primitive IntPoly."""
    if not coeffs:
        return IntPoly()
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(int(c * den) for c in coeffs).primitive()


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient."""
    if a.is_zero():
        g = b.primitive()
    else:
        while not b.is_zero():
            _, r = divmod_rat(a, b)
            a, b = b, _primitive_from_fractions(r)
        g = a.primitive()
    if g.lead < 0:
        g = -g
    return g


def square_free_part(p):
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    g = poly_gcd(p, derivative(p))
    out = divide_exact(p.primitive(), g) if g.degree > 0 else p.primitive()
    return _unit_normal(out)


def _unit_normal(p):
    return -p if p.lead < 0 else p


def gcd_tower(p):
    """``[p, gcd(p, p'), gcd(g1, g1'), ...]`` down to a constant.

    A root of ``p`` has multiplicity ``m`` exactly when it is a root of the
    first ``m`` entries and not of the rest.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    tower = [_unit_normal(p.primitive())]
    while tower[-1].degree > 0:
        tower.append(poly_gcd(tower[-1], derivative(tower[-1])))
    return tower


def square_free_factorization(p):
    """``[(f_1, 1), (f_2, 2), ...]`` with ``p`` a constant times ``prod f_i**i``.

    Factors are primitive with positive leading coefficient; trivial
    factors are omitted.
    """
    tower = gcd_tower(p)
    parts = [_sqf_or_one(g) for g in tower]
    out = []
    for i in range(1, len(parts)):
        f = divide_exact(parts[i - 1], parts[i])
        if f.degree > 0:
            out.append((f, i))
    return out


def _sqf_or_one(g):
    return square_free_part(g) if g.degree > 0 else IntPoly((1,))


def root_multiplicity(p, r):
    """Largest m such that ``(den*x - num)**m`` divides ``p``."""
    if p.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    r = as_rat(r)
    lin = IntPoly((-r.numerator, r.denominator))
    m = 0
    while True:
        quot, rem = divmod_rat(p, lin)
        if rem:
            return m
        p = _primitive_from_fractions(quot)
        m += 1


# --------------------------------------------------------------- Sturm chains

def sturm_chain(p):
    """Sturm sequence of the square-free part of ``p``.

    Each element is scaled by a positive constant to stay primitive, which
    leaves every sign sequence unchanged.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    p0 = square_free_part(p)
    chain = [p0]
    p1 = derivative(p0)
    if p1.is_zero():
        return chain
    chain.append(p1.primitive())
    while chain[-1].degree > 0:
        _, r = divmod_rat(chain[-2], chain[-1])
        if not r:
            break
        chain.append(-_primitive_from_fractions(r))
    return chain


def _variations(signs):
    last = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at(chain, x):
    return _variations(sign_at(q, x) for q in chain)


def variations_at_infinity(chain, positive=True):
    signs = []
    for q in chain:
        s = 1 if q.lead > 0 else -1
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


class SturmCounter:
    """Counts distinct real roots of a fixed polynomial on intervals."""

    def __init__(self, p):
        self.chain = sturm_chain(p)
        self.sqf = self.chain[0]

    def variations(self, x):
        if x is None:
            raise ValueError("use variations_at_infinity for unbounded ends")
        return variations_at(self.chain, x)

    def count(self, lo, hi, closed_lo=False, closed_hi=False):
        """Distinct roots between ``lo`` and ``hi`` with the given endpoint rules.

        ``lo``/``hi`` may be ``None`` for -inf/+inf.  Uses the fact that
        ``V(a) - V(b)`` counts roots in the half-open interval ``(a, b]``.
        """
        va = variations_at_infinity(self.chain, False) if lo is None else self.variations(lo)
        vb = variations_at_infinity(self.chain, True) if hi is None else self.variations(hi)
        n = va - vb
        if lo is not None and closed_lo and sign_at(self.sqf, lo) == 0:
            n += 1
        if hi is not None and not closed_hi and sign_at(self.sqf, hi) == 0:
            n -= 1
        return n


def sturm_count(p, lo, hi, closed_lo=False, closed_hi=False):
    """Number of distinct real roots of ``p`` in the interval from lo to hi.

    Both ends are open unless the corresponding flag is set.  ``None``
    means an infinite end.
    """
    lo = None if lo is None else as_rat(lo)
    hi = None if hi is None else as_rat(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval: lo={lo} hi={hi}")
    return SturmCounter(p).count(lo, hi, closed_lo, closed_hi)


def cauchy_bound(p):
    """Every real root lies strictly inside ``(-B, B)``."""
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead) if p.degree > 0 else Fraction(1)


# ------------------------------------------------------------ isolation

class RootRecord:
    """An isolated real root of ``poly``.

    ``[lo, hi]`` contains exactly one root of the square-free part and
    ``lo < hi``.  ``exact`` is set when bisection landed on the root
    itself (a rational root).  ``decimal`` is filled by :func:`refine_root`.
    """

    __slots__ = ("poly", "lo", "hi", "multiplicity", "decimal", "exact", "places")

    def __init__(self, poly, lo, hi, multiplicity=1, decimal="", exact=None, places=None):
        lo, hi = as_rat(lo), as_rat(hi)
        if not lo < hi:
            raise ValueError("isolating interval needs lo < hi")
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.multiplicity = multiplicity
        self.decimal = decimal
        self.exact = exact
        self.places = places

    @property
    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __repr__(self):
        tail = f", decimal={self.decimal!r}" if self.decimal else ""
        return (f"RootRecord(lo={self.lo}, hi={self.hi}, "
                f"multiplicity={self.multiplicity}{tail})")

    def to_dict(self):
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "decimal": self.decimal,
            "multiplicity": self.multiplicity,
        }


def _isolate_sqf(counter, lo, hi):
    """Isolating intervals (or exact points) for roots of the square-free part in (lo, hi)."""
    sqf = counter.sqf
    found = []
    stack = [(lo, hi, counter.count(lo, hi))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1 and sign_at(sqf, a) and sign_at(sqf, b):
            found.append((a, b, None))
            continue
        mid = (a + b) / 2
        on_root = sign_at(sqf, mid) == 0
        if on_root:
            found.append((a, b, mid))
        left = counter.count(a, mid)
        right = k - left - (1 if on_root else 0)
        stack.append((mid, b, right))
        stack.append((a, mid, left))
    out = []
    for a, b, exact in found:
        if exact is not None:
            # shrink around the rational root until it is alone
            delta = min(exact - a, b - exact) / 2
            while counter.count(exact - delta, exact + delta, True, True) != 1:
                delta /= 2
            a, b = exact - delta, exact + delta
        out.append((a, b, exact))
    out.sort()
    return out


def isolate_roots(p, lo, hi):
    """One :class:`RootRecord` per distinct real root of ``p`` in the open interval (lo, hi).

    Intervals are disjoint, rational, sorted ascending, and carry the root's
    multiplicity in ``p``.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    lo, hi = as_rat(lo), as_rat(hi)
    if not lo < hi:
        raise ValueError(f"empty interval: lo={lo} hi={hi}")
    if p.degree <= 0:
        return []
    counter = SturmCounter(p)
    pieces = _isolate_sqf(counter, lo, hi)
    factors = square_free_factorization(p)
    records = []
    for a, b, exact in pieces:
        mult = None
        for f, i in factors:
            if exact is not None:
                hit = sign_at(f, exact) == 0
            else:
                hit = sturm_count(f, a, b) > 0
            if hit:
                mult = i
                break
        if mult is None:
            raise ArithmeticError("root not attributed to any square-free factor")
        records.append(RootRecord(p, a, b, mult, exact=exact))
    return records


def _round_half_even(x, places):
    """Decimal string of the rational ``x`` rounded to ``places`` digits."""
    scaled = x * 10 ** places
    q, r = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * r
    if twice > scaled.denominator or (twice == scaled.denominator and q % 2 == 1):
        q += 1
    return _format_scaled(q, places)


def _format_scaled(q, places):
    neg = q < 0
    q = abs(q)
    digits = str(q).rjust(places + 1, "0")
    body = digits if places == 0 else digits[:-places] + "." + digits[-places:]
    return ("-" if neg else "") + body


def refine_root(rec, places):
    """Bisect ``rec`` until the decimal rounding to ``places`` digits is certain.

    Stops once the interval is narrower than ``10**-(places+3)`` and no
    rounding boundary lies strictly inside it; a boundary that is itself
    the root is detected exactly and rounded half-to-even.
    """
    sqf = square_free_part(rec.poly)
    lo, hi, exact = rec.lo, rec.hi, rec.exact
    tol = Fraction(1, 10 ** (places + 3))
    cell = Fraction(1, 10 ** places)
    if exact is None:
        s_lo = sign_at(sqf, lo)
        s_hi = sign_at(sqf, hi)
        if s_lo == 0 or s_hi == 0:
            counter = SturmCounter(sqf)
            if counter.count(lo, hi) == 0:
                exact = lo if s_lo == 0 else hi
            else:
                # root is interior: pull the vanishing endpoint inwards
                while s_lo == 0 or s_hi == 0:
                    mid = (lo + hi) / 2
                    if counter.count(lo, mid, closed_hi=True) == 1:
                        hi = mid
                    else:
                        lo = mid
                    s_lo, s_hi = sign_at(sqf, lo), sign_at(sqf, hi)
        if exact is None and s_lo == s_hi:
            raise ValueError("interval does not bracket a sign change")
    while exact is None:
        wide = hi - lo >= tol
        # a rounding boundary (m + 1/2) * cell strictly inside (lo, hi)?
        k = math.floor(lo / cell - Fraction(1, 2)) + 1
        boundary = (k + Fraction(1, 2)) * cell
        straddles = lo < boundary < hi
        if not wide and not straddles:
            break
        mid = boundary if straddles and not wide else (lo + hi) / 2
        s_mid = sign_at(sqf, mid)
        if s_mid == 0:
            exact = mid
            break
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    if exact is not None:
        decimal = _round_half_even(exact, places)
    else:
        # no boundary strictly inside and none is the root, so every point
        # of the open interval rounds the same way
        decimal = _round_half_even((lo + hi) / 2, places)
    return RootRecord(rec.poly, lo, hi, rec.multiplicity, decimal, exact, places)
