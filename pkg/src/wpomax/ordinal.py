"""Exact Cantor-normal-form arithmetic for ordinals below epsilon_0.

An ordinal is a finite sum of omega-powers with positive integer
coefficients and strictly decreasing exponents; the empty sum is 0.
Values are immutable and totally ordered, and every operation here is
pure, so instances can be shared freely between threads.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import (
    DepthCapExceeded,
    NonDecreasingExponents,
    NotALimit,
    NotASuccessor,
    NotLessOrEqual,
    ParseError,
    UnitsNotSorted,
    ZeroCoefficient,
)

DEFAULT_DEPTH_CAP = 16


class Ordinal:
    """A CNF ordinal: tuple of (exponent, coefficient) terms.

    The comparison key is a nested tuple mirroring the term list, so the
    lexicographic tuple order coincides with the ordinal order and native
    tuple comparison does the work.
    """

    __slots__ = ("terms", "key", "depth", "_hash")

    def __init__(self, terms: Tuple[Tuple["Ordinal", int], ...] = ()):
        # Fast internal constructor: callers guarantee normality.
        self.terms = terms
        self.key = tuple((e.key, c) for e, c in terms)
        self.depth = 0 if not terms else 1 + max(e.depth for e, _ in terms)
        self._hash = hash(self.key)

    def __eq__(self, other) -> bool:
        if isinstance(other, Ordinal):
            return self.key == other.key
        return NotImplemented

    def __ne__(self, other) -> bool:
        if isinstance(other, Ordinal):
            return self.key != other.key
        return NotImplemented

    def __lt__(self, other: "Ordinal") -> bool:
        return self.key < other.key

    def __le__(self, other: "Ordinal") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Ordinal") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Ordinal") -> bool:
        return self.key >= other.key

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"

    def is_nat(self) -> bool:
        """True iff the value is a natural number (including 0)."""
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def as_int(self) -> int:
        if not self.terms:
            return 0
        if not self.is_nat():
            raise ValueError(f"{self!r} is not a natural number")
        return self.terms[0][1]


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are nonnegative")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def make(terms: Sequence[Tuple[Ordinal, int]], depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    """Build a validated ordinal from (exponent, coefficient) pairs.

    Rejects non-normal input rather than reordering it: exponents must
    strictly decrease and coefficients must be at least 1.
    """
    prev: Optional[Ordinal] = None
    for e, c in terms:
        if not isinstance(c, int) or c < 1:
            raise ZeroCoefficient(f"coefficient {c!r} is below 1")
        if prev is not None and not e < prev:
            raise NonDecreasingExponents(
                f"exponent {format_ordinal(e)} does not decrease below {format_ordinal(prev)}"
            )
        prev = e
    out = Ordinal(tuple(terms))
    if out.depth > depth_cap:
        raise DepthCapExceeded(f"nesting depth {out.depth} exceeds cap {depth_cap}")
    return out


class Classification(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


def cmp(a: Ordinal, b: Ordinal) -> int:
    """Total order on ordinals: -1, 0 or 1."""
    if a.key < b.key:
        return -1
    return 0 if a.key == b.key else 1


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition: terms of a below the lead exponent of b are absorbed."""
    if not b.terms:
        return a
    if not a.terms:
        return b
    e = b.terms[0][0]
    i = 0
    while i < len(a.terms) and a.terms[i][0] > e:
        i += 1
    keep = a.terms[:i]
    if i < len(a.terms) and a.terms[i][0] == e:
        merged = (e, a.terms[i][1] + b.terms[0][1])
        return Ordinal(keep + (merged,) + b.terms[1:])
    return Ordinal(keep + b.terms)


def left_sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique rho with add(a, rho) == b, for a <= b."""
    i = 0
    while i < len(a.terms) and i < len(b.terms) and a.terms[i] == b.terms[i]:
        i += 1
    if i == len(a.terms):
        return Ordinal(b.terms[i:])
    if i == len(b.terms):
        raise NotLessOrEqual(f"{format_ordinal(a)} > {format_ordinal(b)}")
    ea, ca = a.terms[i]
    eb, cb = b.terms[i]
    if ea > eb or (ea == eb and ca > cb):
        raise NotLessOrEqual(f"{format_ordinal(a)} > {format_ordinal(b)}")
    if ea < eb:
        return Ordinal(b.terms[i:])
    return Ordinal(((eb, cb - ca),) + b.terms[i + 1:])


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal multiplication: b copies of a."""
    if not a.terms or not b.terms:
        return ZERO
    e1, c1 = a.terms[0]
    out = ZERO
    for f, d in b.terms:
        if f.terms:
            piece = Ordinal(((add(e1, f), d),))
        else:
            piece = Ordinal(((e1, c1 * d),) + a.terms[1:])
        out = add(out, piece)
    return out


def omega_pow(a: Ordinal) -> Ordinal:
    """omega ** a as a single CNF term; omega_pow(0) == 1."""
    return Ordinal(((a, 1),))


def nat_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    """Hessenberg sum: coefficient-wise addition per exponent."""
    merged = {}
    for e, c in a.terms:
        merged[e] = merged.get(e, 0) + c
    for e, c in b.terms:
        merged[e] = merged.get(e, 0) + c
    items = sorted(merged.items(), key=lambda t: t[0].key, reverse=True)
    return Ordinal(tuple(items))


def to_units(a: Ordinal) -> Tuple[Ordinal, ...]:
    """Expand coefficients: one exponent entry per omega-power summand."""
    units: List[Ordinal] = []
    for e, c in a.terms:
        units.extend([e] * c)
    return tuple(units)


def from_units(units: Sequence[Ordinal]) -> Ordinal:
    """Collect a nonincreasing unit list back into CNF terms."""
    terms: List[Tuple[Ordinal, int]] = []
    for e in units:
        if terms and e == terms[-1][0]:
            terms[-1] = (e, terms[-1][1] + 1)
        elif terms and not e < terms[-1][0]:
            raise UnitsNotSorted("unit exponents must be nonincreasing")
        else:
            terms.append((e, 1))
    return Ordinal(tuple(terms))


def classify(a: Ordinal) -> Classification:
    if not a.terms:
        return Classification.ZERO
    if not a.terms[-1][0].terms:
        return Classification.SUCCESSOR
    return Classification.LIMIT


def pred(a: Ordinal) -> Ordinal:
    """Strip one from the final coefficient of a successor."""
    if classify(a) is not Classification.SUCCESSOR:
        raise NotASuccessor(f"{format_ordinal(a)} is not a successor")
    e, c = a.terms[-1]
    if c > 1:
        return Ordinal(a.terms[:-1] + ((e, c - 1),))
    return Ordinal(a.terms[:-1])


def fund_seq(lam: Ordinal, n: int) -> Ordinal:
    """n-th member of the canonical fundamental sequence of a limit.

    Write lam = gamma + omega**e where gamma drops one unit from the last
    term.  For e = beta + 1 the value is gamma + omega**beta * n; for limit
    e it is gamma + sum(omega**fund_seq(e, j) for j < n) evaluated with
    ordinal addition, which collapses onto the last summand.
    """
    if classify(lam) is not Classification.LIMIT:
        raise NotALimit(f"{format_ordinal(lam)} is not a limit")
    e_last, c_last = lam.terms[-1]
    if c_last > 1:
        gamma = Ordinal(lam.terms[:-1] + ((e_last, c_last - 1),))
    else:
        gamma = Ordinal(lam.terms[:-1])
    if classify(e_last) is Classification.SUCCESSOR:
        beta = pred(e_last)
        if n == 0:
            return gamma
        return add(gamma, Ordinal(((beta, n),)))
    out = gamma
    for j in range(n):
        out = add(out, omega_pow(fund_seq(e_last, j)))
    return out


def is_indecomposable(a: Ordinal) -> bool:
    """True iff a is a single omega-power (coefficient 1, nonzero)."""
    return len(a.terms) == 1 and a.terms[0][1] == 1


# --- text form ------------------------------------------------------------
#
# ordinal := part ('+' part)* | '0'
# part    := 'w' ('^' (digit | '(' ordinal ')'))? ('*' nat)? | nat
#
# format_ordinal emits the canonical spelling: natural exponents 2..9 as a
# bare digit, anything longer parenthesised, coefficient omitted when 1.


def format_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        if e == ONE:
            text = "w"
        elif e.is_nat() and e.as_int() <= 9:
            text = f"w^{e.as_int()}"
        else:
            text = f"w^({format_ordinal(e)})"
        if c > 1:
            text += f"*{c}"
        parts.append(text)
    return "+".join(parts)


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.take(token):
            raise ParseError(f"expected {token!r}", self.pos)

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        digits = self.text[start:self.pos]
        if len(digits) > 1 and digits[0] == "0":
            raise ParseError("leading zeros are not allowed", start)
        return int(digits)


def _parse_part(cur: _Cursor, depth_cap: int) -> Tuple[Ordinal, int, int]:
    """One part; returns (exponent, coefficient, position of the part)."""
    cur.skip_ws()
    start = cur.pos
    if cur.take("w"):
        exponent = ONE
        if cur.take("^"):
            cur.skip_ws()
            if cur.take("("):
                exponent = _parse_sum(cur, depth_cap)
                cur.expect(")")
            elif cur.peek().isdigit():
                exponent = from_int(int(cur.text[cur.pos]))
                cur.pos += 1
            else:
                raise ParseError("expected a digit or '(' after '^'", cur.pos)
        coefficient = cur.nat() if cur.take("*") else 1
        if coefficient < 1:
            raise ParseError("coefficient must be at least 1", start)
        return exponent, coefficient, start
    if cur.peek().isdigit():
        value = cur.nat()
        if value < 1:
            raise ParseError("a zero part is only valid as the whole ordinal", start)
        return ZERO, value, start
    raise ParseError("expected 'w' or a number", cur.pos)


def _parse_sum(cur: _Cursor, depth_cap: int) -> Ordinal:
    cur.skip_ws()
    if cur.peek() == "0":
        # '0' stands alone; it is not a part of a longer sum.
        probe = _Cursor(cur.text, cur.pos)
        probe.pos += 1
        probe.skip_ws()
        if probe.peek() not in "+*0123456789":
            cur.pos += 1
            return ZERO
    terms: List[Tuple[Ordinal, int]] = []
    positions: List[int] = []
    while True:
        e, c, pos = _parse_part(cur, depth_cap)
        terms.append((e, c))
        positions.append(pos)
        if not cur.take("+"):
            break
    for i in range(1, len(terms)):
        if not terms[i][0] < terms[i - 1][0]:
            raise ParseError("exponents must strictly decrease left to right", positions[i])
    out = Ordinal(tuple(terms))
    if out.depth > depth_cap:
        raise DepthCapExceeded(f"nesting depth {out.depth} exceeds cap {depth_cap}")
    return out


def parse_ordinal(text: str, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    """Parse canonical ordinal text; rejects non-normal spellings."""
    cur = _Cursor(text)
    out = _parse_sum(cur, depth_cap)
    cur.skip_ws()
    if cur.pos != len(text):
        raise ParseError("trailing input", cur.pos)
    return out


def parse_embedded_ordinal(cur: _Cursor, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    """Parse an ordinal mid-stream (used by the term grammar)."""
    return _parse_sum(cur, depth_cap)


def parse_term_list(text: str, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    """Lenient reading: collect parts in any order and normalise.

    Equivalent to the natural sum of the individual parts; this backs the
    CLI --normalize flag and never silently kicks in elsewhere.
    """
    cur = _Cursor(text)
    cur.skip_ws()
    if cur.peek() == "0":
        probe = _Cursor(cur.text, cur.pos + 1)
        probe.skip_ws()
        if probe.peek() == "":
            return ZERO
    total = ZERO
    while True:
        e, c, _ = _parse_part(cur, depth_cap)
        total = nat_sum(total, Ordinal(((e, c),)))
        if not cur.take("+"):
            break
    cur.skip_ws()
    if cur.pos != len(text):
        raise ParseError("trailing input", cur.pos)
    if total.depth > depth_cap:
        raise DepthCapExceeded(f"nesting depth {total.depth} exceeds cap {depth_cap}")
    return total


# --- enumeration of the ordinals below a bound -----------------------------
#
# Fixed order: by length of the canonical text, ties broken by ASCII order.
# Naturals of a given length are emitted lazily (they are a contiguous
# range); the omega-led spellings of each length are generated from the
# grammar and sorted.


def _nat_texts(length: int) -> Iterator[Tuple[str, int]]:
    lo = 1 if length > 1 else 0
    lo = lo * 10 ** (length - 1)
    for v in range(lo, 10 ** length):
        yield str(v), v


@lru_cache(maxsize=None)
def _gen_parts(length: int) -> Tuple[Tuple[str, Ordinal, int], ...]:
    """Canonical part spellings with exponent >= 1 of exactly this length."""
    out: List[Tuple[str, Ordinal, int]] = []
    if length == 1:
        out.append(("w", ONE, 1))
    if length >= 3:
        clen = length - 2
        for ctext, c in _nat_texts(clen):
            if c >= 2:
                out.append((f"w*{ctext}", ONE, c))
    if length == 3:
        for d in range(2, 10):
            out.append((f"w^{d}", from_int(d), 1))
    if length >= 5:
        clen = length - 4
        for d in range(2, 10):
            for ctext, c in _nat_texts(clen):
                if c >= 2:
                    out.append((f"w^{d}*{ctext}", from_int(d), c))
    # parenthesised exponents: naturals >= 10 or omega-led ordinals
    for elen in range(1, length - 3):
        exps: List[Tuple[str, Ordinal]] = []
        if elen >= 2:
            exps.extend((t, from_int(v)) for t, v in _nat_texts(elen))
        exps.extend((t, o) for t, o in _gen_w_sums(elen, None))
        tail = length - 4 - elen
        for etext, e in exps:
            if tail == 0:
                out.append((f"w^({etext})", e, 1))
            elif tail >= 2:
                for ctext, c in _nat_texts(tail - 1):
                    if c >= 2:
                        out.append((f"w^({etext})*{ctext}", e, c))
    return tuple(out)


_W_SUM_CACHE = {}


def _gen_w_sums(length: int, bound_key) -> Tuple[Tuple[str, Ordinal], ...]:
    """Canonical omega-led sums of exactly this length with lead exponent
    below the bound (bound_key None means unbounded)."""
    cache_key = (length, bound_key)
    hit = _W_SUM_CACHE.get(cache_key)
    if hit is not None:
        return hit
    out: List[Tuple[str, Ordinal]] = []
    for plen in range(1, length + 1):
        rest_len = length - plen - 1
        if rest_len == 0 or rest_len < -1:
            continue
        for ptext, e, c in _gen_parts(plen):
            if bound_key is not None and not e.key < bound_key:
                continue
            lead = (e, c)
            if rest_len == -1:
                out.append((ptext, Ordinal((lead,))))
                continue
            for rtext, r in _nat_texts(rest_len):
                if r >= 1:
                    out.append((f"{ptext}+{rtext}", Ordinal((lead, (ZERO, r)))))
            for rtext, rval in _gen_w_sums(rest_len, e.key):
                out.append((f"{ptext}+{rtext}", Ordinal((lead,) + rval.terms)))
    out.sort(key=lambda p: p[0])
    result = tuple(out)
    _W_SUM_CACHE[cache_key] = result
    return result


def iter_below(alpha: Ordinal) -> Iterator[Ordinal]:
    """All ordinals below alpha, by canonical text length then text order."""
    if not alpha.terms:
        return
    nat_bound = alpha.as_int() if alpha.is_nat() else None
    yielded = 0
    length = 1
    while True:
        lo = 0 if length == 1 else 10 ** (length - 1)
        hi = 10 ** length
        if nat_bound is not None:
            hi = min(hi, nat_bound)
        for v in range(lo, hi):
            yield from_int(v)
            yielded += 1
        if nat_bound is not None:
            if yielded >= nat_bound:
                return
        else:
            for _, val in _gen_w_sums(length, None):
                if val < alpha:
                    yield val
        length += 1
