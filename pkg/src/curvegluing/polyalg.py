"""Sparse multivariate polynomials over exact rationals, and monomial orders.

Monomials are plain exponent tuples; a :class:`Polynomial` maps monomials to
nonzero ``Fraction`` coefficients.  Orders compare through a key function, so
``max(terms, key=order.key)`` is the leading monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArityMismatch, ZeroPolynomial

Mono = tuple  # exponent vector, one non-negative int per variable slot

LT, EQ, GT = -1, 0, 1


# --------------------------------------------------------------------------
# monomial helpers
# --------------------------------------------------------------------------

def m_deg(m: Mono) -> int:
    return sum(m)


def m_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def m_divides(a: Mono, b: Mono) -> bool:
    """True when a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def m_div(a: Mono, b: Mono) -> Mono:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def m_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def m_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def m_one(nvars: int) -> Mono:
    return (0,) * nvars


# --------------------------------------------------------------------------
# monomial orders
# --------------------------------------------------------------------------

DEGREVLEX = "degrevlex"          # global: 1 is the smallest monomial
NEGDEGREVLEX = "negdegrevlex"    # local: 1 is the largest monomial
ELIMINATION = "elimination"      # global block order, first block eliminated


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order given by kind and a variable priority.

    ``priority`` lists variable slots from highest to lowest.  Ties inside a
    degree level break reverse-lexicographically: scanning the exponent
    difference from the lowest-priority variable upward, the first nonzero
    entry decides (negative entry means the left monomial is larger).
    For ``elimination``, monomials are first compared by total degree in
    ``block`` (the eliminated variables), then as degrevlex.
    """

    kind: str
    priority: tuple[int, ...]
    block: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in (DEGREVLEX, NEGDEGREVLEX, ELIMINATION):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of variable slots")
        if self.kind == ELIMINATION and not self.block:
            raise ValueError("elimination order needs a nonempty block")

    @property
    def nvars(self) -> int:
        return len(self.priority)

    @property
    def is_local(self) -> bool:
        return self.kind == NEGDEGREVLEX

    @property
    def is_global(self) -> bool:
        return not self.is_local

    def key(self, m: Mono):
        """Sort key: key(a) > key(b) iff a > b in this order."""
        tail = tuple(-m[v] for v in reversed(self.priority))
        if self.kind == DEGREVLEX:
            return (sum(m), tail)
        if self.kind == NEGDEGREVLEX:
            return (-sum(m), tail)
        bdeg = sum(m[v] for v in self.block)
        return (bdeg, sum(m), tail)

    def compare(self, a: Mono, b: Mono) -> int:
        if len(a) != len(b) or len(a) != self.nvars:
            raise ArityMismatch(f"monomials of arity {len(a)}, {len(b)} under "
                                f"{self.nvars}-variable order")
        ka, kb = self.key(a), self.key(b)
        return GT if ka > kb else LT if ka < kb else EQ


def degrevlex(nvars: int, priority: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder(DEGREVLEX, _default_priority(nvars, priority))


def negdegrevlex(nvars: int, priority: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder(NEGDEGREVLEX, _default_priority(nvars, priority))


def elimination(nvars: int, block: frozenset[int] | set[int],
                priority: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder(ELIMINATION, _default_priority(nvars, priority),
                         frozenset(block))


def _default_priority(nvars, priority):
    if priority is None:
        return tuple(range(nvars))
    return tuple(priority)


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

class Polynomial:
    """Immutable-by-convention sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=True):
        if terms is None:
            terms = {}
        if _clean:
            cleaned = {}
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    cleaned[tuple(m)] = c
            terms = cleaned
        self.terms: dict[Mono, Fraction] = terms

    # construction helpers ---------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({}, _clean=False)

    @classmethod
    def term(cls, coeff, mono: Mono) -> "Polynomial":
        c = Fraction(coeff)
        return cls({tuple(mono): c} if c else {}, _clean=False)

    @classmethod
    def variable(cls, slot: int, nvars: int, power: int = 1) -> "Polynomial":
        m = [0] * nvars
        m[slot] = power
        return cls.term(1, tuple(m))

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("total_degree of 0")
        return max(m_deg(m) for m in self.terms)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(res, _clean=False)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) - c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(res, _clean=False)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, _clean=False)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        res: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m_mul(m1, m2)
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial(res, _clean=False)

    def mul_term(self, coeff, mono: Mono) -> "Polynomial":
        if not coeff:
            return Polynomial.zero()
        return Polynomial({m_mul(m, mono): c * coeff
                           for m, c in self.terms.items()}, _clean=False)

    def scale(self, coeff) -> "Polynomial":
        if not coeff:
            return Polynomial.zero()
        return Polynomial({m: c * coeff for m, c in self.terms.items()},
                          _clean=False)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        parts = sorted(self.terms.items())
        return "Polynomial(" + " + ".join(f"{c}*{m}" for m, c in parts) + ")"


def leading_term(f: Polynomial, order: MonomialOrder) -> tuple[Mono, Fraction]:
    """Order-maximal (monomial, coefficient) pair of a nonzero polynomial."""
    if f.is_zero():
        raise ZeroPolynomial("leading term of the zero polynomial")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Mono:
    return leading_term(f, order)[0]


def least_degree_form(f: Polynomial) -> Polynomial:
    """Sum of the terms of minimal total degree (the initial form at the origin)."""
    if f.is_zero():
        raise ZeroPolynomial("least-degree form of 0")
    d = min(m_deg(m) for m in f.terms)
    return Polynomial({m: c for m, c in f.terms.items() if m_deg(m) == d},
                      _clean=False)


def ecart(f: Polynomial, order: MonomialOrder) -> int:
    """Total degree of f minus total degree of its leading monomial."""
    lm = leading_monomial(f, order)
    return f.total_degree() - m_deg(lm)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: cancel the leading terms against lcm(LM(f), LM(g))."""
    mf, cf = leading_term(f, order)
    mg, cg = leading_term(g, order)
    lcm = m_lcm(mf, mg)
    return f.mul_term(1 / cf, m_div(lcm, mf)) - g.mul_term(1 / cg, m_div(lcm, mg))


def monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    _, c = leading_term(f, order)
    return f if c == 1 else f.scale(1 / c)


# --------------------------------------------------------------------------
# textual syntax:  "x1^12 - x2^5",  "3*x1*y2 + 7"
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>[a-zA-Z]+\d*)|(?P<int>\d+)|(?P<op>[-+^*/()]))")


def parse_polynomial(text: str, names: list[str] | tuple[str, ...]) -> Polynomial:
    """Parse the textual syntax into a polynomial over the given variables.

    Supports integer or rational coefficients (``3/2``), ``^`` powers,
    explicit ``*`` products and juxtaposition (``x1x2`` is ``x1*x2``).
    Exact; round-trips with :func:`polynomial_to_str`.
    """
    slot = {n: i for i, n in enumerate(names)}
    nvars = len(names)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("var"):
            name = m.group("var")
            # juxtaposed variables: split "x1x2" greedily on known names
            while name and name not in slot:
                cut = _split_known_prefix(name, slot)
                if cut is None:
                    raise ValueError(f"unknown variable {name!r}")
                tokens.append(("var", cut))
                name = name[len(cut):]
            if name:
                tokens.append(("var", name))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int"))))
        else:
            tokens.append(("op", m.group("op")))

    result = Polynomial.zero()
    sign = 1
    cur_coeff = None
    cur_mono = None
    i = 0

    def flush():
        nonlocal result, cur_coeff, cur_mono, sign
        if cur_coeff is None and cur_mono is None:
            return
        c = sign * (1 if cur_coeff is None else cur_coeff)
        m = cur_mono if cur_mono is not None else m_one(nvars)
        result = result + Polynomial.term(c, m)
        cur_coeff, cur_mono, sign = None, None, 1

    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            flush()
            sign = 1 if val == "+" else -1
            i += 1
        elif kind == "int":
            c = Fraction(val)
            if i + 2 < len(tokens) and tokens[i + 1] == ("op", "/") \
                    and tokens[i + 2][0] == "int":
                c = Fraction(val, tokens[i + 2][1])
                i += 2
            cur_coeff = c if cur_coeff is None else cur_coeff * c
            i += 1
        elif kind == "var":
            power = 1
            if i + 2 < len(tokens) and tokens[i + 1] == ("op", "^"):
                nk, nv = tokens[i + 2]
                if nk != "int":
                    raise ValueError("exponent must be an integer")
                power = nv
                i += 2
            e = [0] * nvars if cur_mono is None else list(cur_mono)
            e[slot[val]] += power
            cur_mono = tuple(e)
            i += 1
        elif kind == "op" and val == "*":
            i += 1
        else:
            raise ValueError(f"unexpected token {val!r}")
    flush()
    return result


def _split_known_prefix(name, slot):
    for ln in range(len(name) - 1, 0, -1):
        if name[:ln] in slot:
            return name[:ln]
    return None


def polynomial_to_str(f: Polynomial, names: list[str] | tuple[str, ...],
                      order: MonomialOrder | None = None) -> str:
    """Render with terms in decreasing order (leading term first)."""
    if f.is_zero():
        return "0"
    if order is None:
        order = degrevlex(len(names))
    out = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        mono_txt = "*".join(
            f"{names[v]}^{m[v]}" if m[v] > 1 else names[v]
            for v in range(len(names)) if m[v]
        )
        if not mono_txt:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono_txt
        else:
            piece = f"{abs(c)}*{mono_txt}"
        if not out:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f"+ {piece}" if c > 0 else f"- {piece}")
    return " ".join(out)


def infer_variable_names(text: str) -> list[str]:
    """Collect variable names from raw polynomial text, x-block then y-block."""
    seen = set(re.findall(r"[a-zA-Z]+\d*", text))
    names = sorted(seen, key=_name_key)
    return names


def _name_key(name):
    m = re.fullmatch(r"([a-zA-Z]+)(\d*)", name)
    return (m.group(1), int(m.group(2) or 0))
