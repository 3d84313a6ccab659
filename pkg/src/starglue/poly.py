"""Exact sparse multivariate polynomials and Groebner bases.

Monomials are exponent tuples over an explicit ordered variable list.
Coefficients are exact rationals; integer coefficients stay machine ints and
only become Fractions when a division forces them to (all toric inputs are
pure binomials with unit coefficients, so the int path dominates).
Supported monomial orders: degrevlex and block elimination orders built from
degrevlex blocks.
"""

from __future__ import annotations

import heapq
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add, le as _le, sub as _sub

from .errors import (
    AmbientMismatch,
    PreconditionViolated,
    Timeout,
    TooLarge,
    ZeroPolynomial,
)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableSet:
    """Ordered list of distinct variable names; list order is priority order."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("variable set must be non-empty")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, name: str) -> "VariableSet":
        return VariableSet(self.names + (name,))


def variables(*names: str) -> VariableSet:
    return VariableSet(tuple(names))


# -- monomials (bare exponent tuples) ----------------------------------------

def mono_mul(a, b):
    return tuple(map(_add, a, b))


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    if all(map(_le, b, a)):
        return tuple(map(_sub, a, b))
    return None


def mono_lcm(a, b):
    return tuple(map(max, a, b))


def mono_divides(a, b):
    """True when a divides b."""
    return all(map(_le, a, b))


def mono_degree(a):
    return sum(a)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative well-order on exponent tuples.

    kind "degrevlex": graded, ties broken by the smallest exponent on the
    least differing variable.  kind "elim": degrevlex on the front block
    first, then degrevlex on the back block; an elimination order for the
    front variables.  `priority` permutes the variables (greatest first);
    identity means the ambient list order is the priority order.
    """

    kind: str
    nvars: int
    priority: tuple[int, ...]
    front: tuple[int, ...] = ()

    def __post_init__(self):
        # cached index plans (not fields; excluded from eq/hash)
        ident = self.priority == tuple(range(self.nvars))
        object.__setattr__(self, "_ident", ident)
        if self.kind == "elim":
            fset = set(self.front)
            object.__setattr__(
                self, "_fr", tuple(i for i in self.priority if i in fset)
            )
            object.__setattr__(
                self, "_bk", tuple(i for i in self.priority if i not in fset)
            )

    @staticmethod
    def degrevlex(nvars: int, priority=None) -> "MonomialOrder":
        priority = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(priority) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variables")
        return MonomialOrder("degrevlex", nvars, priority)

    @staticmethod
    def elimination(nvars: int, front, priority=None) -> "MonomialOrder":
        priority = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(priority) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variables")
        front = tuple(front)
        if not front or not set(front) <= set(range(nvars)):
            raise ValueError("front block must be a non-empty subset of variables")
        return MonomialOrder("elim", nvars, priority, front)

    def key(self, exps):
        """Sort key: key(a) > key(b) iff a > b in this order."""
        if len(exps) != self.nvars:
            raise AmbientMismatch(
                f"monomial has {len(exps)} exponents, order expects {self.nvars}"
            )
        if self.kind == "degrevlex":
            pe = exps if self._ident else [exps[i] for i in self.priority]
            return (sum(pe), tuple(-e for e in reversed(pe)))
        fr = [exps[i] for i in self._fr]
        bk = [exps[i] for i in self._bk]
        return (
            sum(fr),
            tuple(-e for e in reversed(fr)),
            sum(bk),
            tuple(-e for e in reversed(bk)),
        )

    def negkey(self, exps):
        """Order-reversing key, for min-heaps that must pop the largest
        monomial first."""
        if len(exps) != self.nvars:
            raise AmbientMismatch(
                f"monomial has {len(exps)} exponents, order expects {self.nvars}"
            )
        if self.kind == "degrevlex":
            pe = exps if self._ident else [exps[i] for i in self.priority]
            return (-sum(pe), tuple(reversed(pe)))
        fr = [exps[i] for i in self._fr]
        bk = [exps[i] for i in self._bk]
        return (-sum(fr), tuple(reversed(fr)), -sum(bk), tuple(reversed(bk)))

    def compare(self, m1, m2) -> int:
        """-1, 0 or 1 as m1 <, =, > m2."""
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def is_identity_degrevlex(self) -> bool:
        return self.kind == "degrevlex" and self.priority == tuple(range(self.nvars))

    def describe(self, ambient: VariableSet) -> str:
        chain = ">".join(ambient.names[i] for i in self.priority)
        if self.kind == "degrevlex":
            return f"degrevlex({chain})"
        front = ",".join(ambient.names[i] for i in self.front)
        return f"elim(front={front}; degrevlex {chain})"


def _norm_coeff(c):
    """Collapse integral Fractions back to int so the int fast path survives."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Sparse polynomial: terms sorted descending under a fixed monomial order."""

    __slots__ = ("ambient", "order", "terms")

    def __init__(self, ambient: VariableSet, order: MonomialOrder, terms):
        """terms: mapping or iterable of (exponent tuple, coefficient)."""
        if order.nvars != len(ambient):
            raise AmbientMismatch("order arity does not match variable set")
        merged = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != len(ambient):
                raise AmbientMismatch(
                    f"term has {len(exps)} exponents over {len(ambient)} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = merged.get(exps, 0) + coeff
            if c:
                merged[exps] = c
            elif exps in merged:
                del merged[exps]
        self.ambient = ambient
        self.order = order
        self.terms = tuple(
            (exps, _norm_coeff(merged[exps]))
            for exps in sorted(merged, key=order.key, reverse=True)
        )

    @classmethod
    def _from_sorted(cls, ambient, order, terms):
        """Trusted constructor: terms already merged, nonzero, descending."""
        self = object.__new__(cls)
        self.ambient = ambient
        self.order = order
        self.terms = tuple(terms)
        return self

    # -- basic queries --

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lm(self):
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(e) for e, _ in self.terms)

    def is_binomial_difference(self) -> bool:
        """True for x^u - x^v with unit coefficients (the toric shape)."""
        return (
            len(self.terms) == 2
            and {self.terms[0][1], self.terms[1][1]} == {1, -1}
        )

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_degree(self.terms[0][0])
        return all(mono_degree(e) == d for e, _ in self.terms)

    # -- arithmetic --

    def _check_compat(self, other: "Polynomial"):
        if self.ambient != other.ambient or self.order != other.order:
            raise AmbientMismatch("polynomials live over different ambients/orders")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        return Polynomial(self.ambient, self.order, list(self.terms) + list(other.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        neg = [(e, -c) for e, c in other.terms]
        return Polynomial(self.ambient, self.order, list(self.terms) + neg)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ambient, self.order, [(e, -c) for e, c in self.terms])

    def term_mul(self, coeff, exps) -> "Polynomial":
        """Multiply by the single term coeff * x^exps."""
        if not coeff:
            return Polynomial(self.ambient, self.order, [])
        return Polynomial(
            self.ambient,
            self.order,
            [(mono_mul(e, exps), c * coeff) for e, c in self.terms],
        )

    def mul(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((mono_mul(e1, e2), c1 * c2))
        return Polynomial(self.ambient, self.order, out)

    def monic(self) -> "Polynomial":
        lc = self.lc()
        if lc == 1:
            return self
        inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
        return Polynomial(
            self.ambient, self.order, [(e, _norm_coeff(c * inv)) for e, c in self.terms]
        )

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        return Polynomial(self.ambient, order, self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient == other.ambient and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms)))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self):
        return tuple(g.lm() for g in self.generators)


# -- text format --------------------------------------------------------------

def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms descending, '^' powers, explicit +/- separators."""
    if f.is_zero:
        return "0"
    parts = []
    for i, (exps, coeff) in enumerate(f.terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(f.ambient.names, exps)
            if e
        ]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?\Z")
_NUMBER_RE = re.compile(r"(\d+)(?:/(\d+))?\Z")


def parse_polynomial(text: str, ambient: VariableSet, order: MonomialOrder | None = None) -> Polynomial:
    """Parse the canonical text format; whitespace and term order are free."""
    if order is None:
        order = MonomialOrder.degrevlex(len(ambient))
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ValueError("empty polynomial text")
    chunks = re.findall(r"[+-]|[^+-]+", s)
    terms = []
    sign = 1
    expect_body = True
    for tok in chunks:
        if tok in "+-":
            if not expect_body and tok == "-":
                sign = -1
            elif not expect_body:
                sign = 1
            elif tok == "-":
                sign = -sign
            expect_body = True
            continue
        coeff = sign
        exps = [0] * len(ambient)
        for factor in tok.split("*"):
            num = _NUMBER_RE.match(factor)
            if num:
                n, d = num.groups()
                coeff = coeff * (Fraction(int(n), int(d)) if d else int(n))
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"cannot parse factor {factor!r}")
            name, e = fm.groups()
            try:
                idx = ambient.index(name)
            except ValueError:
                raise ValueError(f"unknown variable {name!r}") from None
            exps[idx] += int(e) if e else 1
        terms.append((tuple(exps), _norm_coeff(coeff)))
        sign = 1
        expect_body = False
    if expect_body:
        raise ValueError(f"dangling sign in {text!r}")
    return Polynomial(ambient, order, terms)


# -- division and S-polynomials ----------------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g for the leading terms' lcm."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("s_polynomial requires nonzero inputs")
    f._check_compat(g)
    L = mono_lcm(f.lm(), g.lm())
    cf, cg = f.lc(), g.lc()
    inv_f = Fraction(1, cf) if isinstance(cf, int) else 1 / cf
    inv_g = Fraction(1, cg) if isinstance(cg, int) else 1 / cg
    return f.term_mul(_norm_coeff(inv_f), mono_div(L, f.lm())) - g.term_mul(
        _norm_coeff(inv_g), mono_div(L, g.lm())
    )


def divmod_poly(f: Polynomial, G) -> tuple[list[Polynomial], Polynomial]:
    """Division with quotients: f = sum(q_i g_i) + r, no term of r divisible
    by any LM(g_i).  Reducer choice is deterministic: first divisor in list
    order, so the weak normal form is reproducible."""
    G = list(G)
    if any(g.is_zero for g in G):
        raise ZeroPolynomial("division by a zero polynomial")
    quotients = [Polynomial(f.ambient, f.order, []) for _ in G]
    rem_terms = []
    p = f
    lms = [g.lm() for g in G]
    while not p.is_zero:
        lead, lc = p.terms[0]
        for i, lmg in enumerate(lms):
            q = mono_div(lead, lmg)
            if q is not None:
                cg = G[i].lc()
                c = _norm_coeff(
                    Fraction(lc, cg) if isinstance(lc, int) and isinstance(cg, int) else lc / cg
                )
                quotients[i] = quotients[i] + Polynomial(f.ambient, f.order, [(q, c)])
                p = p - G[i].term_mul(c, q)
                break
        else:
            rem_terms.append((lead, lc))
            p = Polynomial(f.ambient, f.order, p.terms[1:])
    return quotients, Polynomial(f.ambient, f.order, rem_terms)


def _remainder_terms(terms, divisors, order):
    """Core of the division algorithm on raw term data.

    divisors: list of (lm, lc, tail) with tail the non-leading terms.
    Monomials of the working polynomial live in a dict plus a max-heap, so
    each is visited once and no intermediate polynomials are allocated.
    Returns the remainder terms in descending order."""
    negkey = order.negkey
    coeffs: dict = {}
    heap: list = []

    def add(e, c):
        if e in coeffs:
            c2 = coeffs[e] + c
            if c2:
                coeffs[e] = c2
            else:
                del coeffs[e]
        else:
            coeffs[e] = c
            heapq.heappush(heap, (negkey(e), e))

    for e, c in terms:
        add(e, c)
    remainder = []
    while heap:
        e = heapq.heappop(heap)[1]
        if e not in coeffs:
            continue
        c = coeffs.pop(e)
        for lm, lc, tail in divisors:
            q = mono_div(e, lm)
            if q is not None:
                factor = _norm_coeff(
                    Fraction(c, lc) if isinstance(c, int) and isinstance(lc, int) else c / lc
                )
                for te, tc in tail:
                    add(mono_mul(te, q), -factor * tc)
                break
        else:
            remainder.append((e, _norm_coeff(c)))
    return remainder


def normal_form(f: Polynomial, G, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f under division by G (full tail reduction); the reducer
    at each step is the first divisor in list order."""
    if order is not None and order != f.order:
        f = f.with_order(order)
        G = [g.with_order(order) for g in G]
    G = list(G)
    if any(g.is_zero for g in G):
        raise ZeroPolynomial("division by a zero polynomial")
    divisors = [(g.terms[0][0], g.terms[0][1], g.terms[1:]) for g in G]
    rem = _remainder_terms(f.terms, divisors, f.order)
    return Polynomial._from_sorted(f.ambient, f.order, rem)


# -- Buchberger ----------------------------------------------------------------

def _update_pairs(G, lmG, P, f, order):
    """Gebauer-Moeller update: add f to the basis, pruning the pair set with
    the coprimality and chain criteria.  P maps each pending pair to its
    cached leading-monomial lcm."""
    lmf = f.lm()
    t = len(G)
    # chain criterion against existing pairs
    kept = {}
    for ij, lij in P.items():
        if (
            not mono_divides(lmf, lij)
            or mono_lcm(lmG[ij[0]], lmf) == lij
            or mono_lcm(lmG[ij[1]], lmf) == lij
        ):
            kept[ij] = lij
    # group candidate pairs (i, t) by lcm, keep only minimal lcms
    buckets: dict[tuple, list[int]] = {}
    for i in range(t):
        buckets.setdefault(mono_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(buckets, key=order.key):
        if all(not mono_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        # coprimality criterion: drop the class if some member has coprime lead
        if not any(mono_coprime(lmG[i], lmf) for i in buckets[L]):
            kept[(min(buckets[L]), t)] = L
    G.append(f)
    lmG.append(lmf)
    return kept


def minimalize_basis(G, order):
    """Drop generators whose leading monomial is divisible by another's."""
    out = []
    for g in sorted(G, key=lambda h: order.key(h.lm())):
        if all(not mono_divides(h.lm(), g.lm()) for h in out):
            out.append(g)
    return out


def autoreduce(G, order):
    """Interreduce a minimal basis into the unique reduced basis (monic)."""
    G = minimalize_basis(G, order)
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1 :]
        r = normal_form(g, others) if others else g
        out.append(r.monic())
    return out


def buchberger(
    F,
    order: MonomialOrder | None = None,
    *,
    limit: int = 5000,
    deadline: float | None = None,
    stats: dict | None = None,
    trace: list | None = None,
    selection_weights=None,
) -> GroebnerBasis:
    """Buchberger's algorithm with normal pair selection (minimal lcm degree
    first), Gebauer-Moeller pruning, and final autoreduction to the unique
    reduced basis.

    `selection_weights` refines the degree used by the normal strategy:
    when the input is homogeneous for a weight vector, selecting pairs by
    weighted lcm degree makes the run degree-by-degree and avoids the
    cascade of redundant elements a plain-degree strategy produces on
    elimination orders.  Any weights are sound: selection order never
    affects correctness, only effort.

    `stats`, when a dict, receives pairs_processed / additions / basis_size.
    `trace`, when a list, receives ("pair", i, j) and ("add", poly) events.
    `deadline` is an absolute time.monotonic() stamp; exceeding it raises
    Timeout.  More than `limit` basis elements raises TooLarge.
    """
    F = list(F)
    if not F:
        raise ZeroPolynomial("buchberger requires at least one polynomial")
    if any(f.is_zero for f in F):
        raise ZeroPolynomial("buchberger requires nonzero polynomials")
    if order is None:
        order = F[0].order
    F = [f.with_order(order) if f.order != order else f for f in F]
    if selection_weights is not None and len(selection_weights) != order.nvars:
        raise AmbientMismatch("selection weight vector has wrong arity")

    G: list[Polynomial] = []
    lmG: list = []
    divisors: list = []
    P: dict[tuple[int, int], tuple] = {}
    heap: list = []
    w = tuple(selection_weights) if selection_weights is not None else None

    def admit(f):
        nonlocal P
        before = P
        P = _update_pairs(G, lmG, P, f, order)
        divisors.append((f.terms[0][0], f.terms[0][1], f.terms[1:]))
        # normal selection: minimal (weighted) lcm degree, ties by order key
        for ij, L in P.items():
            if ij not in before:
                deg = sum(map(lambda e, wi: e * wi, L, w)) if w else sum(L)
                heapq.heappush(heap, (deg, order.key(L), ij))

    for f in F:
        admit(f.monic())

    processed = additions = 0
    while P:
        if deadline is not None and time.monotonic() > deadline:
            raise Timeout("buchberger exceeded its deadline")
        pair = heapq.heappop(heap)[2]
        if pair not in P:
            continue  # pruned by a later update
        del P[pair]
        i, j = pair
        processed += 1
        if trace is not None:
            trace.append(("pair", i, j))
        s = s_polynomial(G[i], G[j])
        rem = _remainder_terms(s.terms, divisors, order)
        if rem:
            r = Polynomial._from_sorted(s.ambient, order, rem).monic()
            additions += 1
            if trace is not None:
                trace.append(("add", r))
            admit(r)
            if len(G) > limit:
                raise TooLarge(f"basis exceeded {limit} generators")
    reduced = autoreduce(G, order)
    if stats is not None:
        stats["pairs_processed"] = processed
        stats["additions"] = additions
        stats["basis_size"] = len(reduced)
    return GroebnerBasis(tuple(reduced), order, True)


# -- homogenization ------------------------------------------------------------

def homogenize(f: Polynomial, hvar: str = "x0") -> Polynomial:
    """Homogenize with a new least variable appended to the ambient."""
    ambient = f.ambient.extend(hvar)
    order = MonomialOrder.degrevlex(len(ambient))
    if f.is_zero:
        return Polynomial(ambient, order, [])
    d = f.degree()
    terms = [(e + (d - mono_degree(e),), c) for e, c in f.terms]
    return Polynomial(ambient, order, terms)


def dehomogenize(f: Polynomial) -> Polynomial:
    """Set the last (homogenizing) variable to 1."""
    ambient = VariableSet(f.ambient.names[:-1])
    order = MonomialOrder.degrevlex(len(ambient))
    return Polynomial(ambient, order, [(e[:-1], c) for e, c in f.terms])


def homogenize_basis(G: GroebnerBasis, hvar: str = "x0") -> GroebnerBasis:
    """Homogenize a reduced degrevlex basis termwise.

    The result is again reduced for the degrevlex order with the new variable
    least, and leading monomials are unchanged, so it is flagged reduced
    without recomputation."""
    if not G.reduced or not G.order.is_identity_degrevlex():
        raise PreconditionViolated(
            "homogenize_basis needs a reduced basis under the ambient-order degrevlex"
        )
    gens = tuple(homogenize(g, hvar) for g in G.generators)
    for g, h in zip(G.generators, gens):
        if h.lm()[:-1] != g.lm() or h.lm()[-1] != 0:
            raise PreconditionViolated("homogenization moved a leading monomial")
    order = gens[0].order if gens else MonomialOrder.degrevlex(G.order.nvars + 1)
    return GroebnerBasis(gens, order, True)
