"""Sparse multivariate polynomials over Q(sqrt 2).

Terms live in a dict mapping exponent tuples to nonzero Scalars.  The
canonical term order used everywhere (printing, JSON, leading terms) is
graded reverse lexicographic, descending: higher total degree first, ties
broken so that e precedes e' when the last nonzero entry of e - e' is
negative.  Sorting ascending by the key (-total_degree, reversed exponent
tuple) realizes exactly that order.

Two wire formats round-trip bit-exactly:

* text: terms joined with signs, coefficients as reduced fractions,
  ``*`` for products and ``^`` for powers, e.g. ``3/2*x^2*y - z + 4``.
  Coefficients with a sqrt2 part are parenthesized: ``(1 - 1/2*sqrt2)*x``.
* JSON: ``{"vars": [...], "terms": [{"coef": "p/q", "coef_sqrt2": "r/s",
  "exps": [...]}, ...]}`` with terms in canonical order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .scalar import Scalar

Exponents = Tuple[int, ...]


def grevlex_key(exps: Exponents) -> tuple:
    """Ascending sort by this key lists terms in descending grevlex order."""
    return (-sum(exps), tuple(reversed(exps)))


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Tuple[str, ...], terms: Dict[Exponents, Scalar]):
        cleaned: Dict[Exponents, Scalar] = {}
        nvars = len(vars)
        for exps, coef in terms.items():
            coef = Scalar.coerce(coef)
            if coef.is_zero():
                continue
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not match vars {vars}")
            cleaned[tuple(exps)] = coef
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # ---- constructors ----

    @staticmethod
    def zero(vars: Tuple[str, ...]) -> "MPoly":
        return MPoly(vars, {})

    @staticmethod
    def constant(value, vars: Tuple[str, ...]) -> "MPoly":
        c = Scalar.coerce(value)
        if c.is_zero():
            return MPoly.zero(vars)
        return MPoly(vars, {(0,) * len(vars): c})

    @staticmethod
    def variable(name: str, vars: Tuple[str, ...]) -> "MPoly":
        idx = vars.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(vars)))
        return MPoly(vars, {exps: Scalar(1)})

    @staticmethod
    def monomial(vars: Tuple[str, ...], exps: Exponents, coef=1) -> "MPoly":
        return MPoly(vars, {tuple(exps): Scalar.coerce(coef)})

    # ---- basic queries ----

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.terms:
            return Scalar(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        idx = self.vars.index(var)
        if not self.terms:
            return 0
        return max(e[idx] for e in self.terms)

    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=grevlex_key)]

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = min(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def coefficient(self, exps: Exponents) -> Scalar:
        return self.terms.get(tuple(exps), Scalar(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ---- arithmetic ----

    def _check_vars(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            other = MPoly.constant(other, self.vars)
        self._check_vars(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            s = c if acc is None else acc + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            other = MPoly.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            c = Scalar.coerce(other)
            if c.is_zero():
                return MPoly.zero(self.vars)
            return MPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        self._check_vars(other)
        # iterate over the smaller operand outside for fewer dict rebuilds
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: Dict[Exponents, Scalar] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prev = acc.get(e)
                s = ca * cb if prev is None else prev + ca * cb
                if s.is_zero():
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return MPoly(self.vars, acc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            return self * Scalar.coerce(other).inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(1, self.vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "MPoly":
        return MPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    # ---- calculus / structure ----

    def derivative(self, var: str) -> "MPoly":
        idx = self.vars.index(var)
        terms: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            ne = e[:idx] + (k - 1,) + e[idx + 1:]
            terms[ne] = terms.get(ne, Scalar(0)) + c * k
        return MPoly(self.vars, terms)

    def coefficient_in(self, var: str, power: int) -> "MPoly":
        """Coefficient of var**power, returned over the same variable tuple
        (the var slot is zeroed out)."""
        idx = self.vars.index(var)
        terms: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            if e[idx] == power:
                ne = e[:idx] + (0,) + e[idx + 1:]
                terms[ne] = c
        return MPoly(self.vars, terms)

    def as_univariate_in(self, var: str) -> Dict[int, "MPoly"]:
        idx = self.vars.index(var)
        buckets: Dict[int, Dict[Exponents, Scalar]] = {}
        for e, c in self.terms.items():
            k = e[idx]
            ne = e[:idx] + (0,) + e[idx + 1:]
            buckets.setdefault(k, {})[ne] = c
        return {k: MPoly(self.vars, t) for k, t in buckets.items()}

    def involves(self, var: str) -> bool:
        idx = self.vars.index(var)
        return any(e[idx] for e in self.terms)

    def weighted_degree(self, weights: Dict[str, int]) -> Optional[int]:
        """Maximum weighted degree of the terms, or None for the zero poly."""
        w = [weights[v] for v in self.vars]
        best: Optional[int] = None
        for e in self.terms:
            d = sum(k * wk for k, wk in zip(e, w))
            if best is None or d > best:
                best = d
        return best

    def quasi_homogeneous_degree(self, weights: Dict[str, int]) -> Optional[int]:
        """The common weighted degree of all terms, or None if mixed/zero."""
        w = [weights[v] for v in self.vars]
        degree: Optional[int] = None
        for e in self.terms:
            d = sum(k * wk for k, wk in zip(e, w))
            if degree is None:
                degree = d
            elif d != degree:
                return None
        return degree

    # ---- substitution / evaluation ----

    def evaluate(self, point: Dict[str, Scalar]) -> Scalar:
        total = Scalar(0)
        values = [Scalar.coerce(point[v]) for v in self.vars]
        for e, c in self.terms.items():
            prod = c
            for k, val in zip(e, values):
                if k:
                    prod = prod * val ** k
            total = total + prod
        return total

    def substitute(self, mapping: Dict[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables.  Unmapped variables stay
        themselves.  All images must share one variable tuple, which becomes
        the result's tuple."""
        if mapping:
            target_vars = next(iter(mapping.values())).vars
        else:
            target_vars = self.vars
        images: List[MPoly] = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if img.vars != target_vars:
                    raise ValueError("substitution images disagree on variables")
                images.append(img)
            else:
                images.append(MPoly.variable(v, target_vars))
        result = MPoly.zero(target_vars)
        pow_cache: List[Dict[int, MPoly]] = [dict() for _ in images]
        for e, c in self.terms.items():
            prod = MPoly.constant(c, target_vars)
            for i, k in enumerate(e):
                if not k:
                    continue
                cache = pow_cache[i]
                if k not in cache:
                    cache[k] = images[i] ** k
                prod = prod * cache[k]
            result = result + prod
        return result

    def rename_vars(self, new_vars: Tuple[str, ...]) -> "MPoly":
        if len(new_vars) != len(self.vars):
            raise ValueError("rename needs the same number of variables")
        return MPoly(new_vars, dict(self.terms))

    def with_vars(self, new_vars: Tuple[str, ...]) -> "MPoly":
        """Re-express over a superset (or reordering) of the variables."""
        pos = []
        for v in self.vars:
            if v not in new_vars:
                if self.involves(v):
                    raise ValueError(f"variable {v} is used but absent from {new_vars}")
                pos.append(None)
            else:
                pos.append(new_vars.index(v))
        terms: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for k, p in zip(e, pos):
                if p is not None:
                    ne[p] = k
            terms[tuple(ne)] = c
        return MPoly(tuple(new_vars), terms)

    # ---- rendering ----

    @staticmethod
    def _coef_text(c: Scalar) -> Tuple[str, bool]:
        """Return (text, needs_star) for a coefficient in front of a monomial."""
        if c.is_rational():
            return str(c.r0), True
        return "(" + str(c) + ")", True

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for e, c in self.sorted_terms():
            factors = [
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            ]
            mono = "*".join(factors)
            negate = c.sign_key() < 0
            body = -c if negate else c
            if not mono:
                text = str(body) if body.is_rational() else "(" + str(body) + ")"
            elif body == Scalar(1):
                text = mono
            else:
                coef, _ = self._coef_text(body)
                text = f"{coef}*{mono}"
            if not parts:
                parts.append(("-" if negate else "") + text)
            else:
                parts.append(("- " if negate else "+ ") + text)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r}, vars={self.vars})"

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"coef": str(c.r0), "coef_sqrt2": str(c.r1), "exps": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json_dict(data: dict) -> "MPoly":
        vars = tuple(data["vars"])
        terms: Dict[Exponents, Scalar] = {}
        for t in data["terms"]:
            coef = Scalar(Fraction(t["coef"]), Fraction(t.get("coef_sqrt2", "0")))
            terms[tuple(t["exps"])] = coef
        return MPoly(vars, terms)

    @staticmethod
    def from_json(text: str) -> "MPoly":
        return MPoly.from_json_dict(json.loads(text))

    # ---- parsing ----

    _TOKEN = re.compile(
        r"\s*(?:(?P<lpar>\()|(?P<rpar>\))|(?P<pow>\^)|(?P<star>\*)"
        r"|(?P<sign>[+-])|(?P<frac>\d+/\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*))"
    )

    @staticmethod
    def from_text(text: str, vars: Tuple[str, ...]) -> "MPoly":
        """Parse the canonical text format back into a polynomial.

        The grammar covers exactly what to_text emits (plus arbitrary
        whitespace): signed terms, fraction coefficients, parenthesized
        sqrt2 coefficients, ``*`` products and ``^`` powers.
        """
        tokens: List[Tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            m = MPoly._TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"cannot tokenize {text[pos:]!r}")
                break
            pos = m.end()
            for kind, val in m.groupdict().items():
                if val is not None:
                    tokens.append((kind, val))
                    break

        i = 0

        def peek():
            return tokens[i] if i < len(tokens) else (None, None)

        def take(kind):
            nonlocal i
            k, v = peek()
            if k != kind:
                raise ValueError(f"expected {kind}, found {k} {v!r}")
            i += 1
            return v

        def parse_signed_fraction() -> Fraction:
            sgn = 1
            while peek()[0] == "sign":
                if take("sign") == "-":
                    sgn = -sgn
            return sgn * Fraction(take("frac"))

        def parse_paren_scalar() -> Scalar:
            take("lpar")
            r0 = Fraction(0)
            r1 = Fraction(0)
            first = True
            while peek()[0] != "rpar":
                sgn = 1
                while peek()[0] == "sign":
                    if take("sign") == "-":
                        sgn = -sgn
                if not first and sgn == 1 and peek()[0] is None:
                    raise ValueError("unterminated coefficient")
                if peek()[0] == "frac":
                    q = Fraction(take("frac"))
                    if peek() == ("star", "*"):
                        take("star")
                        if take("name") != "sqrt2":
                            raise ValueError("only sqrt2 allowed in coefficients")
                        r1 += sgn * q
                    else:
                        r0 += sgn * q
                elif peek()[0] == "name":
                    if take("name") != "sqrt2":
                        raise ValueError("only sqrt2 allowed in coefficients")
                    r1 += sgn
                else:
                    raise ValueError(f"bad coefficient token {peek()!r}")
                first = False
            take("rpar")
            return Scalar(r0, r1)

        result = MPoly.zero(vars)
        nvars = len(vars)
        while i < len(tokens):
            sgn = 1
            while peek()[0] == "sign":
                if take("sign") == "-":
                    sgn = -sgn
            coef = Scalar(sgn)
            exps = [0] * nvars
            expect_factor = True
            saw_any = False
            while expect_factor:
                kind, val = peek()
                if kind == "frac":
                    coef = coef * Fraction(take("frac"))
                elif kind == "lpar":
                    coef = coef * parse_paren_scalar()
                elif kind == "name":
                    name = take("name")
                    if name == "sqrt2":
                        coef = coef * Scalar.sqrt2()
                    else:
                        if name not in vars:
                            raise ValueError(f"unknown variable {name!r}")
                        k = 1
                        if peek()[0] == "pow":
                            take("pow")
                            k = int(take("frac"))
                        exps[vars.index(name)] += k
                else:
                    raise ValueError(f"unexpected token {val!r}")
                saw_any = True
                if peek()[0] == "star":
                    take("star")
                else:
                    expect_factor = False
            if not saw_any:
                raise ValueError("empty term")
            result = result + MPoly.monomial(vars, tuple(exps), coef)
        return result


def divide_by_monic_in_var(
    numerator: MPoly, divisor: MPoly, var: str
) -> Tuple[MPoly, MPoly]:
    """Long division by a divisor monic in ``var`` (leading coefficient, as a
    polynomial in var, equal to the constant 1).  Exact; returns (q, r) with
    numerator = q*divisor + r and deg_var(r) < deg_var(divisor)."""
    d = divisor.degree_in(var)
    lead = divisor.coefficient_in(var, d)
    if not lead.is_constant() or lead.constant_value() != Scalar(1):
        raise ValueError("divisor is not monic in " + var)
    vars = numerator.vars
    if divisor.vars != vars:
        raise ValueError("operands disagree on variables")
    idx = vars.index(var)
    q = MPoly.zero(vars)
    r = numerator
    while r and r.degree_in(var) >= d:
        m = r.degree_in(var)
        c = r.coefficient_in(var, m)
        shift = tuple(m - d if i == idx else 0 for i in range(len(vars)))
        t = c * MPoly.monomial(vars, shift)
        q = q + t
        r = r - t * divisor
    return q, r
