"""Exact integer Laurent polynomials in a single tagged variable.

The two variables used in this package are "A" (Kauffman bracket) and
"t" (Jones polynomial). Coefficients are arbitrary-precision ints and
zero coefficients are never stored, so equality is plain map equality.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .errors import VariableMismatch


class LaurentPoly:
    """Immutable Laurent polynomial: {exponent: coefficient} plus a variable tag."""

    __slots__ = ("variable", "_coeffs", "_hash")

    def __init__(self, variable: str, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: Dict[int, int] = {}
        for exp, coef in items:
            e, c = int(exp), int(coef)
            if not c:
                continue
            new = clean.get(e, 0) + c
            if new:
                clean[e] = new
            else:
                del clean[e]
        self.variable = variable
        self._coeffs = clean
        self._hash = None

    @classmethod
    def zero(cls, variable: str) -> "LaurentPoly":
        return cls(variable)

    @classmethod
    def one(cls, variable: str) -> "LaurentPoly":
        return cls(variable, {0: 1})

    @classmethod
    def monomial(cls, variable: str, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls(variable, {exp: coef})

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    @property
    def term_count(self) -> int:
        return len(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "LaurentPoly") -> None:
        if self.variable != other.variable:
            raise VariableMismatch(
                f"cannot combine polynomials in {self.variable!r} and {other.variable!r}"
            )

    def add(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self._coeffs)
        for exp, coef in other._coeffs.items():
            new = out.get(exp, 0) + coef
            if new:
                out[exp] = new
            else:
                out.pop(exp, None)
        return LaurentPoly(self.variable, out)

    def mul(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    del out[e]
        return LaurentPoly(self.variable, out)

    def scale(self, k: int) -> "LaurentPoly":
        if not k:
            return LaurentPoly(self.variable)
        return LaurentPoly(self.variable, {e: c * k for e, c in self._coeffs.items()})

    def shift(self, delta: int) -> "LaurentPoly":
        """Multiply by variable**delta."""
        return LaurentPoly(self.variable, {e + delta: c for e, c in self._coeffs.items()})

    def substitute_monomial(self, variable: str, k: int) -> "LaurentPoly":
        """Map the variable x to y**k: exponent e becomes e*k.

        With k = -1 and the same variable this computes p(x^-1), which is
        how the mirror law jones(mirror(d))(t) = jones(d)(t^-1) is checked.
        """
        if k == 0 and self._coeffs:
            total = sum(self._coeffs.values())
            return LaurentPoly(variable, {0: total})
        return LaurentPoly(variable, {e * k: c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self.add(other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self.mul(other)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined here")
        result = LaurentPoly.one(self.variable)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result

    def __neg__(self) -> "LaurentPoly":
        return self.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variable == other.variable and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.variable, frozenset(self._coeffs.items())))
            )
        return self._hash

    def __setattr__(self, name, value):
        if name in ("variable", "_coeffs") and hasattr(self, "_coeffs"):
            raise AttributeError("LaurentPoly is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variable!r}, {self.sorted_terms()!r})"

    def sorted_terms(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            if exp == 0:
                body = str(abs(coef))
            else:
                head = "" if abs(coef) == 1 else str(abs(coef)) + "*"
                power = self.variable if exp == 1 else f"{self.variable}^{exp}"
                body = head + power
            if not parts:
                parts.append(("-" if coef < 0 else "") + body)
            else:
                parts.append(("- " if coef < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        """Wire form: terms ascending by exponent, coefficients as decimal strings."""
        return {
            "variable": self.variable,
            "terms": [{"exp": e, "coef": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: object) -> "LaurentPoly":
        if not isinstance(obj, dict):
            raise ValueError("polynomial JSON must be an object")
        variable = obj.get("variable")
        terms = obj.get("terms")
        if not isinstance(variable, str) or not isinstance(terms, list):
            raise ValueError("polynomial JSON needs 'variable' and 'terms'")
        coeffs: Dict[int, int] = {}
        for term in terms:
            if not isinstance(term, dict) or "exp" not in term or "coef" not in term:
                raise ValueError("each term needs 'exp' and 'coef'")
            exp = term["exp"]
            coef = term["coef"]
            if isinstance(exp, bool) or not isinstance(exp, int):
                raise ValueError("term exponent must be an integer")
            if isinstance(coef, bool) or not isinstance(coef, (int, str)):
                raise ValueError("term coefficient must be an int or decimal string")
            try:
                value = int(coef)
            except ValueError as exc:
                raise ValueError(f"bad coefficient {coef!r}") from exc
            if exp in coeffs:
                raise ValueError(f"duplicate exponent {exp}")
            coeffs[exp] = value
        return cls(variable, coeffs)


def jp_distance(p: LaurentPoly, q: LaurentPoly) -> int:
    """L1 distance between coefficient maps over the union of exponents.

    Zero iff the polynomials are equal; symmetric; satisfies the triangle
    inequality, so this is a genuine metric on polynomials.
    """
    if p.variable != q.variable:
        raise VariableMismatch(
            f"cannot compare polynomials in {p.variable!r} and {q.variable!r}"
        )
    pc = p._coeffs
    qc = q._coeffs
    total = 0
    for exp in pc.keys() | qc.keys():
        total += abs(pc.get(exp, 0) - qc.get(exp, 0))
    return total
