"""Sparse integer polynomials in ring variables and one homological variable."""

from __future__ import annotations

from .monomial import Monomial, VariablePool, format_monomial


class MultigradedPolynomial:
    """Integer-coefficient polynomial with terms ``coeff * x^alpha * t^d``.

    Terms are keyed by ``(multidegree, t_degree)`` where the multidegree is a
    :class:`Monomial` over the ring variables and ``t_degree`` is a
    nonnegative integer.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[tuple[Monomial, int], int] = {}
        if terms:
            for (mono, tdeg), coeff in terms.items():
                if not isinstance(mono, Monomial):
                    raise TypeError("multidegree must be a Monomial")
                if tdeg < 0:
                    raise ValueError(f"negative homological degree {tdeg}")
                if coeff:
                    data[(mono, tdeg)] = data.get((mono, tdeg), 0) + coeff
                    if not data[(mono, tdeg)]:
                        del data[(mono, tdeg)]
        self._terms = data

    @classmethod
    def zero(cls) -> "MultigradedPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "MultigradedPolynomial":
        return cls({(Monomial.one(), 0): 1})

    @classmethod
    def term(cls, mono: Monomial, tdeg: int, coeff: int = 1) -> "MultigradedPolynomial":
        return cls({(mono, tdeg): coeff})

    def terms(self) -> dict[tuple[Monomial, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial, tdeg: int) -> int:
        return self._terms.get((mono, tdeg), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((Monomial.one(), 0), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def t_degree(self) -> int:
        """Largest t-exponent with a nonzero coefficient (-1 for the zero polynomial)."""
        return max((d for _, d in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultigradedPolynomial) and self._terms == other._terms

    def __neg__(self) -> "MultigradedPolynomial":
        return MultigradedPolynomial({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        data = dict(self._terms)
        for k, c in other._terms.items():
            v = data.get(k, 0) + c
            if v:
                data[k] = v
            elif k in data:
                del data[k]
        out = MultigradedPolynomial()
        out._terms = data
        return out

    def __sub__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        return self + (-other)

    def __mul__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        data: dict[tuple[Monomial, int], int] = {}
        for (m1, d1), c1 in self._terms.items():
            for (m2, d2), c2 in other._terms.items():
                key = (m1 * m2, d1 + d2)
                v = data.get(key, 0) + c1 * c2
                if v:
                    data[key] = v
                elif key in data:
                    del data[key]
        out = MultigradedPolynomial()
        out._terms = data
        return out

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultigradedPolynomial({self._terms!r})"


def _term_order_key(pool_width: int):
    # Ascending t-degree, then graded-lexicographic (leading term first)
    # on the multidegree: higher total degree first, then descending lex
    # with variables compared in pool-index order.
    def key(item):
        (mono, tdeg), _ = item
        exps = mono.exponents
        vec = tuple(-exps.get(i, 0) for i in range(pool_width))
        return (tdeg, -mono.degree, vec)

    return key


def format_polynomial(poly: MultigradedPolynomial, pool: VariablePool, var: str = "ZZ") -> str:
    """Render in the canonical term order.

    Terms are joined by " + " or " - " according to the coefficient sign,
    magnitude-1 coefficients are omitted unless the term is constant, ring
    variables are joined by "*", and the homological variable is printed
    last as ``var^d`` (bare ``var`` for d = 1, omitted for d = 0).
    """
    if poly.is_zero:
        return "0"
    width = 1 + max(
        (max(m.support, default=-1) for (m, _) in poly._terms), default=-1
    )
    ordered = sorted(poly.items(), key=_term_order_key(width))
    rendered = []
    for (mono, tdeg), coeff in ordered:
        factors = []
        if abs(coeff) != 1 or (mono.is_one and tdeg == 0):
            factors.append(str(abs(coeff)))
        if not mono.is_one:
            factors.append(format_monomial(mono, pool))
        if tdeg == 1:
            factors.append(var)
        elif tdeg != 0:
            factors.append(f"{var}^{tdeg}")
        rendered.append((coeff < 0, "*".join(factors)))
    neg, text = rendered[0]
    out = ("-" if neg else "") + text
    for neg, text in rendered[1:]:
        out += (" - " if neg else " + ") + text
    return out
