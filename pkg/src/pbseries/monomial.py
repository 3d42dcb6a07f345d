"""Variable pools, monomials, and the ``*``-separated monomial syntax."""

from __future__ import annotations

import warnings

# Characters that may never occur inside a variable name.  '*' and '^' act
# as delimiters of the monomial grammar; the others are reserved so that the
# printed output can be fed to other computer algebra systems.
FORBIDDEN_NAME_CHARS = frozenset("+-*/^,.")

# Exponents are kept within a machine word.  Larger exponents are useless in
# practice: squarefree reduction expands x^a into a distinct variables.
MAX_EXPONENT = 2**63 - 1


class ParseError(ValueError):
    """Malformed monomial text.  ``position`` is the 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


def _check_name(name: str) -> None:
    if not name:
        raise ValueError("variable name must be nonempty")
    for ch in name:
        if ch in FORBIDDEN_NAME_CHARS or ch.isspace():
            raise ValueError(f"forbidden character {ch!r} in variable name {name!r}")


class VariablePool:
    """Ordered registry of variable names.

    Indices are assigned in first-seen order, are stable for the lifetime of
    the pool, and are never reused.  Names must avoid ``+-*/^,.`` and
    whitespace.
    """

    def __init__(self, names=()):
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        for name in names:
            self.add(name)

    def add(self, name: str) -> int:
        """Return the index of ``name``, registering it if unseen."""
        idx = self._index.get(name)
        if idx is not None:
            return idx
        _check_name(name)
        idx = len(self._names)
        self._names.append(name)
        self._index[name] = idx
        return idx

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def name(self, index: int) -> str:
        return self._names[index]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def clone(self) -> "VariablePool":
        other = VariablePool()
        other._names = list(self._names)
        other._index = dict(self._index)
        return other

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    def __repr__(self) -> str:
        return f"VariablePool({list(self._names)!r})"


class Monomial:
    """A monomial as a map from variable index to positive exponent.

    Absent indices have exponent zero; the empty map is the monomial 1.
    Instances are immutable and hashable.
    """

    __slots__ = ("_exps",)

    def __init__(self, exponents=None):
        items = []
        if exponents:
            for idx in sorted(exponents):
                exp = exponents[idx]
                if exp == 0:
                    continue
                if idx < 0:
                    raise ValueError(f"negative variable index {idx}")
                if exp < 0:
                    raise ValueError(f"negative exponent {exp} for variable {idx}")
                if exp > MAX_EXPONENT:
                    raise ValueError(f"exponent {exp} exceeds the machine-word bound")
                items.append((idx, exp))
        self._exps = tuple(items)

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls({index: exponent})

    @classmethod
    def squarefree(cls, indices) -> "Monomial":
        return cls({i: 1 for i in indices})

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self._exps)

    @property
    def support_mask(self) -> int:
        mask = 0
        for i, _ in self._exps:
            mask |= 1 << i
        return mask

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def is_one(self) -> bool:
        return not self._exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._exps)

    def exponent(self, index: int) -> int:
        for i, e in self._exps:
            if i == index:
                return e
        return 0

    def lcm(self, other: "Monomial") -> "Monomial":
        """Componentwise maximum of exponents."""
        exps = dict(self._exps)
        for i, e in other._exps:
            if exps.get(i, 0) < e:
                exps[i] = e
        return Monomial(exps)

    def divides(self, other: "Monomial") -> bool:
        """True iff every exponent of self is at most the one in ``other``."""
        theirs = dict(other._exps)
        return all(e <= theirs.get(i, 0) for i, e in self._exps)

    def has_common_factor(self, other: "Monomial") -> bool:
        """True iff gcd(self, other) != 1, i.e. the supports intersect."""
        if len(self._exps) > len(other._exps):
            self, other = other, self
        theirs = {i for i, _ in other._exps}
        return any(i in theirs for i, _ in self._exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self._exps)
        for i, e in other._exps:
            exps[i] = exps.get(i, 0) + e
        return Monomial(exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __repr__(self) -> str:
        return f"Monomial({dict(self._exps)!r})"


def format_monomial(mono: Monomial, pool: VariablePool) -> str:
    """Render a monomial in the input syntax, factors ordered by index."""
    if mono.is_one:
        return "1"
    parts = []
    for idx, exp in sorted(mono.exponents.items()):
        name = pool.name(idx)
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def parse_monomial(text: str, pool: VariablePool) -> Monomial:
    """Parse a ``*``-separated product of factors ``NAME`` or ``NAME^k``.

    Unseen names are added to ``pool``.  Repeated names accumulate their
    exponents, so ``x*x`` equals ``x^2``.  Exponents must be integers >= 1.
    Names consisting only of digits are accepted but flagged with a
    UserWarning, since they are usually typos for exponents.
    """
    if not text:
        raise ParseError("empty monomial", 1)
    exps: dict[int, int] = {}
    pos = 1
    for factor in text.split("*"):
        if not factor:
            raise ParseError("empty factor", pos)
        name, caret, exp_text = factor.partition("^")
        if not name:
            raise ParseError("missing variable name before '^'", pos)
        for off, ch in enumerate(name):
            if ch in FORBIDDEN_NAME_CHARS or ch.isspace():
                raise ParseError(f"forbidden character {ch!r} in variable name", pos + off)
        if caret:
            exp_pos = pos + len(name) + 1
            if not exp_text.isdigit():
                raise ParseError(f"malformed exponent {exp_text!r}", exp_pos)
            exp = int(exp_text)
            if exp < 1:
                raise ParseError(f"exponent must be >= 1, got {exp}", exp_pos)
            if exp > MAX_EXPONENT:
                raise ParseError(f"exponent {exp} exceeds the machine-word bound", exp_pos)
        else:
            exp = 1
        if name.isdigit():
            warnings.warn(f"variable name {name!r} consists only of digits", stacklevel=2)
        idx = pool.add(name)
        total = exps.get(idx, 0) + exp
        if total > MAX_EXPONENT:
            raise ParseError(f"accumulated exponent of {name!r} exceeds the machine-word bound", pos)
        exps[idx] = total
        pos += len(factor) + 1
    return Monomial(exps)
