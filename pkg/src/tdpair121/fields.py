"""Exact field arithmetic over the rationals and prime fields GF(p).

Every scalar in this package is a :class:`FieldElement` tied to a
:class:`Field` descriptor.  Arithmetic is exact and results are kept in
canonical form (reduced fraction with positive denominator, or residue in
``[0, p)``), so equality of elements is equality of representations.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _inv_mod(a: int, p: int) -> int:
    """Inverse of a mod p by extended Euclid (deterministic cost)."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"division by zero in GF({p})")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


class Field:
    """Descriptor for the rationals (``p == 0``) or GF(p) with p prime."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction, string or element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if self.p:
            if isinstance(value, Fraction):
                num = value.numerator % self.p
                return FieldElement._raw(self, num * _inv_mod(value.denominator, self.p) % self.p)
            return FieldElement._raw(self, value % self.p)
        if isinstance(value, Fraction):
            return FieldElement._raw(self, value)
        return FieldElement._raw(self, Fraction(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement._raw(self, 0 if self.p else Fraction(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement._raw(self, 1 if self.p else Fraction(1))

    def parse(self, text: str) -> FieldElement:
        """Parse "a" or "a/b"; in GF(p) "a/b" means a * b^-1 mod p."""
        parts = text.strip().split("/")
        if len(parts) > 2:
            raise ValueError(f"malformed field element {text!r}")
        try:
            num = int(parts[0])
            den = int(parts[1]) if len(parts) == 2 else 1
        except (ValueError, IndexError):
            raise ValueError(f"malformed field element {text!r}") from None
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        if self.p:
            return FieldElement._raw(self, num * _inv_mod(den, self.p) % self.p)
        return FieldElement._raw(self, Fraction(num, den))

    def elements(self):
        """All elements, for prime fields only."""
        if not self.p:
            raise ValueError("cannot enumerate the rationals")
        return [FieldElement._raw(self, r) for r in range(self.p)]

    def to_json(self) -> dict:
        if self.p:
            return {"kind": "Fp", "p": self.p}
        return {"kind": "Q"}

    @classmethod
    def from_json(cls, data: dict) -> Field:
        kind = data.get("kind")
        if kind == "Q":
            return cls(0)
        if kind == "Fp":
            return cls(int(data["p"]))
        raise ValueError(f"unknown field descriptor {data!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


class FieldElement:
    """Immutable element of a :class:`Field`, in canonical form."""

    __slots__ = ("field", "val")

    def __init__(self, field: Field, value):
        elem = field(value)
        self.field = field
        self.val = elem.val

    @classmethod
    def _raw(cls, field: Field, val) -> FieldElement:
        # val must already be canonical (Fraction, or int residue in [0, p))
        e = object.__new__(cls)
        e.field = field
        e.val = val
        return e

    @property
    def is_zero(self) -> bool:
        return self.val == 0

    def __bool__(self):
        return self.val != 0

    def _check(self, other) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError(f"cannot mix {self!r} with {other!r}")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        if p:
            return FieldElement._raw(self.field, (self.val + other.val) % p)
        return FieldElement._raw(self.field, self.val + other.val)

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        if p:
            return FieldElement._raw(self.field, (self.val - other.val) % p)
        return FieldElement._raw(self.field, self.val - other.val)

    def __mul__(self, other):
        self._check(other)
        p = self.field.p
        if p:
            return FieldElement._raw(self.field, (self.val * other.val) % p)
        return FieldElement._raw(self.field, self.val * other.val)

    def __truediv__(self, other):
        self._check(other)
        if other.val == 0:
            raise ZeroDivisionError(f"division by zero in {self.field!r}")
        p = self.field.p
        if p:
            return FieldElement._raw(self.field, self.val * _inv_mod(other.val, p) % p)
        return FieldElement._raw(self.field, self.val / other.val)

    def __neg__(self):
        p = self.field.p
        if p:
            return FieldElement._raw(self.field, -self.val % p)
        return FieldElement._raw(self.field, -self.val)

    def inverse(self) -> FieldElement:
        return self.field.one / self

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.val == other.val
        )

    def __lt__(self, other):
        # total order used only for deterministic sorting of outputs
        self._check(other)
        return self.val < other.val

    def __hash__(self):
        return hash((self.field, self.val))

    def __str__(self):
        return str(self.val)

    def __repr__(self):
        if self.field.p:
            return f"F{self.field.p}({self.val})"
        return f"Q({self.val})"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Named dispatch over the four arithmetic operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def parse_element(text: str, field: Field) -> FieldElement:
    return field.parse(text)


QQ = Field(0)
