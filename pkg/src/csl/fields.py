"""Exact base fields: the rationals and prime fields F_p."""

from fractions import Fraction


class Rationals:
    char = 0
    tag = "Q"

    def __call__(self, x):
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def elements(self, bound):
        """Small sample of elements, used by exhaustive/grid tests."""
        return [Fraction(i) for i in range(-bound, bound + 1)]

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.char = p
        self.tag = f"F_{p}"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.char)) % self.char
        return int(x) % self.char

    def inv(self, a):
        a %= self.char
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.char)

    def elements(self, bound=None):
        return list(range(self.char))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("F", self.char))

    def __repr__(self):
        return f"GF({self.char})"


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def field_from_tag(tag):
    """Parse "Q" or "F_p" / "F5" / "GF(5)"."""
    t = str(tag).strip().upper().replace("GF(", "F_").rstrip(")")
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("F"):
        return PrimeField(int(t[1:].lstrip("_")))
    raise ValueError(f"unknown base field {tag!r}")
