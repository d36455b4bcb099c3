"""Exception types shared across the package."""


class TritCodesError(Exception):
    """Base class for all errors raised by this package."""


# --- polynomial layer ---

class PolyParseError(TritCodesError, ValueError):
    """Input string is not a polynomial in any accepted form."""


class DivisionByZeroPoly(TritCodesError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class BothZero(TritCodesError):
    """gcd(0, 0) is undefined."""


class ZeroPoly(TritCodesError):
    """Operation requires a nonzero polynomial."""


class ConstantPoly(TritCodesError):
    """Operation requires a polynomial of degree >= 1."""


# --- field layer ---

class DegreeMismatch(TritCodesError):
    """Defining polynomial degree does not match the requested extension degree."""


class NotIrreducible(TritCodesError):
    """Defining polynomial is reducible over GF(3)."""


class NotPrimitive(TritCodesError):
    """x is not a generator of the multiplicative group modulo the defining polynomial."""


class ZeroToNonpositivePower(TritCodesError, ZeroDivisionError):
    """0**k is undefined for k <= 0 (except 0**0 == 1, by convention)."""


# --- conditions layer ---

class UnsupportedFamilyVariant(TritCodesError):
    """No case-split reduction is available for this family/parameter combination."""


# --- codes layer ---

class CosetCollision(TritCodesError):
    """Exponent choices collide on a cyclotomic coset, making the generator degenerate."""


class UnsupportedWeight(TritCodesError):
    """Weight outside the supported search range."""


class InternalError(TritCodesError):
    """An internal consistency check failed; indicates a bug, not bad input."""


# --- families layer ---

class NotApplicable(TritCodesError):
    """Family congruence conditions exclude this m; message names the violated condition."""


class GcdNotTwo(TritCodesError):
    """Congruence solver requires gcd(r, 3^m - 1) == 2."""


class BudgetExceeded(TritCodesError):
    """Requested computation exceeds the configured search budget."""
