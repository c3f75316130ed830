# poly.py

"""
Dünnbesetzte multivariate Polynome über F_p.

Ein Polynom ist ein Wörterbuch von Exponentenvektoren auf Koeffizienten, z.B.
f(x0, x1, x2) = x0*x2 - x1^2 über p = 101 als
    {
        (1, 0, 1) => 1,
        (0, 2, 0) => 100,
    }
Nullkoeffizienten werden nie gespeichert. Die kanonische Termordnung für die
Ausgabe ist graduiert revers-lexikographisch (wie die Default-Ordnung der
Gröbner-Basen).

Affine Polynome in x1..xn werden mit num_vars = n gespeichert; der Index j des
Exponentenvektors gehört dann zu x_(j+1). Homogenisieren stellt x0 voran.
"""
from dataclasses import dataclass

from errors import BothZero, FieldMismatch, InvalidParameters
from field import FieldConfig, Scalar


def grevlex_key(exp):
    """Sortierschlüssel: größerer Schlüssel = größeres Monom in grevlex."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


# ==============================================================================
# 1. MULTIVARIATE POLYNOME
# ==============================================================================
class MultiPoly:
    __slots__ = ('field', 'num_vars', 'terms')

    def __init__(self, field, num_vars, terms=None):
        p = field.prime
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise InvalidParameters(f"Exponent {exp} passt nicht zu {num_vars} Variablen")
            c = field.canonical(c)
            if c:
                clean[exp] = (clean.get(exp, 0) + c) % p
                if not clean[exp]:
                    del clean[exp]
        self.field = field
        self.num_vars = num_vars
        self.terms = clean

    @classmethod
    def zero(cls, field, num_vars):
        return cls(field, num_vars)

    @classmethod
    def constant(cls, field, num_vars, c):
        return cls(field, num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, field, num_vars, i):
        exp = [0] * num_vars
        exp[i] = 1
        return cls(field, num_vars, {tuple(exp): 1})

    @classmethod
    def from_linear(cls, field, coeffs, constant_first=False):
        """
        Lineares Polynom aus einem Koeffizientenvektor. Mit constant_first ist
        coeffs = (c, a_1, …, a_n) eine affine Form in n Variablen.
        """
        coeffs = list(coeffs)
        terms = {}
        if constant_first:
            c, coeffs = coeffs[0], coeffs[1:]
            terms[(0,) * len(coeffs)] = c
        n = len(coeffs)
        for i, a in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = a
        return cls(field, n, terms)

    # --- Arithmetik -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.field.prime != self.field.prime:
                raise FieldMismatch("Polynome aus verschiedenen Körpern")
            if other.num_vars != self.num_vars:
                raise InvalidParameters("Polynome mit verschiedener Variablenzahl")
            return other
        if isinstance(other, (int, Scalar)):
            return MultiPoly.constant(self.field, self.num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        p = self.field.prime
        for exp, c in other.terms.items():
            terms[exp] = (terms.get(exp, 0) + c) % p
        return MultiPoly(self.field, self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.prime
        return MultiPoly(self.field, self.num_vars, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.prime
        terms = {}
        for e0, c0 in self.terms.items():
            for e1, c1 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e0, e1))
                terms[exp] = (terms.get(exp, 0) + c0 * c1) % p
        return MultiPoly(self.field, self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        acc = MultiPoly.constant(self.field, self.num_vars, 1)
        for b in bin(exponent)[2:]:
            acc = acc * acc
            if b == '1':
                acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.field.prime == other.field.prime and self.num_vars == other.num_vars
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r}, p={self.field.prime})"

    # --- Eigenschaften --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_linear_form(self):
        """Homogen vom Grad 1 (oder null)."""
        return all(sum(e) == 1 for e in self.terms)

    def linear_coeffs(self):
        """Koeffizientenvektor einer homogenen Linearform."""
        if not self.is_linear_form():
            raise InvalidParameters(f"{format_poly(self)} ist keine Linearform")
        coeffs = [0] * self.num_vars
        for exp, c in self.terms.items():
            coeffs[exp.index(1)] = c
        return tuple(coeffs)

    def affine_coeffs(self):
        """Vektor (c, a_1, …, a_n) eines Polynoms vom Grad <= 1."""
        if self.degree() > 1:
            raise InvalidParameters(f"{format_poly(self)} ist nicht affin-linear")
        coeffs = [0] * (self.num_vars + 1)
        for exp, c in self.terms.items():
            if sum(exp) == 0:
                coeffs[0] = c
            else:
                coeffs[exp.index(1) + 1] = c
        return tuple(coeffs)

    def sorted_terms(self, key=grevlex_key):
        """Terme absteigend bezüglich der Ordnung."""
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def embed(self, num_vars, offset=0):
        """Dasselbe Polynom in einem größeren Ring, Variable i wird zu i + offset."""
        if offset + self.num_vars > num_vars:
            raise InvalidParameters("Einbettung passt nicht in den Zielring")
        tail = num_vars - offset - self.num_vars
        return MultiPoly(self.field, num_vars,
                         {(0,) * offset + e + (0,) * tail: c for e, c in self.terms.items()})


def evaluate(f, point):
    """Wert von f im Punkt (Scalar oder int-Koordinaten)."""
    if len(point) != f.num_vars:
        raise InvalidParameters(f"Punkt der Länge {len(point)} für {f.num_vars} Variablen")
    p = f.field.prime
    values = [f.field.canonical(x) for x in point]
    total = 0
    for exp, c in f.terms.items():
        term = c
        for v, e in zip(values, exp):
            if e:
                term = term * pow(v, e, p) % p
        total += term
    return Scalar(total % p, f.field)


def homogenize(f):
    """Homogenisierung mit x0: Ergebnis in x0..xn vom Grad deg(f)."""
    D = max(f.degree(), 0)
    return MultiPoly(f.field, f.num_vars + 1,
                     {(D - sum(e),) + e: c for e, c in f.terms.items()})


def dehomogenize(F):
    """Setzt x0 = 1."""
    terms = {}
    p = F.field.prime
    for e, c in F.terms.items():
        terms[e[1:]] = (terms.get(e[1:], 0) + c) % p
    return MultiPoly(F.field, F.num_vars - 1, terms)


def format_poly(f, offset=0):
    """Textdarstellung wie "x0*x2 - x1^2"; Variable j heißt x(j + offset)."""
    if f.is_zero():
        return "0"
    p = f.field.prime
    parts = []
    for exp, c in f.sorted_terms():
        signed = c - p if c > p // 2 else c
        mono = "*".join(
            f"x{i + offset}" if e == 1 else f"x{i + offset}^{e}"
            for i, e in enumerate(exp) if e
        )
        mag = abs(signed)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if signed < 0 else body)
        else:
            parts.append(f"- {body}" if signed < 0 else f"+ {body}")
    return " ".join(parts)


# ==============================================================================
# 2. UNIVARIATE POLYNOME
# ==============================================================================
@dataclass(frozen=True)
class UniPoly:
    """Koeffizienten in t, niedrigster Grad zuerst; führender Koeffizient != 0."""
    field: FieldConfig
    coeffs: tuple

    @classmethod
    def of(cls, field, coeffs):
        p = field.prime
        values = [field.canonical(c) for c in coeffs]
        while values and values[-1] % p == 0:
            values.pop()
        return cls(field, tuple(values))

    @classmethod
    def monomial(cls, field, degree, c=1):
        return cls.of(field, [0] * degree + [c])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly.of(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly.of(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly.of(self.field, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly.of(self.field, [])
        p = self.field.prime
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return UniPoly.of(self.field, out)

    def divmod(self, other):
        if other.is_zero():
            raise BothZero("Division durch das Nullpolynom")
        p = self.field.prime
        rem = list(self.coeffs)
        lead_inv = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            factor = rem[-1] * lead_inv % p
            quot[shift] = factor
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = (rem[shift + j] - factor * b) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly.of(self.field, quot), UniPoly.of(self.field, rem)

    def monic(self):
        if self.is_zero():
            return self
        p = self.field.prime
        factor = pow(self.coeffs[-1], -1, p)
        return UniPoly.of(self.field, [c * factor for c in self.coeffs])

    def evaluate(self, t):
        p = self.field.prime
        t = self.field.canonical(t)
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % p
        return acc


def substitute_linear_forms(f, substitutions):
    """
    Das univariate Polynom f(L_1(t), …, L_m(t)).

    Args:
        f (MultiPoly): Polynom in m Variablen.
        substitutions (sequence of UniPoly): Ein Polynom in t pro Variable.
    """
    if len(substitutions) != f.num_vars:
        raise InvalidParameters(f"{len(substitutions)} Substitutionen für {f.num_vars} Variablen")
    field = f.field
    cache = {}

    def power_of(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = substitutions[i] if e == 1 else power_of(i, e - 1) * substitutions[i]
        return cache[key]

    total = UniPoly.of(field, [])
    for exp, c in f.terms.items():
        term = UniPoly.of(field, [c])
        for i, e in enumerate(exp):
            if e:
                term = term * power_of(i, e)
        total = total + term
    return total


def gcd_univariate(a, b):
    """Normierter ggT nach Euklid; BothZero, wenn beide Eingaben null sind."""
    if a.is_zero() and b.is_zero():
        raise BothZero("ggT zweier Nullpolynome ist undefiniert")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()
