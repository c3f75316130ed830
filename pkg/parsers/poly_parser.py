# parsers/poly_parser.py

"""
Parser für die Polynom-Textsyntax, z.B. "x0*x2 - x1^2" oder "x1*x2 - 1".

Gelesen wird mit sympy (`parse_expr` mit `convert_xor`, damit `^` als Potenz
gilt); rationale Koeffizienten werden nach F_p abgebildet.
"""
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from errors import ParseError
from poly import MultiPoly

TRANSFORMATIONS = standard_transformations + (convert_xor,)


def variable_names(num_vars, offset=0):
    return [f"x{i + offset}" for i in range(num_vars)]


def parse_poly(text, field, num_vars, offset=0):
    """
    Liest ein Polynom in den Variablen x(offset) … x(offset + num_vars - 1).

    Args:
        text (str): Der Ausdruck.
        field (FieldConfig): Zielkörper.
        num_vars (int): Anzahl der Variablen.
        offset (int): 0 für projektive (x0..xn), 1 für affine Koordinaten (x1..xn).

    Raises:
        ParseError: Bei Syntaxfehlern, unbekannten Variablen, nicht-polynomialen
            Ausdrücken oder irrationalen Koeffizienten.
    """
    names = variable_names(num_vars, offset)
    if num_vars < 1:
        raise ParseError("Mindestens eine Variable erforderlich")
    symbols = [sympy.Symbol(name) for name in names]
    local = dict(zip(names, symbols))
    try:
        expr = parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError, TokenError) as exc:
        raise ParseError(f"Polynom '{text}' ist nicht lesbar: {exc}") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(names)
    if unknown:
        raise ParseError(f"Unbekannte Variablen in '{text}': {', '.join(sorted(unknown))}")
    try:
        poly = sympy.Poly(expr, *symbols)
    except (sympy.PolynomialError, sympy.SympifyError, TypeError, ValueError) as exc:
        raise ParseError(f"'{text}' ist kein Polynom: {exc}") from exc
    p = field.prime
    terms = {}
    for monom, coeff in poly.terms():
        if not coeff.is_Rational:
            raise ParseError(f"Koeffizient {coeff} in '{text}' ist nicht rational")
        num, den = int(coeff.p), int(coeff.q)
        if den % p == 0:
            raise ParseError(f"Nenner {den} ist in F_{p} nicht invertierbar")
        terms[tuple(int(e) for e in monom)] = num * pow(den, -1, p) % p
    return MultiPoly(field, num_vars, terms)


def parse(line, field, num_vars, offset=0):
    """Wie parse_poly, aber None für Leerzeilen und Kommentare."""
    stripped = line.split('#', 1)[0].strip()
    if not stripped:
        return None
    return parse_poly(stripped, field, num_vars, offset)
