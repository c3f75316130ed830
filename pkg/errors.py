# errors.py

"""
Fehlerklassen. Jede Klasse kennt den Exit-Code, mit dem die Kommandozeile
bei diesem Fehler beendet wird.
"""
import config


class EvasiveError(Exception):
    exit_code = config.EXIT_INPUT


class InvalidField(EvasiveError, ValueError):
    pass


class FieldMismatch(EvasiveError, ValueError):
    pass


class ZeroInverse(EvasiveError, ZeroDivisionError):
    pass


class BothZero(EvasiveError, ValueError):
    pass


class DegenerateSubspace(EvasiveError):
    pass


class InvalidParameters(EvasiveError, ValueError):
    pass


class ParseError(EvasiveError, ValueError):
    pass


class InvalidVariety(EvasiveError):
    pass


class OracleMismatch(EvasiveError):
    pass


class ShapeMismatch(EvasiveError):
    pass


class EmptyFamily(EvasiveError):
    pass


class NoWitness(EvasiveError):
    pass


class FieldTooSmall(EvasiveError):
    """Der Grundkörper hat zu wenige Elemente für die angeforderte Konstruktion."""
    exit_code = config.EXIT_FIELD_TOO_SMALL

    def __init__(self, prime, required, what=""):
        self.prime = prime
        self.required = required
        detail = f" für {what}" if what else ""
        super().__init__(
            f"Körper F_{prime} zu klein{detail}: benötigt wird eine Primzahl p > {required}"
        )


class BudgetExceeded(EvasiveError):
    """Buchberger hat das Paar-Budget erreicht; die Instanz ist nicht mehr Desk-Scale."""
    exit_code = config.EXIT_BUDGET

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"Gröbner-Budget von {budget} S-Paaren überschritten")
