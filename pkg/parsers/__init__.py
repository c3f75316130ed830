# parsers/__init__.py

"""
Dieses Paket sammelt die Parser für die Textformate.
Die PARSER_CHAIN definiert die Reihenfolge, in der sie versucht werden;
jeder Parser liefert None, wenn der Inhalt nicht sein Format ist.
"""
from pathlib import Path

import config
from errors import ParseError
from field import FieldConfig

from . import document_parser
from . import variety_parser

PARSER_CHAIN = [
    variety_parser.parse,
    document_parser.parse,
]


def split_format_line(text):
    """
    Prüft die Formatzeile und liefert die übrigen Zeilen mit Zeilennummern.

    Raises:
        ParseError: Wenn `format=1` fehlt oder eine andere Version angibt.
    """
    numbered = list(enumerate(text.splitlines(), start=1))
    for pos, (no, line) in enumerate(numbered):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if stripped != f"format={config.FORMAT_VERSION}":
            raise ParseError(f"Zeile {no}: erwartet 'format={config.FORMAT_VERSION}', gefunden '{stripped}'")
        return numbered[pos + 1:]
    raise ParseError("Leeres Dokument")


def load_text(text, field=None, name="V"):
    """
    Liest ein Dokument beliebiger Art.

    Returns:
        tuple: (Art, Objekt) mit Art 'variety', 'family', 'report', 'maps' oder 'hitting_set'.
    """
    field = field if field is not None else FieldConfig()
    lines = split_format_line(text)
    for parser in PARSER_CHAIN:
        result = parser(lines, field, name)
        if result is None:
            continue
        if parser is variety_parser.parse:
            return 'variety', result
        return result
    raise ParseError("Unbekanntes Dokumentformat")


def load_document(path, field=None, expected=None):
    """
    Liest eine Datei; mit `expected` wird die Dokumentart geprüft.

    Raises:
        ParseError: Bei fehlender Datei, unbekanntem Format oder falscher Art.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Datei {path} kann nicht gelesen werden: {exc.strerror}") from exc
    kind, obj = load_text(text, field, name=path.stem)
    if expected is not None and kind != expected:
        raise ParseError(f"{path} enthält '{kind}', erwartet '{expected}'")
    return obj
