# parsers/document_parser.py

"""
Parser-Modul für die JSON-Dokumente (family, report, maps, hitting_set).
"""
import json
import logging
from fractions import Fraction

from constructions import (
    AFFINE,
    FamilyMember,
    FamilyParams,
    HittingSet,
    LinearMapSpec,
    Provenance,
    SubspaceFamily,
)
from errors import EvasiveError, ParseError
from field import FieldConfig
from linalg import AffineSubspace, LinearForm, ProjSubspace
from verify import FailureReport, Verdict

logger = logging.getLogger(__name__)

DOCUMENT_KINDS = ('family', 'report', 'maps', 'hitting_set')


def parse_rational(text):
    """ "a/b" -> Fraction; None bleibt None."""
    if text is None:
        return None
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"'{text}' ist keine rationale Zahl") from exc


def _tuples(rows):
    return tuple(tuple(r) for r in rows)


def _member(data, field, n, kind):
    index = tuple(data['index'])
    if kind == AFFINE:
        directions = _tuples(data['directions'])
        subspace = AffineSubspace(field, n, _tuples(data['affine_forms']),
                                  tuple(data['base_point']), directions, len(directions))
    else:
        basis = _tuples(data['basis'])
        forms = tuple(LinearForm(field, tuple(f)) for f in data['forms'])
        subspace = ProjSubspace(field, n, forms, basis, len(basis) - 1)
    return FamilyMember(index, subspace, bool(data.get('degenerate', False)))


def family_from_document(doc):
    field = FieldConfig(doc['field_prime'], tag='file')
    params = FamilyParams(doc['n'], doc['d'], doc['k'], parse_rational(doc['eps']), doc['kind'])
    notes = {
        key: parse_rational(value) if key.endswith('eps') else value
        for key, value in doc.get('provenance', {}).items()
    }
    members = tuple(_member(m, field, params.n, params.kind) for m in doc['members'])
    provenance = Provenance(doc['construction'], field.prime, doc.get('branch', 'direct'), notes)
    return SubspaceFamily(params, field, members, provenance)


def report_from_document(doc):
    verdicts = tuple(
        Verdict(tuple(v['index']), v['evades'], v['oracle'], v.get('degenerate', False))
        for v in doc['verdicts']
    )
    return FailureReport(doc['family'], doc['variety'], doc['total'], doc['evading'],
                         parse_rational(doc['fraction']), verdicts, parse_rational(doc['eps']))


def maps_from_document(doc):
    field = FieldConfig(doc['field_prime'], tag='file')
    return tuple(
        LinearMapSpec(field, doc['r'], doc['n'], _tuples(m['matrix']), tuple(m['index']))
        for m in doc['maps']
    )


def hitting_set_from_document(doc):
    field = FieldConfig(doc['field_prime'], tag='file')
    return HittingSet(field, doc['m'], doc['ideg'], parse_rational(doc['eps']),
                      _tuples(doc['points']))


READERS = {
    'family': family_from_document,
    'report': report_from_document,
    'maps': maps_from_document,
    'hitting_set': hitting_set_from_document,
}


def parse(lines, field=None, name=None):
    """
    Versucht, die Zeilen (ohne Formatzeile) als JSON-Dokument zu lesen.

    Returns:
        tuple or None: (Dokumentart, Objekt), None wenn der Inhalt kein JSON-Objekt ist.
    """
    text = "\n".join(line for _, line in lines).strip()
    if not text.startswith('{'):
        return None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Ungültiges JSON: {exc}") from exc
    kind = doc.get('document')
    if kind not in DOCUMENT_KINDS:
        raise ParseError(f"Unbekannte Dokumentart '{kind}'")
    try:
        obj = READERS[kind](doc)
    except KeyError as exc:
        raise ParseError(f"Feld {exc} fehlt im Dokument '{kind}'") from exc
    except (TypeError, ValueError, EvasiveError) as exc:
        raise ParseError(f"Dokument '{kind}' ist fehlerhaft: {exc}") from exc
    logger.debug("Dokument '%s' gelesen", kind)
    return kind, obj
