# text_writer.py

"""
Textformate für Familien, Varietäten, Berichte, Abbildungen und Hitting-Sets.

Jedes Dokument beginnt mit der Zeile `format=1`. Familien, Berichte,
Abbildungen und Hitting-Sets folgen als JSON-Objekt mit festem Schlüssel-
Reihenfolge und Einrückung 2; rationale Zahlen stehen als "a/b". Varietäten
sind zeilenbasiert und verwenden die Polynom-Textsyntax aus poly.format_poly.

Gleiche Eingaben ergeben byte-identische Ausgaben.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path

import config
from constructions import AFFINE
from poly import format_poly

logger = logging.getLogger(__name__)

FORMAT_LINE = f"format={config.FORMAT_VERSION}"


def format_rational(value):
    if value is None:
        return None
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _plain(value):
    """Fraction -> "a/b", Tupel -> Listen; alles andere unverändert."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def render(document):
    """Formatzeile plus JSON mit Einrückung 2 und abschließendem Zeilenumbruch."""
    body = json.dumps(_plain(document), ensure_ascii=False, indent=2)
    return f"{FORMAT_LINE}\n{body}\n"


def save(text, path):
    Path(path).write_text(text, encoding="utf-8", newline="\n")
    logger.debug("%d Bytes nach %s geschrieben", len(text.encode("utf-8")), path)


# ==============================================================================
# 1. FAMILIEN
# ==============================================================================
def _member_dict(member, kind):
    s = member.subspace
    if kind == AFFINE:
        return {
            'index': member.index,
            'affine_forms': s.affine_forms,
            'base_point': s.base_point,
            'directions': s.directions,
            'degenerate': member.degenerate,
        }
    return {
        'index': member.index,
        'forms': [f.coeffs for f in s.forms],
        'basis': s.basis,
        'degenerate': member.degenerate,
    }


def family_document(H):
    p = H.params
    return {
        'document': 'family',
        'field_prime': H.field.prime,
        'construction': H.provenance.construction,
        'kind': p.kind,
        'n': p.n,
        'd': p.d,
        'k': p.k,
        'eps': p.eps,
        'branch': H.provenance.branch,
        'provenance': dict(sorted(H.provenance.notes.items())),
        'size': len(H),
        'members': [_member_dict(m, p.kind) for m in H],
    }


def family_to_text(H):
    return render(family_document(H))


# ==============================================================================
# 2. BERICHTE, ABBILDUNGEN, HITTING-SETS
# ==============================================================================
def report_document(report):
    return {
        'document': 'report',
        'family': report.family_id,
        'variety': report.variety_id,
        'total': report.total,
        'evading': report.evading,
        'failing': report.failing,
        'fraction': report.fraction,
        'eps': report.eps,
        'verdicts': [
            {'index': v.index, 'evades': v.evades, 'oracle': v.oracle, 'degenerate': v.degenerate}
            for v in report.verdicts
        ],
    }


def report_to_text(report):
    return render(report_document(report))


def maps_to_text(maps, n, r, prime, check=None):
    """
    Args:
        check (tuple): Optional (Varietätsname, Urteile, Anteil) aus verify.check_maps.
    """
    document = {
        'document': 'maps',
        'field_prime': prime,
        'n': n,
        'r': r,
        'count': len(maps),
        'maps': [{'index': m.index, 'matrix': m.matrix} for m in maps],
    }
    if check is not None:
        name, verdicts, fraction = check
        document['check'] = {'variety': name, 'finite': verdicts, 'fraction': fraction}
    return render(document)


def hitting_set_to_text(hitting):
    return render({
        'document': 'hitting_set',
        'field_prime': hitting.field.prime,
        'm': hitting.num_vars,
        'ideg': hitting.ideg,
        'eps': hitting.eps,
        'size': len(hitting),
        'points': hitting.points,
    })


# ==============================================================================
# 3. VARIETÄTEN
# ==============================================================================
def variety_to_text(V):
    """Zeilenformat: ambient, degree, dann je Komponente Kopfzeile, Erzeuger, Punkte."""
    offset = 0 if V.ambient.is_projective else 1
    lines = [FORMAT_LINE, f"ambient {V.ambient.kind} {V.ambient.n}", f"degree {V.degree}"]
    for comp in V.components:
        lines.append(f"component dim={comp.dim} deg={comp.degree}")
        if comp.parametrization is not None:
            lines.append("curve rational-normal")
        lines.extend(format_poly(g, offset) for g in comp.generators)
        lines.extend("point " + " ".join(str(int(x)) for x in pt) for pt in comp.points)
    return "\n".join(lines) + "\n"
