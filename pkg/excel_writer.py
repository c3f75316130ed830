# excel_writer.py

"""
Modul zur Erstellung einer strukturierten Excel-Datei aus Familien, Berichten
und Noether-Abbildungen.

Blätter: 'Mitglieder' (Familie bzw. Abbildungen), 'Urteile' (pro Mitglied)
und 'Zusammenfassung' (Kennzahlen, bei Berichten zusätzlich je Orakel).
"""
import logging
from io import BytesIO
from pathlib import Path

import pandas as pd

from constructions import AFFINE
from text_writer import format_rational

logger = logging.getLogger(__name__)


def _vector(v):
    return " ".join(str(x) for x in v)


def members_frame(H):
    """Eine Zeile pro Mitglied: Index, Dimension, Formen, Basis bzw. affine Daten."""
    rows = []
    for m in H:
        s = m.subspace
        row = {'Index': _vector(m.index), 'Dimension': s.dim_k}
        if H.params.kind == AFFINE:
            row['Formen'] = "; ".join(_vector(f) for f in s.affine_forms)
            row['Basispunkt'] = _vector(s.base_point)
            row['Richtungen'] = "; ".join(_vector(d) for d in s.directions)
        else:
            row['Formen'] = "; ".join(_vector(f.coeffs) for f in s.forms)
            row['Basis'] = "; ".join(_vector(b) for b in s.basis)
        row['Degeneriert'] = m.degenerate
        rows.append(row)
    return pd.DataFrame(rows)


def maps_frame(maps, verdicts=None):
    rows = [{'Index': _vector(m.index), 'Matrix': "; ".join(_vector(r) for r in m.matrix)}
            for m in maps]
    df = pd.DataFrame(rows)
    if verdicts is not None:
        df['Endlich'] = verdicts
    return df


def verdicts_frame(report):
    return pd.DataFrame([
        {'Index': _vector(v.index), 'Weicht aus': v.evades, 'Orakel': v.oracle,
         'Degeneriert': v.degenerate}
        for v in report.verdicts
    ])


def summary_frame(H=None, report=None, extra=None):
    """Kennzahl/Wert-Tabelle; rationale Werte als "a/b"."""
    rows = []
    if H is not None:
        p = H.params
        rows += [
            ('Konstruktion', H.provenance.construction),
            ('Zweig', H.provenance.branch),
            ('Primzahl', str(H.field.prime)),
            ('Art', p.kind),
            ('n', p.n), ('d', p.d), ('k', p.k),
            ('eps', format_rational(p.eps) or '-'),
            ('Mitglieder', len(H)),
            ('Degeneriert', H.degenerate_count()),
        ]
    if report is not None:
        rows += [
            ('Varietät', report.variety_id),
            ('Ausweichend', report.evading),
            ('Fehlschläge', report.failing),
            ('Fehleranteil', format_rational(report.fraction)),
            ('Garantie eingehalten', report.within_guarantee()),
        ]
    for key, value in (extra or {}).items():
        rows.append((key, value))
    return pd.DataFrame(rows, columns=['Kennzahl', 'Wert'])


def create_excel_file(sheets):
    """
    Erstellt eine Excel-Datei im Arbeitsspeicher.

    Args:
        sheets (dict): Blattname -> DataFrame; leere DataFrames werden ausgelassen.

    Returns:
        BytesIO or None: Die Excel-Daten oder None bei einem Fehler.
    """
    excel_buffer = BytesIO()
    try:
        with pd.ExcelWriter(excel_buffer, engine='openpyxl') as writer:
            for name, df in sheets.items():
                if df is None or df.empty:
                    continue
                df.to_excel(writer, sheet_name=name, index=False)
            verdicts = sheets.get('Urteile')
            if verdicts is not None and not verdicts.empty:
                per_oracle = (verdicts.groupby('Orakel')['Weicht aus']
                              .agg(['count', 'sum'])
                              .rename(columns={'count': 'Mitglieder', 'sum': 'Ausweichend'})
                              .reset_index())
                start = len(sheets['Zusammenfassung']) + 2 if 'Zusammenfassung' in sheets else 0
                per_oracle.to_excel(writer, sheet_name='Zusammenfassung', index=False, startrow=start)
        excel_buffer.seek(0)
        return excel_buffer
    except Exception:
        logger.exception("❌ Fehler bei der Excel-Erstellung")
        return None


def write_workbook(path, sheets):
    """Schreibt die Arbeitsmappe; False, wenn sie nicht erzeugt werden konnte."""
    buffer = create_excel_file(sheets)
    if buffer is None:
        return False
    Path(path).write_bytes(buffer.getvalue())
    logger.info("Excel-Datei %s geschrieben", path)
    return True
