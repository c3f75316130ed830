# test_excel_writer.py

"""
Tests für die Excel-Ausgabe.
"""
from fractions import Fraction

import pandas as pd

import excel_writer
from constructions import FamilyParams, chow_family, noether_maps
from verify import family_failure_fraction, gen_linear_arrangement


def _family(field):
    return chow_family(FamilyParams(2, 1, 0, Fraction(1, 2)), field)


def test_members_frame(small_field):
    df = excel_writer.members_frame(_family(small_field))
    assert list(df.columns) == ['Index', 'Dimension', 'Formen', 'Basis', 'Degeneriert']
    assert len(df) == 17
    assert df.loc[0, 'Index'] == "2 8"
    assert df.loc[0, 'Basis'] == "16 91 1"
    assert df.loc[0, 'Formen'] == "1 2 4; 1 8 64"


def test_summary_frame(small_field):
    H = _family(small_field)
    report = family_failure_fraction(H, gen_linear_arrangement(2, 1, 1, seed=0, field=small_field))
    df = excel_writer.summary_frame(H, report, extra={'Notiz': 'test'})
    values = dict(zip(df['Kennzahl'], df['Wert']))
    assert values['Konstruktion'] == 'chow'
    assert values['eps'] == "1/2"
    assert values['Mitglieder'] == 17
    assert values['Fehleranteil'] == f"{report.fraction.numerator}/{report.fraction.denominator}"
    assert values['Notiz'] == 'test'


def test_create_excel_file(small_field):
    H = _family(small_field)
    report = family_failure_fraction(H, gen_linear_arrangement(2, 1, 1, seed=0, field=small_field))
    buffer = excel_writer.create_excel_file({
        'Mitglieder': excel_writer.members_frame(H),
        'Urteile': excel_writer.verdicts_frame(report),
        'Zusammenfassung': excel_writer.summary_frame(H, report),
        'Leer': pd.DataFrame(),
    })
    sheets = pd.read_excel(buffer, sheet_name=None)
    assert list(sheets) == ['Mitglieder', 'Urteile', 'Zusammenfassung']
    assert len(sheets['Urteile']) == 17
    assert 'Orakel' in set(sheets['Zusammenfassung']['Kennzahl'].astype(str))


def test_maps_frame(small_field):
    maps = noether_maps(2, 2, 1, Fraction(1, 2), small_field)
    df = excel_writer.maps_frame(maps, [True] * len(maps))
    assert list(df['Matrix'])[:2] == ["1 1", "1 2"]
    assert df['Endlich'].all()


def test_invalid_sheet_name(tmp_path, small_field):
    sheets = {'Mitglieder/alt': excel_writer.members_frame(_family(small_field))}
    assert excel_writer.create_excel_file(sheets) is None
    assert not excel_writer.write_workbook(tmp_path / "x.xlsx", sheets)
    assert not (tmp_path / "x.xlsx").exists()
