# main.py

# -*- coding: utf-8 -*-
"""
EVASIVE UNTERRAUMFAMILIEN ÜBER F_p - KOMMANDOZEILE

Konstruiert evasive Unterraumfamilien, Hitting-Sets, Rank-Extractor-Familien
und Noether-Abbildungen, prüft Familien gegen Testvarietäten und erzeugt
Testvarietäten.

Unterbefehle:
- **construct:** Basis-, Chow- oder Hauptfamilie (projektiv oder affin).
- **hitting-set:** ε-Hitting-Set für Polynome mit beschränktem Einzelgrad.
- **rank-extractor:** Kerne der Vandermonde-Potenzmatrizen.
- **noether:** Lineare Abbildungen A^n -> A^r, optional mit Endlichkeitsprüfung.
- **verify:** Exakter Fehleranteil einer Familie gegen eine Varietät.
- **gen-variety:** Schreibt eine Testvarietät (Anordnung, Normkurve, Hyperbel).

Exit-Codes: 0 Erfolg, 1 Eingabefehler, 2 Körper zu klein, 3 Garantie
verletzt, 4 Gröbner-Budget überschritten.

Einstellungen: Flag > `settings.txt` > `config.py`.
"""

# ==============================================================================
# 1. IMPORTS
# ==============================================================================
import argparse
import logging
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import config
import excel_writer
import settings_loader
import text_writer
from constructions import (
    FamilyParams,
    basic_family,
    chow_family,
    epsilon_hitting_set,
    main_family,
    noether_maps,
    rank_extractor_family,
)
from errors import EvasiveError, InvalidParameters
from field import FieldConfig
from parsers import load_document
from verify import (
    check_maps,
    family_failure_fraction,
    gen_affine_arrangement,
    gen_hyperbola,
    gen_linear_arrangement,
    gen_rational_normal_curve,
)

logger = logging.getLogger(__name__)

EPS_PATTERN = re.compile(r'^\s*(\d+)\s*/\s*(\d+)\s*$')


# ==============================================================================
# 2. KONFIGURATION
# ==============================================================================
class CliParser(argparse.ArgumentParser):
    """Argumentfehler werden zu InvalidParameters (Exit-Code 1)."""

    def error(self, message):
        raise InvalidParameters(message)


def parse_eps(text):
    """Liest eps exakt als "a/b"."""
    if text is None:
        return None
    match = EPS_PATTERN.match(text)
    if not match:
        raise InvalidParameters(f"eps muss als Bruch a/b angegeben werden, erhalten: '{text}'")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise InvalidParameters("eps hat den Nenner 0")
    return Fraction(num, den)


@dataclass
class CliConfig:
    command: str
    prime: int
    budget: int
    prime_from_flag: bool
    eps: Optional[Fraction]
    args: argparse.Namespace

    @property
    def field(self):
        return FieldConfig(self.prime)

    def __getattr__(self, name):
        return getattr(self.args, name)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--prime', type=int, help="Primzahl p des Grundkörpers")
    common.add_argument('--budget', type=int, help="Maximale Anzahl S-Paare pro Gröbner-Basis")
    common.add_argument('--settings', default=config.SETTINGS_FILE, help="Einstellungsdatei")
    common.add_argument('--verbose', action='store_true', help="Debug-Ausgaben")

    parser = CliParser(prog='main.py', description="Evasive Unterraumfamilien über F_p")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('construct', parents=[common], help="Familie konstruieren")
    p.add_argument('--mode', choices=['basic', 'chow', 'main'], required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--eps')
    p.add_argument('--kind', choices=['projective', 'affine'], default='projective')
    p.add_argument('--out', required=True)
    p.add_argument('--xlsx')

    p = sub.add_parser('hitting-set', parents=[common], help="ε-Hitting-Set erzeugen")
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--ideg', type=int, required=True)
    p.add_argument('--eps', required=True)
    p.add_argument('--out', required=True)

    p = sub.add_parser('rank-extractor', parents=[common], help="Rank-Extractor-Familie")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--eps')
    p.add_argument('--out', required=True)

    p = sub.add_parser('noether', parents=[common], help="Noether-Abbildungen")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--eps')
    p.add_argument('--out', required=True)
    p.add_argument('--check', help="Affine Varietät für die Endlichkeitsprüfung")
    p.add_argument('--xlsx')

    p = sub.add_parser('verify', parents=[common], help="Familie gegen Varietät prüfen")
    p.add_argument('--family', required=True)
    p.add_argument('--variety', required=True)
    p.add_argument('--oracle', choices=['auto', 'linalg', 'curve', 'groebner'], default='auto')
    p.add_argument('--out', required=True)
    p.add_argument('--xlsx')

    p = sub.add_parser('gen-variety', parents=[common], help="Testvarietät schreiben")
    p.add_argument('--type', choices=['arrangement', 'affine-arrangement', 'rnc', 'hyperbola'],
                   required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--dim', type=int, default=1)
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--out', required=True)
    return parser


def resolve_config(args):
    """Flag > Einstellungsdatei > config.py."""
    settings = settings_loader.load_settings(args.settings)
    prime = args.prime if args.prime is not None else settings.get('prime', config.DEFAULT_PRIME)
    budget = args.budget if args.budget is not None else settings.get('pair_budget',
                                                                       config.GROEBNER_PAIR_BUDGET)
    if budget < 1:
        raise InvalidParameters(f"Das Budget muss positiv sein, erhalten: {budget}")
    return CliConfig(
        command=args.command,
        prime=prime,
        budget=budget,
        prime_from_flag=args.prime is not None,
        eps=parse_eps(getattr(args, 'eps', None)),
        args=args,
    ), settings


def configure_logging(verbose, level=config.LOG_LEVEL):
    logging.basicConfig(level=logging.DEBUG if verbose else getattr(logging, level.upper(), logging.INFO),
                        format=config.LOG_FORMAT)


# ==============================================================================
# 3. UNTERBEFEHLE
# ==============================================================================
def run_construct(cfg):
    params = FamilyParams(cfg.n, cfg.d, cfg.k, cfg.eps, cfg.kind)
    build = {'basic': basic_family, 'chow': chow_family, 'main': main_family}[cfg.mode]
    family = build(params, cfg.field)
    text_writer.save(text_writer.family_to_text(family), cfg.out)
    if cfg.xlsx:
        _write_family_workbook(cfg.xlsx, family)
    print(f"✅ {family.provenance.construction} (Zweig {family.provenance.branch}): "
          f"{len(family)} Mitglieder -> {cfg.out}")
    return config.EXIT_OK


def run_hitting_set(cfg):
    if cfg.eps is None:
        raise InvalidParameters("hitting-set benötigt --eps")
    hitting = epsilon_hitting_set(cfg.m, cfg.ideg, cfg.eps, cfg.field)
    text_writer.save(text_writer.hitting_set_to_text(hitting), cfg.out)
    print(f"✅ Hitting-Set: {len(hitting)} Punkte -> {cfg.out}")
    return config.EXIT_OK


def run_rank_extractor(cfg):
    family = rank_extractor_family(cfg.n, cfg.m, cfg.eps, cfg.field)
    text_writer.save(text_writer.family_to_text(family), cfg.out)
    print(f"✅ rank_extractor: {len(family)} Mitglieder -> {cfg.out}")
    return config.EXIT_OK


def run_noether(cfg):
    field = cfg.field
    variety = load_document(cfg.check, field, expected='variety') if cfg.check else None
    maps = noether_maps(cfg.n, cfg.d, cfg.r, cfg.eps, field)
    check = None
    exit_code = config.EXIT_OK
    if variety is not None:
        verdicts, fraction = check_maps(maps, variety, cfg.budget)
        check = (variety.name, verdicts, fraction)
        required = 1 - cfg.eps if cfg.eps is not None else None
        passed = fraction >= required if required is not None else any(verdicts)
        tag = "✅" if passed else "⚠️"
        print(f"{tag} Endlich auf '{variety.name}': {sum(verdicts)}/{len(verdicts)} "
              f"(Anteil {text_writer.format_rational(fraction)})")
        if not passed:
            exit_code = config.EXIT_GUARANTEE
    text_writer.save(text_writer.maps_to_text(maps, cfg.n, cfg.r, field.prime, check), cfg.out)
    if cfg.xlsx:
        summary = excel_writer.summary_frame(extra={'n': cfg.n, 'r': cfg.r, 'Abbildungen': len(maps)})
        _write_workbook(cfg.xlsx, {
            'Mitglieder': excel_writer.maps_frame(maps, check[1] if check else None),
            'Zusammenfassung': summary,
        })
    print(f"✅ {len(maps)} Abbildungen A^{cfg.n} -> A^{cfg.r} -> {cfg.out}")
    return exit_code


def run_verify(cfg):
    family = load_document(cfg.family, expected='family')
    if cfg.prime_from_flag and cfg.prime != family.field.prime:
        raise InvalidParameters(
            f"Familie ist über F_{family.field.prime}, --prime gibt {cfg.prime} an"
        )
    variety = load_document(cfg.variety, family.field, expected='variety')
    for idx, claimed, actual in variety.validate_dimensions(cfg.budget):
        logger.warning("⚠️ Komponente %d von '%s': behauptete Dimension %d, berechnet %d",
                       idx, variety.name, claimed, actual)
    report = family_failure_fraction(family, variety, cfg.oracle, cfg.budget)
    text_writer.save(text_writer.report_to_text(report), cfg.out)
    if cfg.xlsx:
        _write_family_workbook(cfg.xlsx, family, report)
    ok = report.within_guarantee()
    tag = "✅" if ok else "❌"
    print(f"{tag} {report.failing}/{report.total} Fehlschläge "
          f"(Anteil {text_writer.format_rational(report.fraction)}) gegen '{variety.name}'")
    return config.EXIT_OK if ok else config.EXIT_GUARANTEE


def run_gen_variety(cfg):
    field = cfg.field
    if cfg.type == 'arrangement':
        variety = gen_linear_arrangement(cfg.n, cfg.dim, cfg.count, cfg.seed, field)
    elif cfg.type == 'affine-arrangement':
        variety = gen_affine_arrangement(cfg.n, cfg.dim, cfg.count, cfg.seed, field)
    elif cfg.type == 'rnc':
        variety = gen_rational_normal_curve(cfg.n, field)
    else:
        variety = gen_hyperbola(cfg.n, field)
    text_writer.save(text_writer.variety_to_text(variety), cfg.out)
    print(f"✅ {variety.name}: {len(variety.components)} Komponenten -> {cfg.out}")
    return config.EXIT_OK


def _write_family_workbook(path, family, report=None):
    sheets = {
        'Mitglieder': excel_writer.members_frame(family),
        'Urteile': excel_writer.verdicts_frame(report) if report is not None else None,
        'Zusammenfassung': excel_writer.summary_frame(family, report),
    }
    _write_workbook(path, sheets)


def _write_workbook(path, sheets):
    if not excel_writer.write_workbook(path, sheets):
        print(f"⚠️ Excel-Datei {path} konnte nicht erstellt werden")


COMMANDS = {
    'construct': run_construct,
    'hitting-set': run_hitting_set,
    'rank-extractor': run_rank_extractor,
    'noether': run_noether,
    'verify': run_verify,
    'gen-variety': run_gen_variety,
}


# ==============================================================================
# 4. HAUPTAUSFÜHRUNGSBLOCK
# ==============================================================================
def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        cfg, settings = resolve_config(args)
        configure_logging(args.verbose, settings.get('log_level', config.LOG_LEVEL))
        logger.debug("Befehl %s, p=%d, Budget=%d", cfg.command, cfg.prime, cfg.budget)
        return COMMANDS[cfg.command](cfg)
    except EvasiveError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == '__main__':
    sys.exit(main())
