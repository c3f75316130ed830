# parsers/variety_parser.py

"""
Parser-Modul, das AUSSCHLIESSLICH für das zeilenbasierte Varietätsformat
zuständig ist:

    format=1
    ambient projective 3
    degree 3
    component dim=1 deg=3
    curve rational-normal
    x0*x2 - x1^2
    point 1 1 1 1
"""
import logging
import re

from errors import InvalidVariety, ParseError
from groebner import Ambient, Component, VarietySpec, parametrization_of_rnc

from . import poly_parser

logger = logging.getLogger(__name__)

AMBIENT_PATTERN = re.compile(r'^ambient\s+(projective|affine)\s+(\d+)$')
DEGREE_PATTERN = re.compile(r'^degree\s+(\d+)$')
COMPONENT_PATTERN = re.compile(r'^component\s+dim=(-?\d+)\s+deg=(\d+)$')
POINT_PATTERN = re.compile(r'^point((?:\s+-?\d+)+)$')


def parse(lines, field, name="V"):
    """
    Versucht, die Zeilen (ohne Formatzeile) als Varietät zu lesen.

    Returns:
        VarietySpec or None: None, wenn die erste Inhaltszeile keine ambient-Zeile ist.
    """
    content = [(no, line.split('#', 1)[0].strip()) for no, line in lines]
    content = [(no, line) for no, line in content if line]
    if not content or not content[0][1].startswith('ambient'):
        return None
    match = AMBIENT_PATTERN.match(content[0][1])
    if not match:
        raise ParseError(f"Zeile {content[0][0]}: ungültige ambient-Zeile '{content[0][1]}'")
    try:
        ambient = Ambient(match.group(1), int(match.group(2)))
    except InvalidVariety as exc:
        raise ParseError(f"Zeile {content[0][0]}: {exc}") from exc
    offset = 0 if ambient.is_projective else 1
    width = ambient.num_vars

    degree = None
    blocks = []
    for no, line in content[1:]:
        if (m := DEGREE_PATTERN.match(line)):
            if blocks:
                raise ParseError(f"Zeile {no}: degree muss vor der ersten Komponente stehen")
            degree = int(m.group(1))
        elif (m := COMPONENT_PATTERN.match(line)):
            blocks.append({'dim': int(m.group(1)), 'deg': int(m.group(2)),
                           'gens': [], 'points': [], 'curve': False})
        elif not blocks:
            raise ParseError(f"Zeile {no}: '{line}' steht vor der ersten Komponente")
        elif line == 'curve rational-normal':
            blocks[-1]['curve'] = True
        elif line.startswith('point'):
            m = POINT_PATTERN.match(line)
            coords = tuple(int(x) for x in m.group(1).split()) if m else ()
            if len(coords) != width:
                raise ParseError(f"Zeile {no}: Punkt braucht {width} Koordinaten")
            blocks[-1]['points'].append(tuple(x % field.prime for x in coords))
        else:
            try:
                blocks[-1]['gens'].append(poly_parser.parse_poly(line, field, width, offset))
            except ParseError as exc:
                raise ParseError(f"Zeile {no}: {exc}") from exc

    components = []
    for b in blocks:
        parametrization = None
        if b['curve']:
            if not ambient.is_projective:
                raise ParseError("curve rational-normal ist nur projektiv zulässig")
            parametrization = parametrization_of_rnc(field, ambient.n)
        components.append(Component(tuple(b['gens']), b['dim'], b['deg'],
                                    tuple(b['points']), parametrization))
    try:
        V = VarietySpec(field, ambient, tuple(components), degree=degree, name=name)
    except InvalidVariety as exc:
        raise ParseError(str(exc)) from exc
    logger.debug("Varietät '%s': %d Komponenten", name, len(components))
    return V
