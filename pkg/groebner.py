# groebner.py

"""
Gröbner-Orakel für Varietäten im Desk-Scale-Bereich.

Buchberger-Algorithmus mit Sugar-Auswahlstrategie und Paar-Budget, Dimension
eines Ideals aus dem Leitterm-Ideal, projektiver Abschluss, die Orakel für
(starke) Evasion und das Endlichkeitskriterium für Noether-Abbildungen.

Evasion ist pro irreduzibler Komponente definiert. Eine allgemeine Zerlegung
ist nicht Teil dieses Moduls; `VarietySpec` bekommt die Komponenten deshalb
explizit mitgeliefert. Die leere Varietät hat Dimension -1, die projektive
Dimension ist die Kegeldimension minus 1.
"""
import heapq
import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Optional

import config
from errors import BudgetExceeded, InvalidParameters, InvalidVariety
from field import FieldConfig
from linalg import rank_rows
from poly import MultiPoly, UniPoly, grevlex_key, homogenize

logger = logging.getLogger(__name__)

__all__ = [
    'MonomialOrder',
    'GREVLEX',
    'LEX',
    'block_order',
    'GroebnerBasis',
    'Ambient',
    'Component',
    'VarietySpec',
    'buchberger',
    'ideal_dimension',
    'projective_closure',
    'evades',
    'strongly_evades',
    'finiteness_check',
    'is_groebner',
]


# ==============================================================================
# 1. MONOMORDNUNGEN
# ==============================================================================
@dataclass(frozen=True)
class MonomialOrder:
    """
    kind: 'grevlex', 'lex' oder 'block'. Bei 'block' werden die ersten
    `split` Variablen eliminiert (grevlex im ersten Block, dann grevlex im
    zweiten).
    """
    kind: str = 'grevlex'
    split: int = 0

    def key(self, exp):
        if self.kind == 'grevlex':
            return grevlex_key(exp)
        if self.kind == 'lex':
            return tuple(exp)
        if self.kind == 'block':
            return (grevlex_key(exp[:self.split]), grevlex_key(exp[self.split:]))
        raise InvalidParameters(f"Unbekannte Monomordnung '{self.kind}'")


GREVLEX = MonomialOrder('grevlex')
LEX = MonomialOrder('lex')


def block_order(split):
    return MonomialOrder('block', split)


# ==============================================================================
# 2. BUCHBERGER
# ==============================================================================
def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Poly:
    """Arbeitsdarstellung: Terme, Leitmonom und Sugar."""
    __slots__ = ('terms', 'lm', 'sugar')

    def __init__(self, terms, lm, sugar):
        self.terms = terms
        self.lm = lm
        self.sugar = sugar


def _leading(terms, key):
    return max(terms, key=key)


def _make_monic(terms, lm, p):
    factor = pow(terms[lm], -1, p)
    return {e: c * factor % p for e, c in terms.items()}


def _reduce(terms, basis, key, p):
    """Vollständige Normalform von `terms` modulo `basis` (Liste von _Poly, monisch)."""
    f = dict(terms)
    remainder = {}
    while f:
        lm = _leading(f, key)
        c = f[lm]
        divisor = next((g for g in basis if _divides(g.lm, lm)), None)
        if divisor is None:
            remainder[lm] = c
            del f[lm]
            continue
        shift = tuple(x - y for x, y in zip(lm, divisor.lm))
        for e, gc in divisor.terms.items():
            target = tuple(a + b for a, b in zip(e, shift))
            value = (f.get(target, 0) - c * gc) % p
            if value:
                f[target] = value
            else:
                f.pop(target, None)
    return remainder


def _spoly(f, g, p):
    lcm = _lcm(f.lm, g.lm)
    out = {}
    for poly, sign in ((f, 1), (g, -1)):
        shift = tuple(x - y for x, y in zip(lcm, poly.lm))
        for e, c in poly.terms.items():
            target = tuple(a + b for a, b in zip(e, shift))
            out[target] = (out.get(target, 0) + sign * c) % p
    out = {e: c for e, c in out.items() if c}
    sugar = max(f.sugar + sum(lcm) - sum(f.lm), g.sugar + sum(lcm) - sum(g.lm))
    return out, sugar


class _PairQueue:
    """Offene S-Paare, sortiert nach (Sugar, lcm in der Ordnung)."""

    def __init__(self, key):
        self.key = key
        self.heap = []
        self.pending = set()

    def push(self, i, j, basis):
        lcm = _lcm(basis[i].lm, basis[j].lm)
        sugar = max(basis[i].sugar + sum(lcm) - sum(basis[i].lm),
                    basis[j].sugar + sum(lcm) - sum(basis[j].lm))
        heapq.heappush(self.heap, (sugar, self.key(lcm), i, j))
        self.pending.add((i, j))

    def pop(self):
        _, _, i, j = heapq.heappop(self.heap)
        self.pending.discard((i, j))
        return i, j

    def is_pending(self, i, j):
        return (min(i, j), max(i, j)) in self.pending

    def __bool__(self):
        return bool(self.heap)


def _skip_pair(i, j, basis, queue):
    """Buchbergers Kriterien: teilerfremde Leitmonome bzw. Kettenkriterium."""
    a, b = basis[i].lm, basis[j].lm
    if all(x == 0 or y == 0 for x, y in zip(a, b)):
        return True
    lcm = _lcm(a, b)
    for k, g in enumerate(basis):
        if k in (i, j) or g is None:
            continue
        if _divides(g.lm, lcm) and not queue.is_pending(i, k) and not queue.is_pending(j, k):
            return True
    return False


def _minimalize(basis):
    kept = []
    for idx, g in enumerate(basis):
        dominated = any(
            _divides(h.lm, g.lm) and (h.lm != g.lm or jdx < idx)
            for jdx, h in enumerate(basis) if jdx != idx
        )
        if not dominated:
            kept.append(g)
    return kept


def _interreduce(basis, key, p):
    reduced = []
    for idx, g in enumerate(basis):
        others = [h for jdx, h in enumerate(basis) if jdx != idx]
        tail = {e: c for e, c in g.terms.items() if e != g.lm}
        rest = _reduce(tail, others, key, p)
        rest[g.lm] = 1
        reduced.append(_Poly(rest, g.lm, g.sugar))
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduzierte Gröbner-Basis, monisch, aufsteigend nach Leitmonom sortiert."""
    field: FieldConfig
    num_vars: int
    order: MonomialOrder
    polys: tuple

    def leading_monomials(self):
        return [_leading(g.terms, self.order.key) for g in self.polys]

    def is_unit(self):
        return any(sum(m) == 0 for m in self.leading_monomials())

    def reduce(self, f):
        """Normalform von f modulo dieser Basis."""
        key = self.order.key
        basis = [_Poly(g.terms, _leading(g.terms, key), 0) for g in self.polys]
        return MultiPoly(self.field, self.num_vars, _reduce(f.terms, basis, key, self.field.prime))

    def contains(self, f):
        return self.reduce(f).is_zero()


def buchberger(generators, order=GREVLEX, budget=None, num_vars=None, field=None):
    """
    Reduzierte Gröbner-Basis des erzeugten Ideals.

    Args:
        generators (sequence of MultiPoly): Erzeuger mit gleicher Variablenzahl.
        order (MonomialOrder): Die Monomordnung.
        budget (int): Maximale Anzahl reduzierter S-Paare; Default aus config.
        num_vars, field: Nur nötig, wenn `generators` leer ist.

    Raises:
        BudgetExceeded: Wenn das Paar-Budget erreicht ist.
    """
    generators = list(generators)
    if generators:
        field = generators[0].field
        num_vars = generators[0].num_vars
        if any(g.num_vars != num_vars for g in generators):
            raise InvalidParameters("Erzeuger mit verschiedener Variablenzahl")
    elif field is None or num_vars is None:
        raise InvalidParameters("Für das Nullideal müssen Körper und Variablenzahl angegeben sein")
    budget = config.GROEBNER_PAIR_BUDGET if budget is None else budget
    p = field.prime
    key = order.key

    basis = []
    queue = _PairQueue(key)

    def update(terms, sugar):
        lm = _leading(terms, key)
        basis.append(_Poly(_make_monic(terms, lm, p), lm, sugar))
        new = len(basis) - 1
        for i in range(new):
            if basis[i] is not None:
                queue.push(i, new, basis)

    for g in generators:
        if g.is_zero():
            continue
        active = [h for h in basis if h is not None]
        terms = _reduce(g.terms, active, key, p)
        if terms:
            update(terms, g.degree())

    processed = 0
    while queue:
        i, j = queue.pop()
        if _skip_pair(i, j, basis, queue):
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceeded(budget)
        s, sugar = _spoly(basis[i], basis[j], p)
        r = _reduce(s, basis, key, p)
        if r:
            update(r, sugar)
            if all(sum(e) == 0 for e in r):
                break

    logger.debug("Buchberger: %d S-Paare reduziert, %d Basiselemente", processed, len(basis))
    active = basis
    if any(sum(g.lm) == 0 for g in active):
        one = (0,) * num_vars
        polys = (MultiPoly(field, num_vars, {one: 1}),)
        return GroebnerBasis(field, num_vars, order, polys)
    reduced = _interreduce(_minimalize(active), key, p)
    reduced.sort(key=lambda g: key(g.lm))
    polys = tuple(MultiPoly(field, num_vars, g.terms) for g in reduced)
    return GroebnerBasis(field, num_vars, order, polys)


def is_groebner(G):
    """Prüft nachträglich, dass jedes S-Polynom der Basis zu null reduziert."""
    key = G.order.key
    p = G.field.prime
    basis = [_Poly(g.terms, _leading(g.terms, key), 0) for g in G.polys]
    for f, g in combinations(basis, 2):
        s, _ = _spoly(f, g, p)
        if _reduce(s, basis, key, p):
            return False
    return True


def ideal_dimension(G):
    """
    Krull-Dimension des Quotientenrings: größte Variablenmenge, die den Träger
    keines Leitmonoms enthält. -1 für das Einheitsideal.
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in G.leading_monomials()]
    if any(not s for s in supports):
        return -1
    variables = range(G.num_vars)
    for size in range(G.num_vars, -1, -1):
        for subset in combinations(variables, size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def _projective_dim(cone_dim):
    return max(cone_dim - 1, -1)


# ==============================================================================
# 3. VARIETÄTEN
# ==============================================================================
@dataclass(frozen=True)
class Ambient:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ('projective', 'affine'):
            raise InvalidVariety(f"Unbekannter umgebender Raum '{self.kind}'")
        if self.n < 1:
            raise InvalidVariety(f"Dimension des umgebenden Raums muss positiv sein: {self.n}")

    @property
    def num_vars(self):
        return self.n + 1 if self.kind == 'projective' else self.n

    @property
    def is_projective(self):
        return self.kind == 'projective'


@dataclass
class Component:
    """
    Irreduzible Komponente mit behaupteter Dimension und Grad; optional
    Stichprobenpunkte und eine Parametrisierung (für rationale Normkurven).
    """
    generators: tuple
    dim: int
    degree: int
    points: tuple = ()
    parametrization: Optional[tuple] = None

    def is_linear(self):
        return all(g.degree() <= 1 for g in self.generators)


@dataclass
class VarietySpec:
    """Varietät aus Erzeugern plus expliziter Komponentenliste."""
    field: FieldConfig
    ambient: Ambient
    components: tuple
    degree: Optional[int] = None
    generators: Optional[tuple] = None
    name: str = "V"
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.components = tuple(self.components)
        for comp in self.components:
            comp.generators = tuple(comp.generators)
            for g in comp.generators:
                if g.num_vars != self.ambient.num_vars:
                    raise InvalidVariety(
                        f"Erzeuger mit {g.num_vars} Variablen in {self.ambient.kind}({self.ambient.n})"
                    )
                if self.ambient.is_projective and not g.is_homogeneous():
                    raise InvalidVariety("Projektive Erzeuger müssen homogen sein")
            if comp.degree < 1:
                raise InvalidVariety(f"Grad einer Komponente muss positiv sein: {comp.degree}")
        component_degree = sum(c.degree for c in self.components)
        if self.degree is None:
            self.degree = component_degree
        elif component_degree > self.degree:
            raise InvalidVariety(
                f"Summe der Komponentengrade {component_degree} übersteigt den Gesamtgrad {self.degree}"
            )
        if self.generators is None:
            self.generators = _product_ideal(self.components)
        self.generators = tuple(self.generators)

    @property
    def dim(self):
        return max((c.dim for c in self.components), default=-1)

    def validate_dimensions(self, budget=None):
        """
        Vergleicht jede behauptete Komponentendimension mit ideal_dimension.

        Returns:
            list: Tupel (Komponentenindex, behauptet, berechnet) aller Abweichungen.
        """
        mismatches = []
        for idx, comp in enumerate(self.components):
            G = buchberger(comp.generators, GREVLEX, budget,
                           num_vars=self.ambient.num_vars, field=self.field)
            actual = ideal_dimension(G)
            if self.ambient.is_projective:
                actual = _projective_dim(actual)
            if actual != comp.dim:
                mismatches.append((idx, comp.dim, actual))
        return mismatches


def _product_ideal(components):
    """Erzeuger der Vereinigung: Produkte je eines Erzeugers pro Komponente."""
    if not components:
        return ()
    if len(components) == 1:
        return tuple(components[0].generators)
    gens = []
    for choice in product(*(c.generators for c in components)):
        acc = choice[0]
        for g in choice[1:]:
            acc = acc * g
        gens.append(acc)
    return tuple(gens)


def projective_closure(V, budget=None):
    """
    Projektiver Abschluss einer affinen Varietät.

    Homogenisiert wird eine grevlex-Gröbner-Basis, nicht die rohen Erzeuger;
    nur so entsteht das Ideal des Abschlusses.
    """
    if V.ambient.is_projective:
        raise InvalidVariety("projective_closure erwartet eine affine Varietät")

    def closure_gens(gens):
        G = buchberger(gens, GREVLEX, budget, num_vars=V.ambient.n, field=V.field)
        return tuple(homogenize(g) for g in G.polys)

    components = []
    for comp in V.components:
        components.append(Component(
            generators=closure_gens(comp.generators),
            dim=comp.dim,
            degree=comp.degree,
            points=tuple((1,) + tuple(pt) for pt in comp.points),
        ))
    return VarietySpec(
        field=V.field,
        ambient=Ambient('projective', V.ambient.n),
        components=tuple(components),
        degree=V.degree,
        generators=closure_gens(V.generators),
        name=f"{V.name}_closure",
    )


# ==============================================================================
# 4. ORAKEL
# ==============================================================================
def _require_components(V):
    if not V.components:
        raise InvalidVariety(f"Varietät '{V.name}' hat keine Komponenten")


def evades(V, W, budget=None):
    """
    W weicht V aus: für jede Komponente V_i gilt
    dim(V_i ∩ W) <= dim(V_i) + dim(W) - n.
    """
    _require_components(V)
    if not V.ambient.is_projective:
        raise InvalidVariety("evades erwartet eine projektive Varietät")
    n = V.ambient.n
    if W.ambient_n != n:
        raise InvalidParameters(f"Unterraum in P^{W.ambient_n}, Varietät in P^{n}")
    forms = [MultiPoly.from_linear(V.field, f.coeffs) for f in W.forms]
    for comp in V.components:
        G = buchberger(list(comp.generators) + forms, GREVLEX, budget,
                       num_vars=n + 1, field=V.field)
        meet = _projective_dim(ideal_dimension(G))
        bound = comp.dim + W.dim_k - n
        if meet > max(bound, -1):
            return False
    return True


def strongly_evades(V, W, budget=None):
    """
    Starke Evasion (affin): ist dim(V_i) + k - n < 0, muss der Schnitt leer
    sein, sonst nichtleer von genau dieser Dimension.
    """
    _require_components(V)
    if V.ambient.is_projective:
        raise InvalidVariety("strongly_evades erwartet eine affine Varietät")
    n = V.ambient.n
    if W.ambient_n != n:
        raise InvalidParameters(f"Unterraum in A^{W.ambient_n}, Varietät in A^{n}")
    forms = [MultiPoly.from_linear(V.field, f, constant_first=True) for f in W.affine_forms]
    for comp in V.components:
        G = buchberger(list(comp.generators) + forms, GREVLEX, budget, num_vars=n, field=V.field)
        meet = ideal_dimension(G)
        expected = comp.dim + W.dim_k - n
        if meet != max(expected, -1):
            return False
    return True


def finiteness_check(V, pi, budget=None):
    """
    Ist die Einschränkung von π auf die affine Varietät V endlich?

    Bildet I(V) + (y_i - ℓ_i(x)) in (x1..xn, y1..yr) mit einer Blockordnung,
    die x eliminiert. π|V ist endlich genau dann, wenn für jedes j ein
    Basiselement mit Leitmonom x_j^m existiert (x_j ganz über F[y]).

    Args:
        V (VarietySpec): Affine Varietät in A^n.
        pi: Lineare Abbildung mit `matrix` (r Zeilen der Länge n), z.B. LinearMapSpec.
    """
    if V.ambient.is_projective:
        raise InvalidVariety("finiteness_check erwartet eine affine Varietät")
    n = V.ambient.n
    rows = [tuple(V.field.canonical(a) for a in row) for row in pi.matrix]
    if any(len(row) != n for row in rows):
        raise InvalidParameters(f"Abbildungsmatrix passt nicht zu A^{n}")
    r = len(rows)
    if rank_rows(rows, V.field.prime) != r:
        raise InvalidParameters("Abbildungsmatrix hat nicht vollen Rang")
    total = n + r
    gens = [g.embed(total) for g in V.generators]
    for i, row in enumerate(rows):
        coeffs = [(-a) % V.field.prime for a in row] + [0] * r
        coeffs[n + i] = 1
        gens.append(MultiPoly.from_linear(V.field, coeffs))
    G = buchberger(gens, block_order(n), budget, num_vars=total, field=V.field)
    if G.is_unit():
        return True
    leads = G.leading_monomials()
    for j in range(n):
        if not any(m[j] > 0 and sum(m) == m[j] for m in leads):
            logger.debug("x%d ist nicht ganz über F[y]", j + 1)
            return False
    return True


def parametrization_of_rnc(field, n):
    """Die Parametrisierung (1, t, …, t^n) der rationalen Normkurve."""
    return tuple(UniPoly.monomial(field, i) for i in range(n + 1))
