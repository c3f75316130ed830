# verify.py

"""
Testvarietäten und Verifikation von Familien.

Die Generatoren liefern Varietäten mit bekannter Komponentenstruktur
(lineare Anordnungen, rationale Normkurven, Hyperbel). Zufall kommt
ausschließlich aus numpy: `SeedSequence(seed)` wird pro Komponente
aufgespalten, gezogen wird mit `default_rng` (PCG64), damit Läufe auf allen
Plattformen reproduzierbar sind.

`family_failure_fraction` zählt exakt (Fraction), wie viele Mitglieder einer
Familie einer Varietät nicht ausweichen.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from constructions import AFFINE, PROJECTIVE
from errors import InvalidParameters, InvalidVariety, OracleMismatch
from field import FieldConfig
from groebner import (
    Ambient,
    Component,
    VarietySpec,
    evades,
    finiteness_check,
    parametrization_of_rnc,
    strongly_evades,
)
from linalg import (
    LinearForm,
    affine_from_forms,
    affine_intersection_dim,
    forms_to_basis,
    rank_rows,
    subspace_intersection_dim,
)
from poly import MultiPoly, evaluate, gcd_univariate, substitute_linear_forms

logger = logging.getLogger(__name__)

ORACLES = ('auto', 'linalg', 'curve', 'groebner')


# ==============================================================================
# 1. ZUFALL
# ==============================================================================
def component_rngs(seed, count):
    """Ein unabhängiger Generator pro Komponente aus einer SeedSequence."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]


def random_rows(rng, rows, cols, p):
    """Zufällige Matrix über F_p als Tupel von int-Zeilen."""
    drawn = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
    return [tuple(int(x) for x in row) for row in drawn]


def random_subspace(n, dim, seed, field=None):
    """Zufälliger dim-dimensionaler Unterraum von P^n (n - dim unabhängige Formen)."""
    field = field or FieldConfig()
    rng = component_rngs(seed, 1)[0]
    p = field.prime
    while True:
        rows = random_rows(rng, n - dim, n + 1, p)
        if rank_rows(rows, p) == n - dim:
            return forms_to_basis([LinearForm(field, r) for r in rows], n, field)


# ==============================================================================
# 2. TESTVARIETÄTEN
# ==============================================================================
def gen_linear_arrangement(n, dim, count, seed, field=None):
    """
    Vereinigung von `count` zufälligen dim-dimensionalen Unterräumen von P^n.

    Jede Komponente hat n - dim unabhängige Linearformen als Erzeuger, Grad 1;
    Komponenten werden neu gezogen, bis sie paarweise verschieden sind.
    """
    field = field or FieldConfig()
    if count < 1 or not 0 <= dim <= n - 1:
        raise InvalidParameters(f"Ungültige Anordnung: n={n}, dim={dim}, count={count}")
    p = field.prime
    codim = n - dim
    chosen = []
    for rng in component_rngs(seed, count):
        while True:
            rows = random_rows(rng, codim, n + 1, p)
            if rank_rows(rows, p) != codim:
                continue
            if any(rank_rows(rows + other, p) == codim for other in chosen):
                continue
            chosen.append(rows)
            break
    components = [
        Component(
            generators=tuple(MultiPoly.from_linear(field, r) for r in rows),
            dim=dim,
            degree=1,
            points=(forms_to_basis([LinearForm(field, r) for r in rows], n, field).basis[0],),
        )
        for rows in chosen
    ]
    return VarietySpec(field, Ambient(PROJECTIVE, n), components,
                       name=f"arrangement(n={n},dim={dim},count={count},seed={seed})")


def gen_affine_arrangement(n, dim, count, seed, field=None):
    """Vereinigung von `count` zufälligen affinen dim-Unterräumen von A^n."""
    field = field or FieldConfig()
    if count < 1 or not 0 <= dim <= n - 1:
        raise InvalidParameters(f"Ungültige Anordnung: n={n}, dim={dim}, count={count}")
    p = field.prime
    codim = n - dim
    chosen = []
    for rng in component_rngs(seed, count):
        while True:
            rows = random_rows(rng, codim, n + 1, p)
            if rank_rows([r[1:] for r in rows], p) != codim:
                continue
            if any(affine_intersection_dim(_affine(rows, n, field), _affine(other, n, field)) == dim
                   for other in chosen):
                continue
            chosen.append(rows)
            break
    components = []
    for rows in chosen:
        subspace = _affine(rows, n, field)
        components.append(Component(
            generators=tuple(MultiPoly.from_linear(field, r, constant_first=True) for r in rows),
            dim=dim,
            degree=1,
            points=(subspace.base_point,),
        ))
    return VarietySpec(field, Ambient(AFFINE, n), components,
                       name=f"affine-arrangement(n={n},dim={dim},count={count},seed={seed})")


def _affine(rows, n, field):
    return affine_from_forms(rows, n, field)


def gen_rational_normal_curve(n, field=None):
    """
    Die Kurve [1 : t : … : t^n] mit den 2x2-Minoren x_i·x_(j+1) - x_(i+1)·x_j
    (i < j < n) als Erzeugern; Dimension 1, Grad n.
    """
    field = field or FieldConfig()
    if n < 2:
        raise InvalidParameters(f"Rationale Normkurve braucht n >= 2, erhalten: {n}")
    x = [MultiPoly.variable(field, n + 1, i) for i in range(n + 1)]
    minors = tuple(
        x[i] * x[j + 1] - x[i + 1] * x[j]
        for i in range(n) for j in range(i + 1, n)
    )
    component = Component(
        generators=minors,
        dim=1,
        degree=n,
        points=(tuple([1] * (n + 1)), tuple([1] + [0] * n)),
        parametrization=parametrization_of_rnc(field, n),
    )
    return VarietySpec(field, Ambient(PROJECTIVE, n), (component,), name=f"rnc(n={n})")


def gen_hyperbola(n=2, field=None):
    """V(x1·x2 - 1, x3, …, xn) in A^n."""
    field = field or FieldConfig()
    if n < 2:
        raise InvalidParameters(f"Hyperbel braucht n >= 2, erhalten: {n}")
    x = [MultiPoly.variable(field, n, i) for i in range(n)]
    gens = (x[0] * x[1] - 1,) + tuple(x[2:])
    point = (1, 1) + (0,) * (n - 2)
    component = Component(generators=gens, dim=1, degree=2, points=(point,))
    return VarietySpec(field, Ambient(AFFINE, n), (component,), name=f"hyperbola(n={n})")


# ==============================================================================
# 3. ORAKEL
# ==============================================================================
def curve_miss_oracle(curve, W):
    """
    Wahr genau dann, wenn W die parametrisierte Kurve nicht trifft.

    Affiner Teil: ggT der spezialisierten Formen ist konstant. Unendlich
    ferner Punkt (führende Koeffizienten der Parametrisierung): liegt nicht
    auf W.
    """
    component = curve.components[0]
    param = component.parametrization
    if param is None:
        raise OracleMismatch(f"'{curve.name}' hat keine gespeicherte Parametrisierung")
    field = curve.field
    specialized = [
        substitute_linear_forms(MultiPoly.from_linear(field, f.coeffs), param)
        for f in W.forms
    ]
    nonzero = [s for s in specialized if not s.is_zero()]
    if not nonzero:
        return False
    g = nonzero[0]
    for s in nonzero[1:]:
        g = gcd_univariate(g, s)
    if g.degree() > 0:
        return False
    top = max(q.degree() for q in param)
    at_infinity = [q.coeffs[top] if q.degree() == top else 0 for q in param]
    return any(f(at_infinity) for f in W.forms)


def _component_subspace(component, n, field):
    return forms_to_basis([LinearForm(field, g.linear_coeffs()) for g in component.generators],
                          n, field)


def linalg_evades(V, W):
    """Evasion gegen eine projektive lineare Anordnung über Ränge."""
    n = V.ambient.n
    for comp in V.components:
        meet = subspace_intersection_dim(_component_subspace(comp, n, V.field), W)
        if meet > max(comp.dim + W.dim_k - n, -1):
            return False
    return True


def linalg_strongly_evades(V, W):
    """Starke Evasion gegen eine affine lineare Anordnung über Ränge."""
    n = V.ambient.n
    for comp in V.components:
        rows = [g.affine_coeffs() for g in comp.generators]
        meet = affine_intersection_dim(affine_from_forms(rows, n, V.field), W)
        if meet != max(comp.dim + W.dim_k - n, -1):
            return False
    return True


def _curve_applicable(V, k):
    if not V.ambient.is_projective or len(V.components) != 1:
        return False
    comp = V.components[0]
    return comp.parametrization is not None and comp.dim + k - V.ambient.n <= -1


def choose_oracle(V, k, oracle='auto'):
    """Wählt das Orakel; OracleMismatch, wenn das gewünschte nicht passt."""
    if oracle not in ORACLES:
        raise OracleMismatch(f"Unbekanntes Orakel '{oracle}'")
    linear = all(c.is_linear() for c in V.components)
    if oracle == 'linalg' and not linear:
        raise OracleMismatch(f"Das linalg-Orakel braucht lineare Komponenten, '{V.name}' ist nichtlinear")
    if oracle == 'curve' and not _curve_applicable(V, k):
        raise OracleMismatch(
            f"Das curve-Orakel braucht eine parametrisierte Kurve und 1 + k - n <= -1 ('{V.name}')"
        )
    if oracle != 'auto':
        return oracle
    if linear:
        return 'linalg'
    if _curve_applicable(V, k):
        return 'curve'
    return 'groebner'


# ==============================================================================
# 4. BERICHTE
# ==============================================================================
@dataclass(frozen=True)
class Verdict:
    index: tuple
    evades: bool
    oracle: str
    degenerate: bool = False


@dataclass(frozen=True)
class FailureReport:
    family_id: str
    variety_id: str
    total: int
    evading: int
    fraction: Fraction
    verdicts: tuple
    eps: Fraction = None

    @property
    def failing(self):
        return self.total - self.evading

    def within_guarantee(self):
        """Bei eps: Anteil <= eps; bei exakten Familien: mindestens ein Ausweicher."""
        if self.eps is not None:
            return self.fraction <= self.eps
        return self.evading >= 1


def family_id(H):
    p = H.params
    eps = f",eps={p.eps}" if p.eps is not None else ""
    return f"{H.provenance.construction}(n={p.n},d={p.d},k={p.k}{eps},{p.kind})"


def family_failure_fraction(H, V, oracle='auto', budget=None):
    """
    Urteil pro Mitglied und exakter Fehleranteil.

    Degenerierte Mitglieder zählen als Fehlschlag.

    Raises:
        InvalidVariety: Für eine Varietät ohne Komponenten.
        OracleMismatch: Wenn das Orakel nicht anwendbar ist.
    """
    if not V.components:
        raise InvalidVariety(f"Varietät '{V.name}' hat keine Komponenten")
    if H.params.kind != V.ambient.kind or H.params.n != V.ambient.n:
        raise InvalidParameters(
            f"Familie in {H.params.kind}({H.params.n}), Varietät in {V.ambient.kind}({V.ambient.n})"
        )
    if not H.members:
        raise InvalidParameters("Leere Familie")
    affine = H.params.kind == AFFINE
    chosen = choose_oracle(V, H.params.k, oracle)
    if affine and chosen == 'curve':
        raise OracleMismatch("Das curve-Orakel gilt nur projektiv")
    logger.debug("Orakel %s für %s", chosen, V.name)

    def verdict(W):
        if chosen == 'linalg':
            return linalg_strongly_evades(V, W) if affine else linalg_evades(V, W)
        if chosen == 'curve':
            return curve_miss_oracle(V, W)
        return strongly_evades(V, W, budget) if affine else evades(V, W, budget)

    verdicts = []
    for member in H:
        ok = False if member.degenerate else verdict(member.subspace)
        verdicts.append(Verdict(member.index, ok, chosen, member.degenerate))
    total = len(verdicts)
    evading = sum(1 for v in verdicts if v.evades)
    return FailureReport(
        family_id=family_id(H),
        variety_id=V.name,
        total=total,
        evading=evading,
        fraction=Fraction(total - evading, total),
        verdicts=tuple(verdicts),
        eps=H.params.eps,
    )


def check_maps(maps, V, budget=None):
    """
    finiteness_check für jede Abbildung.

    Returns:
        tuple: (Liste der Urteile, Anteil der endlichen Abbildungen als Fraction).
    """
    if not maps:
        raise InvalidParameters("Keine Abbildungen")
    verdicts = [finiteness_check(V, pi, budget) for pi in maps]
    return verdicts, Fraction(sum(verdicts), len(verdicts))


def hitting_failure_fraction(f, hitting):
    """Anteil der Punkte des Hitting-Sets, auf denen f verschwindet."""
    zeros = sum(1 for point in hitting.points if not evaluate(f, point))
    return Fraction(zeros, len(hitting))


def count_meeting(H, X):
    """Anzahl der Mitglieder W mit W ∩ X != ∅."""
    return sum(1 for m in H if subspace_intersection_dim(m.subspace, X) >= 0)
