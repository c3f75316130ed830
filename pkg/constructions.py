# constructions.py

"""
Explizite Konstruktionen evasiver Unterraumfamilien über F_p.

Enthält die Stichprobenmengen, die Basisfamilie aus iterierten
Vandermonde-Hyperebenen, die ε-Hitting-Sets (Kronecker-Substitution), die
Chow-Familie, die Rank-Extractor-Familie, das Verkleben mit einer inneren
Familie (ambient_reduction), die Hauptfamilie, die affine Einschränkung, die
Einschränkung ins Unendliche und die Noether-Abbildungen.

Jede Familie ist eine reine Funktion von (Parametern, FieldConfig); die
Reihenfolge der Mitglieder ist deterministisch.
"""
import logging
import math
from dataclasses import dataclass, field as dc_field, replace
from fractions import Fraction
from itertools import product
from typing import Optional

from errors import (
    EmptyFamily,
    FieldTooSmall,
    InvalidParameters,
    InvalidVariety,
    NoWitness,
    ShapeMismatch,
)
from field import FieldConfig, Scalar, vandermonde_ints, vandermonde_row
from linalg import (
    LinearForm,
    basis_to_subspace,
    contained_in_infinity,
    forms_to_basis,
    infinity_section,
    nullspace_rows,
    rank_rows,
    restrict_to_chart,
    rref_rows,
)

logger = logging.getLogger(__name__)

PROJECTIVE = 'projective'
AFFINE = 'affine'


# ==============================================================================
# 1. DATENTYPEN
# ==============================================================================
@dataclass(frozen=True)
class FamilyParams:
    """
    Parameter einer Familie: umgebende Dimension n, Gradschranke d,
    Unterraumdimension k, optional ε (None = exakte Variante) und die Art.
    """
    n: int
    d: int
    k: int
    eps: Optional[Fraction] = None
    kind: str = PROJECTIVE

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameters(f"n muss positiv sein, erhalten: {self.n}")
        if self.d < 1:
            raise InvalidParameters(f"d muss mindestens 1 sein, erhalten: {self.d}")
        if not 0 <= self.k <= self.n - 1:
            raise InvalidParameters(f"k muss 0 <= k <= n-1 erfüllen, erhalten: k={self.k}, n={self.n}")
        if self.eps is not None:
            object.__setattr__(self, 'eps', Fraction(self.eps))
            if not 0 < self.eps < 1:
                raise InvalidParameters(f"eps muss in (0, 1) liegen, erhalten: {self.eps}")
        if self.kind not in (PROJECTIVE, AFFINE):
            raise InvalidParameters(f"Unbekannte Art '{self.kind}'")

    @property
    def codim(self):
        return self.n - self.k


@dataclass(frozen=True)
class FamilyMember:
    """Ein Mitglied mit Indexkoordinaten; degenerate markiert dim < k."""
    index: tuple
    subspace: object
    degenerate: bool = False


@dataclass(frozen=True)
class Provenance:
    construction: str
    prime: int
    branch: str = 'direct'
    notes: dict = dc_field(default_factory=dict)


@dataclass(frozen=True)
class SubspaceFamily:
    params: FamilyParams
    field: FieldConfig
    members: tuple
    provenance: Provenance

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def subspaces(self):
        return [m.subspace for m in self.members]

    def degenerate_count(self):
        return sum(1 for m in self.members if m.degenerate)


@dataclass(frozen=True)
class HittingSet:
    """Punktmenge in F^m für Polynome vom Einzelgrad <= ideg."""
    field: FieldConfig
    num_vars: int
    ideg: int
    eps: Fraction
    points: tuple

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class LinearMapSpec:
    """Lineare Abbildung A^n -> A^r; `matrix` hat r Zeilen der Länge n."""
    field: FieldConfig
    r: int
    n: int
    matrix: tuple
    index: tuple = ()


def _field(field):
    return field if field is not None else FieldConfig()


# ==============================================================================
# 2. BASISFAMILIE
# ==============================================================================
def sample_sets(n, d, count, field=None):
    """
    Paarweise disjunkte Mengen B_1, …, B_count der Größe nd + 1 ohne 0.

    Returns:
        tuple: B_i = {(i-1)(nd+1)+1, …, i(nd+1)} als Tupel von Scalar.
    """
    field = _field(field)
    size = n * d + 1
    field.require_more_than(count * size, "sample_sets")
    return tuple(
        tuple(Scalar(v, field) for v in range(i * size + 1, (i + 1) * size + 1))
        for i in range(count)
    )


def vandermonde_form(gamma, n):
    """Die Linearform x0 + γ x1 + … + γ^n xn."""
    return LinearForm(gamma.field, tuple(c.value for c in vandermonde_row(gamma, n + 1)))


def basic_family(params, field=None):
    """
    Alle H_γ = V(L_γ1, …, L_γ(n-k)) für γ in B_1 × … × B_(n-k), lexikographisch.

    Bei kind='affine' wird jedes Mitglied auf die Karte x0 = 1 eingeschränkt.

    Raises:
        FieldTooSmall: Wenn p <= (n-k)(nd+1).
    """
    field = _field(field)
    if params.eps is not None:
        raise InvalidParameters("Die Basisfamilie ist exakt und nimmt kein eps")
    n, d, m = params.n, params.d, params.codim
    p = field.prime
    sets = sample_sets(n, d, m, field)
    members = []
    for gammas in product(*sets):
        forms = [LinearForm(field, vandermonde_ints(g.value, n + 1, p)) for g in gammas]
        subspace = forms_to_basis(forms, n, field)
        if params.kind == AFFINE:
            subspace = restrict_to_chart(subspace)
        members.append(FamilyMember(tuple(g.value for g in gammas), subspace))
    logger.info("Basisfamilie (n=%d, d=%d, k=%d): %d Mitglieder", n, d, params.k, len(members))
    provenance = Provenance('basic', p, notes={'block_size': n * d + 1, 'sample_sets': m})
    return SubspaceFamily(params, field, tuple(members), provenance)


def slicer_witness(points, B):
    """
    Kleinstes γ in B mit L_γ(q) != 0 für alle Punkte q.

    Args:
        points (sequence): Projektive Punkte (Koordinatenvektoren, nicht null).
        B (sequence of Scalar): Kandidatenmenge.

    Raises:
        NoWitness: Wenn jedes γ einen der Punkte annulliert.
    """
    candidates = sorted(B, key=lambda g: g.value)
    if not candidates:
        raise NoWitness("Leere Kandidatenmenge")
    field = candidates[0].field
    p = field.prime
    points = [[field.canonical(x) for x in q] for q in points]
    for q in points:
        if not any(q):
            raise InvalidParameters("Der Nullvektor ist kein projektiver Punkt")
    for gamma in candidates:
        if all(sum(c * x for c, x in zip(vandermonde_ints(gamma.value, len(q), p), q)) % p
               for q in points):
            return gamma
    raise NoWitness(f"Kein γ aus {len(candidates)} Kandidaten trifft alle {len(points)} Punkte nicht")


def _component_forms(component, field):
    if not component.is_linear():
        raise InvalidVariety("Nur lineare Komponenten werden unterstützt")
    return [LinearForm(field, g.linear_coeffs()) for g in component.generators]


def greedy_evading_member(V, n, d, k, field=None):
    """
    Konstruiert schrittweise einen Index der Basisfamilie, dessen Mitglied die
    lineare Anordnung V meidet: in jedem Schritt ein Punkt pro nichtleerem
    Restschnitt, dann slicer_witness gegen B_i.

    Returns:
        tuple: Indexkoordinaten (γ_1, …, γ_(n-k)) eines Mitglieds von basic_family.
    """
    field = _field(field)
    p = field.prime
    sets = sample_sets(n, d, n - k, field)
    components = [[f.coeffs for f in _component_forms(c, field)] for c in V.components]
    cuts = []
    chosen = []
    for B in sets:
        points = []
        for rows in components:
            cone = nullspace_rows(rows + cuts, n + 1, p)
            if cone:
                points.append(cone[0])
        gamma = slicer_witness(points, B) if points else B[0]
        chosen.append(gamma.value)
        cuts.append(vandermonde_ints(gamma.value, n + 1, p))
    logger.debug("Gieriger Zeuge: %s", chosen)
    return tuple(chosen)


# ==============================================================================
# 3. HITTING-SETS UND CHOW-FAMILIE
# ==============================================================================
def epsilon_hitting_set(m, ideg, eps, field=None):
    """
    ε-Hitting-Set für m-variate Polynome vom Einzelgrad <= ideg.

    Mit D = ideg + 1 und s = ceil(D^m / eps) sind die Punkte
    (γ, γ^D, …, γ^(D^(m-1))) für γ = 1, …, s.

    Raises:
        FieldTooSmall: Wenn p <= s.
    """
    field = _field(field)
    eps = Fraction(eps)
    if m < 1 or ideg < 0:
        raise InvalidParameters(f"Ungültige Hitting-Set-Parameter m={m}, ideg={ideg}")
    if not 0 < eps < 1:
        raise InvalidParameters(f"eps muss in (0, 1) liegen, erhalten: {eps}")
    D = ideg + 1
    s = math.ceil(Fraction(D ** m) / eps)
    field.require_more_than(s, "epsilon_hitting_set")
    p = field.prime
    exponents = [D ** j for j in range(m)]
    points = tuple(tuple(pow(g, e, p) for e in exponents) for g in range(1, s + 1))
    logger.debug("Hitting-Set m=%d, ideg=%d, eps=%s: %d Punkte", m, ideg, eps, s)
    return HittingSet(field, m, ideg, eps, points)


def chow_family(params, field=None):
    """
    Familie aus einem ε-Hitting-Set für Einzelgrad nd in n-k Variablen.

    Punkt μ liefert V(L_μ1, …, L_μ(n-k)); Kandidaten mit wiederholter
    Koordinate sind rangdefizient und werden verworfen.

    Raises:
        FieldTooSmall, EmptyFamily
    """
    field = _field(field)
    if params.eps is None:
        raise InvalidParameters("Die Chow-Familie benötigt eps")
    if params.kind != PROJECTIVE:
        raise InvalidParameters("Die Chow-Familie ist projektiv; affin über main_family")
    n, d, m = params.n, params.d, params.codim
    hitting = epsilon_hitting_set(m, n * d, params.eps, field)
    p = field.prime
    members = []
    pruned = 0
    for mu in hitting.points:
        if len(set(mu)) < m:
            pruned += 1
            continue
        forms = [LinearForm(field, vandermonde_ints(x, n + 1, p)) for x in mu]
        members.append(FamilyMember(mu, forms_to_basis(forms, n, field)))
    if not members:
        raise EmptyFamily("Alle Kandidaten der Chow-Familie wurden verworfen")
    logger.info("Chow-Familie (n=%d, d=%d, k=%d, eps=%s): %d Mitglieder, %d verworfen",
                n, d, params.k, params.eps, len(members), pruned)
    provenance = Provenance('chow', p, notes={'hitting_set_size': len(hitting), 'pruned': pruned})
    return SubspaceFamily(params, field, tuple(members), provenance)


# ==============================================================================
# 4. RANK EXTRACTOR UND VERKLEBEN
# ==============================================================================
def extractor_size(n, m, eps=None):
    """m(n-m)+1 exakt, sonst ceil((m+1)(n-m)/eps)."""
    if eps is None:
        return m * (n - m) + 1
    return math.ceil(Fraction((m + 1) * (n - m)) / Fraction(eps))


def extractor_matrix(alpha, n, m, p):
    """Die Zeilen von M_α mit Einträgen α^(i·j), i <= m, j <= n."""
    return [tuple(pow(alpha, i * j, p) for j in range(n + 1)) for i in range(m + 1)]


def _extractor_alphas(n, m, s, field):
    p = field.prime
    found, skipped = [], 0
    alpha = 1
    while len(found) < s:
        if alpha >= p:
            raise FieldTooSmall(p, alpha + s - len(found), "rank_extractor_family")
        rows = extractor_matrix(alpha, n, m, p)
        if rank_rows(rows, p) == m + 1:
            found.append((alpha, rows))
        else:
            skipped += 1
        alpha += 1
    return found, skipped


def rank_extractor_family(n, m, eps=None, field=None):
    """
    Kerne der Matrizen M_α als (n-m-1)-dimensionale Unterräume von P^n.

    Jeder feste m-dimensionale lineare Unterraum trifft höchstens (m+1)(n-m)
    Mitglieder.

    Raises:
        FieldTooSmall: Wenn der Vorrat an α erschöpft ist.
    """
    field = _field(field)
    if not 0 <= m <= n - 1:
        raise InvalidParameters(f"m muss 0 <= m <= n-1 erfüllen, erhalten: m={m}, n={n}")
    params = FamilyParams(n, 1, n - m - 1, eps)
    s = extractor_size(n, m, params.eps)
    found, skipped = _extractor_alphas(n, m, s, field)
    members = []
    for alpha, rows in found:
        forms = [LinearForm(field, row) for row in rows]
        members.append(FamilyMember((alpha,), forms_to_basis(forms, n, field)))
    logger.info("Rank-Extractor (n=%d, m=%d): %d Mitglieder, %d α übersprungen",
                n, m, len(members), skipped)
    provenance = Provenance('rank_extractor', field.prime,
                            notes={'m': m, 'size': s, 'skipped': skipped})
    return SubspaceFamily(params, field, tuple(members), provenance)


def spanning_points(alpha, n, m, p):
    """
    Spannende Punkte v_0, …, v_n zu M_α: v_(m+1..n) ist die Kernbasis,
    v_(0..m) sind die Einheitsvektoren an den Pivotspalten von RREF(M_α).
    """
    rows = extractor_matrix(alpha, n, m, p)
    _, pivots = rref_rows(rows, n + 1, p)
    units = []
    for c in pivots:
        e = [0] * (n + 1)
        e[c] = 1
        units.append(tuple(e))
    return units + nullspace_rows(rows, n + 1, p)


def ambient_reduction(inner, n, d, k, eps=None, field=None):
    """
    Verklebt eine innere Familie in P^(rd) mit dem Rank Extractor in P^n.

    Z_(i,j) = span(v_(i,rd+1..n), φ_i(u_(j,0)), …, φ_i(u_(j,rd-r-1))) mit
    φ_i(e_l) = v_(i,l). Mitglieder mit dim < k bleiben markiert erhalten.

    Raises:
        ShapeMismatch: Wenn die innere Familie nicht zu (n, d, k) passt.
    """
    field = _field(field if field is not None else inner.field)
    p = field.prime
    r = n - k - 1
    rd = r * d
    if rd <= r:
        raise ShapeMismatch(f"Reduktion braucht rd > r, erhalten: r={r}, rd={rd}")
    if inner.params.n != rd or inner.params.k != rd - r - 1:
        raise ShapeMismatch(
            f"Innere Familie in P^{inner.params.n} mit k={inner.params.k}, "
            f"erwartet P^{rd} mit k={rd - r - 1}"
        )
    if n <= rd:
        raise ShapeMismatch(f"Reduktion braucht n > rd, erhalten: n={n}, rd={rd}")
    extractor_eps = None if eps is None else Fraction(eps) / 2
    extractor = rank_extractor_family(n, rd, extractor_eps, field)
    members = []
    for ext in extractor:
        points = spanning_points(ext.index[0], n, rd, p)
        head, tail = points[:rd + 1], points[rd + 1:]
        for inn in inner:
            images = [
                tuple(sum(u[l] * head[l][c] for l in range(rd + 1)) % p for c in range(n + 1))
                for u in inn.subspace.basis
            ]
            z = basis_to_subspace(list(tail) + images, n, field)
            members.append(FamilyMember(ext.index + inn.index, z, z.dim_k < k))
    params = FamilyParams(n, d, k, eps)
    family = SubspaceFamily(params, field, tuple(members), Provenance(
        'reduction', p, branch='reduction',
        notes={
            'r': r,
            'rd': rd,
            'extractor_size': len(extractor),
            'inner_size': len(inner),
            'extractor_eps': extractor_eps,
            'inner_eps': inner.params.eps,
        },
    ))
    if family.degenerate_count():
        logger.warning("⚠️ %d degenerierte Mitglieder in der Reduktion", family.degenerate_count())
    return family


# ==============================================================================
# 5. HAUPTFAMILIE, AFFINE UND UNENDLICHE EINSCHRÄNKUNG
# ==============================================================================
def main_family(params, field=None):
    """
    (n, d, eps)-evasive k-Unterraumfamilie.

    n <= (n-k)d (oder r = 0): direkt die Chow-Familie. Sonst für d = 1 der
    Rank Extractor selbst, für d >= 2 die Chow-Familie in P^(rd) mit eps/2,
    verklebt per ambient_reduction. Die affine Variante baut die projektive
    Familie mit eps' = eps/(2+eps) und schränkt sie ein.
    """
    field = _field(field)
    if params.eps is None:
        raise InvalidParameters("Die Hauptfamilie benötigt eps")
    if params.kind == AFFINE:
        inner_eps = params.eps / (2 + params.eps)
        projective = main_family(replace(params, eps=inner_eps, kind=PROJECTIVE), field)
        return affine_restriction(projective)
    n, d, k = params.n, params.d, params.k
    r = n - k - 1
    if n <= (n - k) * d or r == 0:
        logger.debug("Hauptfamilie: direkter Zweig")
        family = chow_family(params, field)
        notes = dict(family.provenance.notes, source='chow')
        return replace(family, provenance=replace(family.provenance, construction='main', notes=notes))
    if d == 1:
        logger.debug("Hauptfamilie: linearer Reduktionszweig")
        extractor = rank_extractor_family(n, r, params.eps, field)
        notes = dict(extractor.provenance.notes, source='rank_extractor')
        return SubspaceFamily(params, field, extractor.members,
                              Provenance('main', field.prime, 'reduction', notes))
    rd = r * d
    logger.debug("Hauptfamilie: Reduktion über P^%d", rd)
    inner = chow_family(FamilyParams(rd, d, rd - r - 1, params.eps / 2), field)
    family = ambient_reduction(inner, n, d, k, params.eps, field)
    return replace(family, provenance=replace(family.provenance, construction='main'))


def affine_restriction(H):
    """
    Verwirft Mitglieder in V(x0), schränkt den Rest auf x0 = 1 ein.
    Aus eps' wird eps = 2·eps'/(1 - eps').

    Raises:
        EmptyFamily: Wenn alle Mitglieder im Unendlichen liegen.
    """
    if H.params.kind != PROJECTIVE:
        raise InvalidParameters("affine_restriction erwartet eine projektive Familie")
    eps = None
    if H.params.eps is not None:
        eps = 2 * H.params.eps / (1 - H.params.eps)
        if eps >= 1:
            raise InvalidParameters(f"eps' = {H.params.eps} ergibt eps = {eps} >= 1")
    members = []
    dropped = 0
    for m in H:
        if m.degenerate or contained_in_infinity(m.subspace):
            dropped += 1
            continue
        members.append(FamilyMember(m.index, restrict_to_chart(m.subspace)))
    if not members:
        raise EmptyFamily("Alle Mitglieder liegen in der Hyperebene im Unendlichen")
    logger.debug("Affine Einschränkung: %d verworfen", dropped)
    params = replace(H.params, eps=eps, kind=AFFINE)
    notes = dict(H.provenance.notes, projective_eps=H.params.eps, dropped=dropped)
    return SubspaceFamily(params, H.field, tuple(members),
                          replace(H.provenance, notes=notes))


def infinity_restriction(H):
    """
    H_∞: Schnitte der nicht in V(x0) enthaltenen Mitglieder mit V(x0), als
    (k-1)-Unterräume von P^(n-1) in den Koordinaten x1..xn.
    """
    if H.params.kind != PROJECTIVE:
        raise InvalidParameters("infinity_restriction erwartet eine projektive Familie")
    if H.params.k < 1 or H.params.n < 2:
        raise InvalidParameters("infinity_restriction braucht k >= 1 und n >= 2")
    members = [
        FamilyMember(m.index, infinity_section(m.subspace))
        for m in H
        if not m.degenerate and not contained_in_infinity(m.subspace)
    ]
    if not members:
        raise EmptyFamily("Alle Mitglieder liegen in der Hyperebene im Unendlichen")
    params = FamilyParams(H.params.n - 1, H.params.d, H.params.k - 1, H.params.eps)
    return SubspaceFamily(params, H.field, tuple(members),
                          replace(H.provenance, branch='infinity'))


# ==============================================================================
# 6. NOETHER-ABBILDUNGEN
# ==============================================================================
def noether_maps(n, d, r, eps=None, field=None):
    """
    Lineare Abbildungen A^n -> A^r aus einer evasiven (n-r-1)-Familie in der
    Hyperebene im Unendlichen (Koordinaten x1..xn).

    r = n liefert die Identität, r = 0 die leere Abbildung. Ohne eps wird die
    exakte Basisfamilie verwendet.

    Returns:
        tuple of LinearMapSpec
    """
    field = _field(field)
    if not 0 <= r <= n or n < 1:
        raise InvalidParameters(f"Es muss 0 <= r <= n gelten, erhalten: r={r}, n={n}")
    if r == n:
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return (LinearMapSpec(field, n, n, identity),)
    if r == 0:
        return (LinearMapSpec(field, 0, n, ()),)
    params = FamilyParams(n - 1, d, n - r - 1, eps)
    family = main_family(params, field) if eps is not None else basic_family(params, field)
    maps = []
    for member in family:
        center = member.subspace
        if member.degenerate or len(center.forms) != r:
            logger.debug("Zentrum %s übersprungen", member.index)
            continue
        maps.append(LinearMapSpec(field, r, n, tuple(f.coeffs for f in center.forms), member.index))
    logger.info("Noether-Abbildungen (n=%d, d=%d, r=%d): %d", n, d, r, len(maps))
    return tuple(maps)
