# linalg.py

"""
Exakte lineare Algebra über F_p.

Rang, reduzierte Zeilenstufenform und Kerne sowie die Umrechnung zwischen der
dualen Darstellung eines Unterraums (definierende Linearformen) und der
primalen Darstellung (Basis des affinen Kegels). Für lineare Varietäten ist
dieses Modul zugleich das schnelle Evasions-Orakel.

Pivotwahl und Basisnormierung sind deterministisch (Pivotspalte links, oberste
Zeile; freie Variablen aufsteigend, Pivotspalten tragen 1), damit serialisierte
Familien byte-identisch reproduzierbar sind. Die leere projektive Menge hat
Dimension -1.
"""
from dataclasses import dataclass

from errors import DegenerateSubspace, FieldMismatch, InvalidParameters
from field import FieldConfig, Scalar

__all__ = [
    'MatrixFp',
    'LinearForm',
    'ProjSubspace',
    'AffineSubspace',
    'rref_rank',
    'nullspace',
    'forms_to_basis',
    'basis_to_subspace',
    'subspace_intersection_dim',
    'point_on_subspace',
    'contained_in_infinity',
    'restrict_to_chart',
    'affine_from_forms',
    'affine_intersection_dim',
    'infinity_section',
]


# ==============================================================================
# 1. KERNROUTINEN AUF INT-ZEILEN
# ==============================================================================
def rref_rows(rows, cols, p):
    """
    Gauß-Jordan-Elimination modulo p.

    Returns:
        tuple: (Zeilen in reduzierter Stufenform, Liste der Pivotspalten).
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(cols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        factor = pow(m[r][c], -1, p)
        m[r] = [x * factor % p for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank_rows(rows, p):
    """Rang einer Liste von Zeilen (nur Vorwärtselimination)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot_row = m[rank]
        factor = pow(pivot_row[c], -1, p)
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            if f:
                f = f * factor % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], pivot_row)]
        rank += 1
        if rank == len(m):
            break
    return rank


def nullspace_rows(rows, cols, p):
    """Basis von {x : Mx = 0}; ein Vektor pro freier Spalte, aufsteigend."""
    reduced, pivots = rref_rows(rows, cols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-reduced[i][free]) % p
        basis.append(tuple(v))
    return basis


def independent_indices(rows, p):
    """Indizes einer maximalen linear unabhängigen Teilfolge (gierig, in Reihenfolge)."""
    echelon = []  # (Pivotspalte, normierte Zeile)
    chosen = []
    for idx, row in enumerate(rows):
        v = list(row)
        for c, e in echelon:
            f = v[c]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, e)]
        lead = next((c for c, x in enumerate(v) if x), None)
        if lead is None:
            continue
        factor = pow(v[lead], -1, p)
        echelon.append((lead, [x * factor % p for x in v]))
        chosen.append(idx)
    return chosen


def apply_rows(rows, vector, p):
    """Matrix-Vektor-Produkt M·v modulo p."""
    return [sum(a * b for a, b in zip(row, vector)) % p for row in rows]


# ==============================================================================
# 2. DATENTYPEN
# ==============================================================================
@dataclass(frozen=True)
class MatrixFp:
    """Matrix über F_p; Einträge zeilenweise als kanonische Repräsentanten."""
    field: FieldConfig
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InvalidParameters(
                f"{len(self.entries)} Einträge passen nicht zu {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [tuple(field.canonical(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise InvalidParameters("Zeilen unterschiedlicher Länge")
        return cls(field, len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def entry(self, i, j):
        return Scalar(self.entries[i * self.cols + j], self.field)


@dataclass(frozen=True)
class LinearForm:
    """Linearform c_0 x_0 + … + c_n x_n (bzw. affin: c + a_1 x_1 + … + a_n x_n)."""
    field: FieldConfig
    coeffs: tuple

    @classmethod
    def of(cls, field, coeffs):
        return cls(field, tuple(field.canonical(c) for c in coeffs))

    def __call__(self, point):
        p = self.field.prime
        return sum(c * x for c, x in zip(self.coeffs, point)) % p

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class ProjSubspace:
    """
    Linearer Unterraum von P^n in dualer und primaler Darstellung.

    `forms` sind n - dim_k unabhängige Linearformen, `basis` sind dim_k + 1
    unabhängige Vektoren in F^(n+1), die den Kegel aufspannen.
    """
    field: FieldConfig
    ambient_n: int
    forms: tuple
    basis: tuple
    dim_k: int

    def form_rows(self):
        return [f.coeffs for f in self.forms]


@dataclass(frozen=True)
class AffineSubspace:
    """
    Affiner Unterraum von A^n.

    `affine_forms` sind Vektoren (c, a_1, …, a_n) für c + a·x; `base_point`
    liegt auf allen Formen, `directions` werden von den Linearteilen annulliert.
    """
    field: FieldConfig
    ambient_n: int
    affine_forms: tuple
    base_point: tuple
    directions: tuple
    dim_k: int


# ==============================================================================
# 3. OPERATIONEN
# ==============================================================================
def rref_rank(M):
    """Reduzierte Zeilenstufenform und Rang von M."""
    reduced, pivots = rref_rows(M.to_rows(), M.cols, M.field.prime)
    return MatrixFp.from_rows(M.field, reduced, M.cols), len(pivots)


def nullspace(M):
    """Deterministische Basis des Kerns von M; Größe = cols - rank."""
    return nullspace_rows(M.to_rows(), M.cols, M.field.prime)


def _field_of(forms, field):
    if field is not None:
        return field
    if not forms:
        raise InvalidParameters("Ohne Formen muss der Körper angegeben werden")
    return forms[0].field


def forms_to_basis(forms, ambient_n, field=None):
    """
    Berechnet den Kern der Formenmatrix und verpackt beide Darstellungen.

    Abhängige Formen werden verworfen (die erste unabhängige Auswahl bleibt).
    DegenerateSubspace, wenn die Formen den ganzen Raum F^(n+1) annullieren.
    """
    field = _field_of(forms, field)
    forms = tuple(forms)
    for f in forms:
        if len(f.coeffs) != ambient_n + 1:
            raise InvalidParameters(f"Form der Länge {len(f.coeffs)} in P^{ambient_n}")
        if f.field.prime != field.prime:
            raise FieldMismatch("Formen aus verschiedenen Körpern")
    p = field.prime
    rows = [f.coeffs for f in forms]
    keep = independent_indices(rows, p)
    if len(keep) == ambient_n + 1:
        raise DegenerateSubspace(f"Die Formen schneiden in P^{ambient_n} die leere Menge aus")
    basis = nullspace_rows([rows[i] for i in keep], ambient_n + 1, p)
    return ProjSubspace(field, ambient_n, tuple(forms[i] for i in keep), tuple(basis),
                        ambient_n - len(keep))


def basis_to_subspace(vectors, ambient_n, field):
    """Unterraum aus aufspannenden Punkten; die Formen sind der Kern der Basismatrix."""
    p = field.prime
    vectors = [tuple(field.canonical(x) for x in v) for v in vectors]
    keep = independent_indices(vectors, p)
    if not keep:
        raise DegenerateSubspace("Keine aufspannenden Punkte ungleich null")
    basis = tuple(vectors[i] for i in keep)
    forms = nullspace_rows(basis, ambient_n + 1, p)
    return ProjSubspace(field, ambient_n, tuple(LinearForm(field, f) for f in forms), basis,
                        len(basis) - 1)


def subspace_intersection_dim(A, B):
    """
    Projektive Dimension von A ∩ B (-1 für leer).

    Der Schnittkegel ist {Σ c_j b_j : F_A(Σ c_j b_j) = 0} mit der Basis b_j
    von B, hat also Dimension (dim_k(B) + 1) - rang(F_A · B).
    """
    if A.ambient_n != B.ambient_n:
        raise InvalidParameters("Unterschiedliche umgebende Räume")
    if A.field.prime != B.field.prime:
        raise FieldMismatch("Unterräume aus verschiedenen Körpern")
    if len(A.forms) > len(B.forms):
        A, B = B, A
    p = A.field.prime
    rows_a = A.form_rows()
    if not rows_a:
        return B.dim_k
    products = [[sum(a * b for a, b in zip(form, vec)) % p for vec in B.basis] for form in rows_a]
    return len(B.basis) - rank_rows(products, p) - 1


def point_on_subspace(point, S):
    """Wahr genau dann, wenn jede definierende Form von S im Punkt verschwindet."""
    if len(point) != S.ambient_n + 1:
        raise InvalidParameters(f"Punkt der Länge {len(point)} in P^{S.ambient_n}")
    point = [S.field.canonical(x) for x in point]
    return all(f(point) == 0 for f in S.forms)


def contained_in_infinity(S):
    """Liegt S ganz in der Hyperebene im Unendlichen V(x0)?"""
    return all(b[0] == 0 for b in S.basis)


def restrict_to_chart(S):
    """Einschränkung eines projektiven Unterraums auf die Karte x0 = 1."""
    if contained_in_infinity(S):
        raise DegenerateSubspace("Unterraum liegt in der Hyperebene im Unendlichen")
    p = S.field.prime
    anchor = next(b for b in S.basis if b[0])
    scale = pow(anchor[0], -1, p)
    base = tuple(x * scale % p for x in anchor)
    directions = []
    for b in S.basis:
        if b is anchor:
            continue
        directions.append(tuple((x - b[0] * y) % p for x, y in zip(b, base))[1:])
    return AffineSubspace(S.field, S.ambient_n, tuple(f.coeffs for f in S.forms), base[1:],
                          tuple(directions), S.dim_k)


def affine_from_forms(affine_forms, ambient_n, field):
    """Affiner Unterraum aus Formen (c, a_1, …, a_n); leer -> DegenerateSubspace."""
    forms = [LinearForm.of(field, f) for f in affine_forms]
    return restrict_to_chart(forms_to_basis(forms, ambient_n, field))


def affine_intersection_dim(A, B):
    """Dimension von A ∩ B in A^n; -1, wenn das Gleichungssystem unlösbar ist."""
    if A.ambient_n != B.ambient_n:
        raise InvalidParameters("Unterschiedliche umgebende Räume")
    p = A.field.prime
    augmented = list(A.affine_forms) + list(B.affine_forms)
    linear = [row[1:] for row in augmented]
    rank_linear = rank_rows(linear, p)
    if rank_rows(augmented, p) > rank_linear:
        return -1
    return A.ambient_n - rank_linear


def infinity_section(S):
    """
    S ∩ V(x0), gelesen als Unterraum von P^(n-1) in den Koordinaten x1..xn.
    DegenerateSubspace, wenn der Schnitt leer ist.
    """
    p = S.field.prime
    rows = S.form_rows() + [tuple([1] + [0] * S.ambient_n)]
    cone = nullspace_rows(rows, S.ambient_n + 1, p)
    if not cone:
        raise DegenerateSubspace("Schnitt mit der Hyperebene im Unendlichen ist leer")
    return basis_to_subspace([v[1:] for v in cone], S.ambient_n - 1, S.field)
