"""Isomorphism invariants, two-dimensional classification, and censuses.

Every valid two-dimensional dialgebra lands in exactly one bucket:

  * trivial-both: both products vanish,
  * zero-cubed-left-zero / zero-cubed-right-zero: exactly one product is
    zero and the surviving product has vanishing triple products,
  * from-associative: both products agree (and no canonical form below
    applies), the dialgebra is an associative algebra in disguise,
  * the canonical forms I, II_k (k != 0), III, IV.

Classification works in a basis (r, s) where r spans the annihilator; in
such a basis the six free structure constants x1..x6 satisfy a fixed
system of eleven polynomial constraints, and the case split on
(x1, x2, x4) plus an explicit rescaling reaches the canonical table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Dialgebra, ProductTag
from .errors import (
    FieldMismatchError,
    InternalCheckError,
    NotADialgebraError,
    SearchBoundExceededError,
    UnsupportedOverRationalsError,
)
from .fields import PRIME, Field, Scalar
from .gfsearch import (
    arrays_to_dialgebra,
    dialgebra_to_arrays,
    gl_matrices,
    int_matrix_to_mat,
    isomorphism_indices,
    pair_orbit,
    valid_pairs,
)
from .identities import bar_units, check_dialgebra
from .linalg import Mat, Subspace, Vec
from .structure import DEFAULT_SEARCH_BOUND, annihilators

KIND_TRIVIAL = "trivial-both"
KIND_ZERO_CUBED_LEFT = "zero-cubed-left-zero"
KIND_ZERO_CUBED_RIGHT = "zero-cubed-right-zero"
KIND_FROM_ASSOCIATIVE = "from-associative"
KIND_I = "I"
KIND_II = "II"
KIND_III = "III"
KIND_IV = "IV"

SUBLABEL_TRIVIAL = "trivial"
SUBLABEL_SQUARE = "square-type"


@dataclass(frozen=True)
class Fingerprint:
    """Base-change invariants used as a necessary condition for isomorphism."""

    dim_left_square: int
    dim_right_square: int
    dim_rann_left: int
    dim_lann_left: int
    dim_rann_right: int
    dim_lann_right: int
    dim_ann: int
    products_equal: bool
    has_bar_unit: bool


def fingerprint(d):
    full = Subspace.full(d.field, d.dim)
    prof = annihilators(d)
    return Fingerprint(
        dim_left_square=d.product_subspace(ProductTag.LEFT, full, full).dim,
        dim_right_square=d.product_subspace(ProductTag.RIGHT, full, full).dim,
        dim_rann_left=prof.rann_left.dim,
        dim_lann_left=prof.lann_left.dim,
        dim_rann_right=prof.rann_right.dim,
        dim_lann_right=prof.lann_right.dim,
        dim_ann=prof.ann.dim,
        products_equal=d.products_equal(),
        has_bar_unit=not bar_units(d).is_empty,
    )


@dataclass(frozen=True)
class ClassLabel:
    """Classification outcome with an explicit change-of-basis witness.

    Rewriting the input on the basis whose rows are `witness` reproduces
    `canonical` exactly. For II the scalar k is the complete invariant of
    the family.
    """

    kind: str
    k: Scalar | None
    sublabel: str | None
    witness: Mat
    canonical: Dialgebra

    def label_string(self):
        parts = self.kind
        if self.kind == KIND_II:
            parts += f"_{self.k}"
        if self.sublabel is not None and self.kind != KIND_TRIVIAL:
            parts += f":{self.sublabel}"
        return parts


def canonical_dialgebra(kind, field, k=None):
    """The canonical table of a classification bucket, on basis (r, s)."""
    names = ("r", "s")
    if kind == KIND_TRIVIAL:
        return Dialgebra.from_entries(field, 2, {}, {}, names)
    if kind == KIND_ZERO_CUBED_LEFT:
        return Dialgebra.from_entries(field, 2, {}, {(1, 1, 0): 1}, names)
    if kind == KIND_ZERO_CUBED_RIGHT:
        return Dialgebra.from_entries(field, 2, {(1, 1, 0): 1}, {}, names)
    if kind == KIND_I:
        return Dialgebra.from_entries(
            field, 2, {(1, 1, 1): 1}, {(1, 0, 0): 1, (1, 1, 1): 1}, names
        )
    if kind == KIND_II:
        k = field.scalar(k)
        if not k:
            raise ValueError("the II family needs a nonzero parameter")
        return Dialgebra.from_entries(field, 2, {(1, 1, 0): 1}, {(1, 1, 0): k}, names)
    if kind == KIND_III:
        return Dialgebra.from_entries(
            field, 2, {(0, 1, 0): 1, (1, 1, 1): 1}, {(1, 1, 1): 1}, names
        )
    if kind == KIND_IV:
        return Dialgebra.from_entries(
            field, 2, {(0, 1, 0): 1, (1, 1, 1): 1}, {(1, 0, 0): 1, (1, 1, 1): 1}, names
        )
    raise ValueError(f"no canonical table for kind {kind!r}")


@dataclass(frozen=True)
class ParamTable:
    """The generic tables on a basis (r, s) with annihilator spanned by r:

    r <| s = x1 r,  s <| s = x2 r + x3 s,  s |> r = x4 r,  s |> s = x5 r + x6 s,
    every other structure constant zero.
    """

    x1: Scalar
    x2: Scalar
    x3: Scalar
    x4: Scalar
    x5: Scalar
    x6: Scalar

    @classmethod
    def of(cls, field, values):
        if len(values) != 6:
            raise ValueError("expected six parameters")
        return cls(*(field.scalar(v) for v in values))


def dim2_constraints(t):
    """The eleven polynomial constraints the parameters must satisfy.

    A ParamTable is a valid dialgebra exactly when all residuals vanish;
    the acceptance suite checks this equivalence exhaustively against
    direct law evaluation over small prime fields.
    """
    x1, x2, x3, x4, x5, x6 = t.x1, t.x2, t.x3, t.x4, t.x5, t.x6
    return [
        x1 * x2,
        x4 * x5,
        x1 * (x1 - x3),
        x4 * (x3 - x4),
        x1 * (x1 - x6),
        x2 * (x1 + x3 - x6),
        x1 * x5 + x2 * x6 - x2 * x4 - x3 * x5,
        x3 * (x3 - x6),
        x4 * (x4 - x6),
        x6 * (x3 - x6),
        x5 * (x3 - x4 - x6),
    ]


def param_dialgebra(t):
    """The dialgebra encoded by a ParamTable, on the standard basis (r, s)."""
    field = t.x1.field
    return Dialgebra.from_entries(
        field,
        2,
        {(0, 1, 0): t.x1, (1, 1, 0): t.x2, (1, 1, 1): t.x3},
        {(1, 0, 0): t.x4, (1, 1, 0): t.x5, (1, 1, 1): t.x6},
    )


def is_isomorphism(a, b, t):
    """Does the map with row matrix t send a's products to b's products?"""
    if t.nrows != a.dim or t.ncols != b.dim or a.dim != b.dim:
        return False
    try:
        t.inverse()
    except Exception:
        return False
    for pa, pb in ((a.left, b.left), (a.right, b.right)):
        for i in range(a.dim):
            for j in range(a.dim):
                if pa.row(i, j) @ t != pb.apply(t.row(i), t.row(j)):
                    return False
    return True


def _require(condition, message):
    if not condition:
        raise InternalCheckError(message)


def _extract_params(d):
    """Read x1..x6 off a dialgebra already written on an (r, s) basis."""
    left, right = d.left, d.right
    zero = d.field.zero
    _require(not left.row(0, 0) and not left.row(1, 0), "left table shape broken")
    _require(left.entry(0, 1, 1) == zero, "r <| s has an s component")
    _require(not right.row(0, 0) and not right.row(0, 1), "right table shape broken")
    _require(right.entry(1, 0, 1) == zero, "s |> r has an s component")
    return ParamTable(
        left.entry(0, 1, 0),
        left.entry(1, 1, 0),
        left.entry(1, 1, 1),
        right.entry(1, 0, 0),
        right.entry(1, 1, 0),
        right.entry(1, 1, 1),
    )


def _one_sided_zero_label(d):
    from .structure import algebra_annihilator

    kind = KIND_ZERO_CUBED_LEFT if d.left.is_zero() else KIND_ZERO_CUBED_RIGHT
    single = d.as_single(ProductTag.RIGHT if kind == KIND_ZERO_CUBED_LEFT else ProductTag.LEFT)
    # For a valid dialgebra the surviving product is zero-cubed, so in dim 2
    # the annihilator is a line and the complement square generates it.
    ann = algebra_annihilator(single)
    _require(ann.dim == 1, "one-sided zero dialgebra with non-line annihilator")
    pivot = ann.pivots[0]
    z0 = ann.basis.row(0)
    x0 = Vec.unit(d.field, 2, 1 - pivot)
    v = single.multiply(x0, x0)
    c = v.coords[pivot]
    _require(bool(c) and ann.contains(v), "complement square escaped the annihilator")
    witness = Mat(d.field, (z0.scale(c), x0), 2)
    canonical = canonical_dialgebra(kind, d.field)
    _require(d.rebase(witness) == canonical, "zero-cubed witness is not a base change to the table")
    return ClassLabel(kind, None, SUBLABEL_SQUARE, witness, canonical)


def classify_dim2(d):
    """Sort a valid two-dimensional dialgebra into its unique bucket.

    The annihilator-based case tree runs before any products-equal shortcut
    because the II family at k = 1 has equal products yet is a genuine
    canonical form; equal products fall out of the tree in the two branches
    where the parameters force the tables to coincide.
    """
    if d.dim != 2:
        raise ValueError("classification is only defined in dimension 2")
    violations = check_dialgebra(d)
    if violations:
        raise NotADialgebraError(
            f"input fails {violations[0].law} at {violations[0].triple}"
        )
    identity = Mat.identity(d.field, 2)
    left_zero, right_zero = d.left.is_zero(), d.right.is_zero()
    if left_zero and right_zero:
        return ClassLabel(KIND_TRIVIAL, None, SUBLABEL_TRIVIAL, identity, d)
    if left_zero or right_zero:
        return _one_sided_zero_label(d)

    prof = annihilators(d)
    ann = prof.ann
    if ann.dim == 0:
        # The difference of the products always lies in the annihilator,
        # so a trivial annihilator forces the products to agree.
        _require(d.products_equal(), "zero annihilator but distinct products")
        return ClassLabel(KIND_FROM_ASSOCIATIVE, None, None, identity, d)
    _require(ann.dim == 1, "nonzero products with a full annihilator")

    r = ann.basis.row(0)
    s = Vec.unit(d.field, 2, 1 - ann.pivots[0])
    base = Mat(d.field, (r, s), 2)
    d_rs = d.rebase(base)
    t = _extract_params(d_rs)
    _require(not any(dim2_constraints(t)), "valid dialgebra violates the parameter constraints")
    x1, x2, x3, x4, x5, x6 = t.x1, t.x2, t.x3, t.x4, t.x5, t.x6
    one, zero = d.field.one, d.field.zero

    kind = None
    k = None
    step = identity
    if not x1 and not x2:
        # Left product reduced to s <| s = x3 s; x3 = 0 would make it zero.
        _require(bool(x3), "left product vanished inside the case tree")
        _require(x3 == x6 and not x5, "case x1 = x2 = 0 shape broken")
        if not x4:
            kind = KIND_FROM_ASSOCIATIVE
        else:
            _require(x4 == x3, "case of I reached with x4 != x3")
            kind = KIND_I
            step = Mat.from_rows(d.field, [[one, zero], [zero, x3.inverse()]])
    elif not x1:
        if not x4:
            if not x3:
                # Both squares land on r: scaling r by x2 normalizes the
                # left square and k = x5/x2 is the surviving invariant.
                _require(not x6, "case of II reached with x6 != 0")
                _require(bool(x5), "right product vanished inside the case tree")
                kind = KIND_II
                k = x5 / x2
                step = Mat.from_rows(d.field, [[x2, zero], [zero, one]])
            else:
                _require(x2 == x5 and x3 == x6, "coinciding-products case shape broken")
                kind = KIND_FROM_ASSOCIATIVE
        else:
            _require(not x5 and x3 == x4 and x3 == x6 and bool(x3), "second case of I shape broken")
            kind = KIND_I
            step = Mat.from_rows(
                d.field, [[one, zero], [x2 / (x3 * x3), x3.inverse()]]
            )
    else:
        _require(not x2, "x1 and x2 simultaneously nonzero")
        if not x4:
            _require(x1 == x3 and x1 == x6, "case of III shape broken")
            kind = KIND_III
            step = Mat.from_rows(
                d.field, [[one, zero], [x5 / (x6 * x6), x6.inverse()]]
            )
        else:
            _require(
                not x5 and x1 == x3 and x1 == x4 and x1 == x6, "case of IV shape broken"
            )
            kind = KIND_IV
            step = Mat.from_rows(d.field, [[one, zero], [zero, x1.inverse()]])

    if kind == KIND_FROM_ASSOCIATIVE:
        _require(d.products_equal(), "from-associative label with distinct products")
        return ClassLabel(KIND_FROM_ASSOCIATIVE, None, None, identity, d)
    witness = step @ base
    canonical = canonical_dialgebra(kind, d.field, k)
    _require(d.rebase(witness) == canonical, "witness does not reach the canonical table")
    return ClassLabel(kind, k, None, witness, canonical)


def _rational_dim1_witness(a, b):
    # One basis vector e with e*e = c e per product; e -> t e works iff
    # scaling both constants by t matches, with t nonzero.
    al, ar = a.left.entry(0, 0, 0), a.right.entry(0, 0, 0)
    bl, br = b.left.entry(0, 0, 0), b.right.entry(0, 0, 0)
    if bl:
        t = al / bl
    elif al:
        return None
    elif br:
        t = ar / br
    elif ar:
        return None
    else:
        t = a.field.one
    if not t:
        return None
    witness = Mat.from_rows(a.field, [[t]])
    return witness if is_isomorphism(a, b, witness) else None


def _rational_dim2_witness(a, b):
    la = classify_dim2(a)
    lb = classify_dim2(b)
    if la.kind != lb.kind or la.sublabel != lb.sublabel:
        return None
    if la.kind == KIND_II and la.k != lb.k:
        return None
    if la.kind == KIND_FROM_ASSOCIATIVE:
        raise UnsupportedOverRationalsError(
            "no canonical form distinguishes associative algebras over the rationals"
        )
    witness = la.witness.inverse() @ lb.witness
    if not is_isomorphism(a, b, witness):
        raise InternalCheckError("composed canonical witnesses failed to verify")
    return witness


def are_isomorphic(a, b, bound=DEFAULT_SEARCH_BOUND):
    """A simultaneous isomorphism matrix for both products, or None.

    Over GF(p) the search is exhaustive over GL(dim, p) subject to the
    candidate budget. Over the rationals only dimensions up to 2 are
    decided, through the canonical forms.
    """
    if a.field is not b.field:
        raise FieldMismatchError("dialgebras live over different fields")
    if a.dim != b.dim:
        return None
    if a.dim > 0 and fingerprint(a) != fingerprint(b):
        return None
    if a.dim == 0:
        return Mat(a.field, (), 0)
    if a.field.kind == PRIME:
        if a.field.p ** (a.dim * a.dim) > bound:
            raise SearchBoundExceededError(
                f"GL({a.dim}, {a.field.p}) scan exceeds the search bound {bound}"
            )
        pa = dialgebra_to_arrays(a)
        pb = dialgebra_to_arrays(b)
        hits = isomorphism_indices(pa, pb, a.field.p)
        if len(hits) == 0:
            return None
        mats, _ = gl_matrices(a.field.p, a.dim)
        return int_matrix_to_mat(a.field, mats[int(hits[0])])
    if a.dim == 1:
        return _rational_dim1_witness(a, b)
    if a.dim == 2:
        return _rational_dim2_witness(a, b)
    raise UnsupportedOverRationalsError(
        "isomorphism over the rationals is only decided up to dimension 2"
    )


def automorphism_group(d, bound=DEFAULT_SEARCH_BOUND):
    """All base changes preserving both products, by exhaustive GL scan."""
    if d.field.kind != PRIME:
        raise UnsupportedOverRationalsError("automorphism scan needs a finite field")
    if d.field.p ** (d.dim * d.dim) > bound:
        raise SearchBoundExceededError(
            f"GL({d.dim}, {d.field.p}) scan exceeds the search bound {bound}"
        )
    arrays = dialgebra_to_arrays(d)
    hits = isomorphism_indices(arrays, arrays, d.field.p)
    mats, _ = gl_matrices(d.field.p, d.dim)
    return [int_matrix_to_mat(d.field, mats[int(g)]) for g in hits]


def enumerate_valid_dialgebras(p, dim=2):
    """Every valid dialgebra over GF(p) in tensor-lexicographic order."""
    _census_guard(p, dim)
    field = Field.prime(p)
    tensors, pairs = valid_pairs(p, dim)
    for li, ri in pairs:
        yield arrays_to_dialgebra(field, tensors[li], tensors[ri])


def _census_guard(p, dim):
    if dim != 2 or p not in (2, 3):
        raise ValueError("census parameters out of supported range (dim 2, p in {2, 3})")


@dataclass(frozen=True)
class CensusClass:
    """One isomorphism class: its least representative, label and orbit size."""

    representative: Dialgebra
    label: ClassLabel
    orbit_size: int


def census(p, dim=2):
    """Partition all valid dialgebras over GF(p) into isomorphism classes.

    Candidates are scanned in lexicographic tensor order and grouped by
    GL-orbit, so each class is represented by its least member and the
    output order is canonical.
    """
    _census_guard(p, dim)
    field = Field.prime(p)
    tensors, pairs = valid_pairs(p, dim)
    seen = set()
    classes = []
    for li, ri in pairs:
        if (li, ri) in seen:
            continue
        orbit = pair_orbit(tensors[li], tensors[ri], p)
        seen |= orbit
        rep = arrays_to_dialgebra(field, tensors[li], tensors[ri])
        classes.append(CensusClass(rep, classify_dim2(rep), len(orbit)))
    return classes
