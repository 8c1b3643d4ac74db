"""Annihilators, ideals, zero-cubed decomposition and perfection predicates.

The simple/semiprime/prime predicates are decided exactly over finite
fields by enumerating every subspace and filtering for ideals; over the
rationals the subspace lattice is infinite, so those predicates report
`None` (unsupported) rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import ProductTag
from .constructions import ZeroCubedTriple
from .errors import (
    FieldMismatchError,
    InternalCheckError,
    NotZeroCubedError,
    SearchBoundExceededError,
    UnsupportedOverRationalsError,
)
from .fields import PRIME
from .identities import check_associative
from .linalg import Mat, Subspace, Vec, all_subspaces, kernel

DEFAULT_SEARCH_BOUND = 10**6


@dataclass(frozen=True)
class AnnihilatorProfile:
    """The four one-sided annihilators and their distinguished intersection.

    ann is rann_left intersected with lann_right; for a valid dialgebra it
    is a two-sided ideal for both products.
    """

    rann_left: Subspace
    lann_left: Subspace
    rann_right: Subspace
    lann_right: Subspace
    ann: Subspace


def _stacked_right_mult(product):
    # {x : e_i * x = 0 for all i}: rows indexed by (i, k), columns by j.
    field, n = product.field, product.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append(Vec(field, tuple(product.entry(i, j, k) for j in range(n))))
    return Mat(field, tuple(rows), n)


def _stacked_left_mult(product):
    # {x : x * e_j = 0 for all j}: rows indexed by (j, k), columns by i.
    field, n = product.field, product.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(Vec(field, tuple(product.entry(i, j, k) for i in range(n))))
    return Mat(field, tuple(rows), n)


def annihilators(d):
    """All four annihilators of a dialgebra, plus their intersection."""
    rann_left = kernel(_stacked_right_mult(d.left))
    lann_left = kernel(_stacked_left_mult(d.left))
    rann_right = kernel(_stacked_right_mult(d.right))
    lann_right = kernel(_stacked_left_mult(d.right))
    return AnnihilatorProfile(
        rann_left, lann_left, rann_right, lann_right, rann_left.intersect(lann_right)
    )


def algebra_annihilator(a):
    """{x : x A = A x = 0} for a single-product algebra."""
    stacked = Mat(
        a.field,
        _stacked_right_mult(a.product).rows + _stacked_left_mult(a.product).rows,
        a.dim,
    )
    return kernel(stacked)


def is_ideal(d, u):
    """True iff u is closed under multiplication by A on both sides, both products."""
    if u.field is not d.field or u.ambient_dim != d.dim:
        raise FieldMismatchError("subspace does not live in the dialgebra's space")
    units = tuple(Vec.unit(d.field, d.dim, i) for i in range(d.dim))
    for b in u.basis.rows:
        for e in units:
            for prod in (d.left, d.right):
                if not (u.contains(prod.apply(b, e)) and u.contains(prod.apply(e, b))):
                    return False
    return True


def generated_ideal(d, seed):
    """The smallest two-sided ideal (for both products) containing seed."""
    if seed.field is not d.field or seed.ambient_dim != d.dim:
        raise FieldMismatchError("subspace does not live in the dialgebra's space")
    units = tuple(Vec.unit(d.field, d.dim, i) for i in range(d.dim))
    current = seed
    while True:
        vectors = list(current.basis.rows)
        for b in current.basis.rows:
            for e in units:
                for prod in (d.left, d.right):
                    vectors.append(prod.apply(b, e))
                    vectors.append(prod.apply(e, b))
        grown = Subspace.from_vectors(d.field, d.dim, vectors)
        if grown.dim == current.dim:
            return grown
        current = grown


def is_algebra_ideal(a, u):
    """Two-sided ideal test for a single product."""
    units = tuple(Vec.unit(a.field, a.dim, i) for i in range(a.dim))
    for b in u.basis.rows:
        for e in units:
            if not (u.contains(a.multiply(b, e)) and u.contains(a.multiply(e, b))):
                return False
    return True


def _enumeration_guard(field, dim, bound):
    if field.kind != PRIME:
        raise UnsupportedOverRationalsError(
            "exhaustive ideal enumeration needs a finite field"
        )
    if field.p**dim > bound:
        raise SearchBoundExceededError(
            f"{field.p}^{dim} exceeds the search bound {bound}"
        )


def algebra_ideals(a, bound=DEFAULT_SEARCH_BOUND):
    """Every two-sided ideal of a single-product algebra over GF(p)."""
    _enumeration_guard(a.field, a.dim, bound)
    return [u for u in all_subspaces(a.field, a.dim) if is_algebra_ideal(a, u)]


def _square_is_zero(a, u):
    return a.product.subspace_product(u, u).dim == 0


def algebra_simple(a, bound=DEFAULT_SEARCH_BOUND):
    """No proper nonzero ideal and A*A != 0."""
    if a.square_space().dim == 0:
        return False
    for u in algebra_ideals(a, bound):
        if 0 < u.dim < a.dim:
            return False
    return True


def algebra_semiprime(a, bound=DEFAULT_SEARCH_BOUND):
    """No nonzero ideal I with I*I = 0."""
    for u in algebra_ideals(a, bound):
        if u.dim > 0 and _square_is_zero(a, u):
            return False
    return True


def algebra_prime(a, bound=DEFAULT_SEARCH_BOUND):
    """No nonzero ideals I, J with I*J = 0."""
    ideals = [u for u in algebra_ideals(a, bound) if u.dim > 0]
    for u in ideals:
        for v in ideals:
            if a.product.subspace_product(u, v).dim == 0:
                return False
    return True


@dataclass(frozen=True)
class StructureFlags:
    """Perfection predicates per product; None means unsupported over the rationals."""

    products_equal: bool
    simple_left: bool | None
    simple_right: bool | None
    semiprime_left: bool | None
    semiprime_right: bool | None
    prime_left: bool | None
    prime_right: bool | None


def structure_flags(d, bound=DEFAULT_SEARCH_BOUND):
    equal = d.products_equal()
    if d.field.kind != PRIME:
        return StructureFlags(equal, None, None, None, None, None, None)
    _enumeration_guard(d.field, d.dim, bound)
    la = d.as_single(ProductTag.LEFT)
    ra = d.as_single(ProductTag.RIGHT)
    left_ideals = algebra_ideals(la, bound)
    right_ideals = algebra_ideals(ra, bound)

    def flags_for(a, ideals):
        nonzero = [u for u in ideals if u.dim > 0]
        simple = a.square_space().dim > 0 and not any(0 < u.dim < a.dim for u in ideals)
        semiprime = not any(_square_is_zero(a, u) for u in nonzero)
        prime = not any(
            a.product.subspace_product(u, v).dim == 0 for u in nonzero for v in nonzero
        )
        return simple, semiprime, prime

    ls, lsp, lp = flags_for(la, left_ideals)
    rs, rsp, rp = flags_for(ra, right_ideals)
    return StructureFlags(equal, ls, rs, lsp, rsp, lp, rp)


def is_zero_cubed(a):
    """Associative with A(AA) = (AA)A = 0."""
    if check_associative(a):
        return False
    full = Subspace.full(a.field, a.dim)
    square = a.product.subspace_product(full, full)
    return (
        a.product.subspace_product(full, square).dim == 0
        and a.product.subspace_product(square, full).dim == 0
    )


def zero_cubed_decompose(a):
    """Split a zero-cubed algebra as annihilator block plus complement pairing.

    Returns (triple, witness) where the witness rows are the new basis in old
    coordinates (annihilator basis first); rewriting a on that basis gives
    exactly zero_cubed_build(triple).
    """
    if not is_zero_cubed(a):
        raise NotZeroCubedError("input is not an associative zero-cubed algebra")
    z = algebra_annihilator(a)
    keep = [c for c in range(a.dim) if c not in z.pivots]
    units = tuple(Vec.unit(a.field, a.dim, i) for i in range(a.dim))
    f_rows = []
    for pa in keep:
        row = []
        for pb in keep:
            v = a.multiply(units[pa], units[pb])
            if not z.contains(v):
                raise InternalCheckError("complement product left the annihilator")
            row.append(Vec(a.field, tuple(v.coords[p] for p in z.pivots)))
        f_rows.append(tuple(row))
    triple = ZeroCubedTriple(a.field, z.dim, len(keep), tuple(f_rows))
    witness_rows = list(z.basis.rows) + [units[c] for c in keep]
    witness = Mat(a.field, tuple(witness_rows), a.dim)
    return triple, witness


def triples_equivalent(t1, t2, bound=DEFAULT_SEARCH_BOUND):
    """Search for block isomorphisms (alpha, beta) matching the two pairings.

    Returns invertible matrices with t2.f(x @ beta, y @ beta) = t1.f(x, y) @ alpha
    on all basis pairs, or None. Exhaustive, so finite fields only.
    """
    if t1.field is not t2.field:
        raise FieldMismatchError("triples live over different fields")
    field = t1.field
    if field.kind != PRIME:
        raise UnsupportedOverRationalsError("triple equivalence search needs a finite field")
    if t1.z_dim != t2.z_dim or t1.x_dim != t2.x_dim:
        return None
    z, x = t1.z_dim, t1.x_dim
    if field.p ** (z * z + x * x) > bound:
        raise SearchBoundExceededError("triple equivalence search exceeds the bound")
    from .gfsearch import gl_matrices, int_matrix_to_mat

    alphas, _ = gl_matrices(field.p, z)
    betas, _ = gl_matrices(field.p, x)
    x_units = tuple(Vec.unit(field, x, i) for i in range(x))
    for bi in range(len(betas)):
        beta = int_matrix_to_mat(field, betas[bi])
        images = tuple(x_units[a] @ beta for a in range(x))
        pairings = tuple(
            tuple(t2.apply(images[a], images[b]) for b in range(x)) for a in range(x)
        )
        for ai in range(len(alphas)):
            alpha = int_matrix_to_mat(field, alphas[ai])
            if all(
                t1.f[a][b] @ alpha == pairings[a][b]
                for a in range(x)
                for b in range(x)
            ):
                return alpha, beta
    return None
