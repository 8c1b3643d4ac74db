"""Shared builders for the test suite: known algebras and seeded random data."""

import random

from dialg import (
    KIND_I,
    KIND_II,
    KIND_III,
    KIND_IV,
    Algebra,
    BilinearProduct,
    Dialgebra,
    Field,
    Mat,
    Subspace,
    Vec,
    ZeroCubedTriple,
    canonical_dialgebra,
    from_associative,
    from_differential,
    opposite,
    zero_cubed_build,
)

QQ = Field.rationals()
GF2 = Field.prime(2)
GF3 = Field.prime(3)
GF5 = Field.prime(5)
GF7 = Field.prime(7)


def square_algebra(field):
    """Basis (r, s) with s*s = r, everything else zero."""
    return Algebra.from_entries(field, 2, {(1, 1, 0): 1})


def idempotent_line_algebra(field):
    """Basis (r, s) with s*s = s, everything else zero."""
    return Algebra.from_entries(field, 2, {(1, 1, 1): 1})


def dual_numbers_algebra(field):
    """F[x]/(x^2) on basis (1, x)."""
    return Algebra.from_entries(
        field, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}
    )


def split_pair_algebra(field):
    """F x F with coordinatewise product."""
    return Algebra.from_entries(field, 2, {(0, 0, 0): 1, (1, 1, 1): 1})


def upper_triangular_algebra(field):
    """Upper triangular 2x2 matrices on basis (E11, E12, E22)."""
    return Algebra.from_entries(
        field,
        3,
        {(0, 0, 0): 1, (0, 1, 1): 1, (1, 2, 1): 1, (2, 2, 2): 1},
        basis_names=("E11", "E12", "E22"),
    )


def inner_derivation_by_e12(field):
    """d(x) = E12 x - x E12 on the upper triangular algebra; squares to zero."""
    return Mat.from_rows(field, [[0, -1, 0], [0, 0, 0], [0, 1, 0]])


def associative_zoo(field):
    algebras = [
        Algebra.from_entries(field, 2, {}),
        square_algebra(field),
        idempotent_line_algebra(field),
        dual_numbers_algebra(field),
        split_pair_algebra(field),
        upper_triangular_algebra(field),
    ]
    return algebras


def random_scalar(field, rng, lo=-4, hi=4):
    if field.is_finite:
        return field.scalar(rng.randrange(field.p))
    return field.scalar(rng.randint(lo, hi))


def random_nonzero_scalar(field, rng, lo=-4, hi=4):
    while True:
        s = random_scalar(field, rng, lo, hi)
        if s:
            return s


def random_vec(field, n, rng, lo=-4, hi=4):
    return Vec(field, tuple(random_scalar(field, rng, lo, hi) for _ in range(n)))


def random_invertible(field, n, rng, lo=-3, hi=3):
    while True:
        m = Mat.from_rows(
            field,
            [[random_scalar(field, rng, lo, hi) for _ in range(n)] for _ in range(n)],
            n,
        )
        try:
            m.inverse()
            return m
        except Exception:
            continue


def random_subspace(field, n, rng):
    count = rng.randrange(n + 1)
    return Subspace.from_vectors(field, n, [random_vec(field, n, rng) for _ in range(count)])


def random_valid_dialgebras(count, seed=20240811):
    """A deterministic stream of valid dialgebras over mixed fields.

    Every item is valid by construction: canonical forms and associative
    algebras conjugated by random invertible matrices, one-sided zero-cubed
    tables, differential dialgebras and opposites of all of these.
    """
    rng = random.Random(seed)
    fields = [QQ, GF2, GF3, GF5]
    out = []
    while len(out) < count:
        field = fields[rng.randrange(len(fields))]
        pick = rng.randrange(6)
        if pick == 0:
            kind = (KIND_I, KIND_III, KIND_IV)[rng.randrange(3)]
            d = canonical_dialgebra(kind, field)
        elif pick == 1:
            d = canonical_dialgebra(KIND_II, field, random_nonzero_scalar(field, rng))
        elif pick == 2:
            zoo = associative_zoo(field)
            d = from_associative(zoo[rng.randrange(len(zoo))])
        elif pick == 3:
            f = ZeroCubedTriple.from_entries(
                field, 1, 1, {(0, 0, 0): random_scalar(field, rng)}
            )
            single = zero_cubed_build(f)
            d = Dialgebra(field, 2, BilinearProduct.zero(field, 2), single.product)
        elif pick == 4:
            scale = random_scalar(field, rng)
            alg = upper_triangular_algebra(field)
            deriv = Mat.from_rows(
                field,
                [
                    [v * scale for v in row.coords]
                    for row in inner_derivation_by_e12(field).rows
                ],
            )
            d = from_differential(alg, deriv)
        else:
            d = from_associative(associative_zoo(field)[rng.randrange(3)])
        d = d.rebase(random_invertible(field, d.dim, rng))
        if rng.randrange(2):
            d = opposite(d)
        out.append(d)
    return out
