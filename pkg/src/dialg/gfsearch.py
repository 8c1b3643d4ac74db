"""Vectorized modular-arithmetic plumbing for finite-field searches.

Structure tensors over GF(p) are plain integer residue arrays here, which
keeps exhaustive censuses and GL(n, p) scans fast. Everything user-facing
stays in the exact Scalar world; tests cross-check the two routes against
each other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .algebras import BilinearProduct, Dialgebra
from .errors import FieldMismatchError
from .fields import PRIME
from .linalg import Mat, Vec


def _perm_sign(perm):
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def dets_mod(mats, p):
    """Determinants mod p of a batch of n x n integer matrices."""
    n = mats.shape[1]
    total = np.zeros(len(mats), dtype=np.int64)
    for perm in permutations(range(n)):
        term = np.ones(len(mats), dtype=np.int64)
        for i, pi in enumerate(perm):
            term = term * mats[:, i, pi] % p
        total = (total + _perm_sign(perm) * term) % p
    return total % p


def _adjugates_mod(mats, p):
    n = mats.shape[1]
    adj = np.zeros_like(mats)
    if n == 0:
        return adj
    for i in range(n):
        rows = [r for r in range(n) if r != i]
        for j in range(n):
            cols = [c for c in range(n) if c != j]
            minor = mats[:, rows][:, :, cols]
            adj[:, j, i] = ((-1) ** (i + j) * dets_mod(minor, p)) % p
    return adj


@lru_cache(maxsize=None)
def gl_matrices(p, n):
    """All invertible n x n matrices over GF(p) with their inverses.

    Matrices are enumerated in lexicographic order of their flattened
    entries, which makes every search that picks the first hit deterministic.
    """
    if n == 0:
        empty = np.zeros((1, 0, 0), dtype=np.int64)
        return empty, empty.copy()
    count = p ** (n * n)
    flat = np.array(list(product(range(p), repeat=n * n)), dtype=np.int64)
    mats = flat.reshape(count, n, n)
    dets = dets_mod(mats, p)
    keep = dets != 0
    mats = mats[keep]
    dets = dets[keep]
    inv_table = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv_table[v] = pow(v, p - 2, p)
    invs = _adjugates_mod(mats, p) * inv_table[dets][:, None, None] % p
    mats.setflags(write=False)
    invs.setflags(write=False)
    return mats, invs


@lru_cache(maxsize=None)
def all_tensors(p, n):
    """Every n x n x n structure tensor over GF(p), lexicographic order."""
    size = n**3
    arr = np.array(list(product(range(p), repeat=size)), dtype=np.int64).reshape(-1, n, n, n)
    arr.setflags(write=False)
    return arr


def tensor_index(tensor, p):
    """Position of an integer tensor in the all_tensors enumeration."""
    flat = np.asarray(tensor, dtype=np.int64).reshape(-1)
    powers = p ** np.arange(flat.size - 1, -1, -1, dtype=np.int64)
    return int(flat @ powers)


def associative_indices(p, n):
    """Indices of all associative tensors within all_tensors(p, n)."""
    g = all_tensors(p, n)
    lhs = np.einsum("Nijm,Nmkc->Nijkc", g, g)
    rhs = np.einsum("Njkm,Nimc->Nijkc", g, g)
    ok = ((lhs - rhs) % p == 0).reshape(len(g), -1).all(axis=1)
    return np.flatnonzero(ok)


@lru_cache(maxsize=None)
def valid_pairs(p, n=2):
    """All (left, right) tensor index pairs forming a valid dialgebra.

    Both products must be associative and the three mixed laws must hold;
    associativity is filtered per tensor first, then pairs of associative
    tensors are screened, which is the same predicate factored for speed.
    Pairs come out in lexicographic order of (left, right).
    """
    tensors = all_tensors(p, n)
    assoc = associative_indices(p, n)
    cands = tensors[assoc]
    # ax3 right-hand side x |> (y |> z) depends only on the right tensor.
    ax3_rhs = np.einsum("Njkm,Nimc->Nijkc", cands, cands)
    pairs = []
    for pos, li in enumerate(assoc):
        left = cands[pos]
        ax1_lhs = np.einsum("ijm,mkc->ijkc", left, left)
        ax1 = (np.einsum("Njkm,imc->Nijkc", cands, left) - ax1_lhs[None]) % p
        ax2 = (
            np.einsum("Nijm,mkc->Nijkc", cands, left)
            - np.einsum("jkm,Nimc->Nijkc", left, cands)
        ) % p
        ax3 = (np.einsum("ijm,Nmkc->Nijkc", left, cands) - ax3_rhs) % p
        ok = (
            (ax1 == 0).reshape(len(cands), -1).all(axis=1)
            & (ax2 == 0).reshape(len(cands), -1).all(axis=1)
            & (ax3 == 0).reshape(len(cands), -1).all(axis=1)
        )
        for rpos in np.flatnonzero(ok):
            pairs.append((int(li), int(assoc[rpos])))
    return tensors, tuple(pairs)


def transform_tensor_batch(tensor, mats, invs, p):
    """Rewrite a tensor on every basis in mats; returns a (G, n, n, n) array."""
    return (
        np.einsum("gia,gjb,abc,gck->gijk", mats, mats, np.asarray(tensor), invs) % p
    )


def pair_orbit(left, right, p):
    """The GL-orbit of a tensor pair as a set of index pairs."""
    n = left.shape[0]
    mats, invs = gl_matrices(p, n)
    flat_powers = p ** np.arange(n**3 - 1, -1, -1, dtype=np.int64)
    tl = transform_tensor_batch(left, mats, invs, p).reshape(len(mats), -1) @ flat_powers
    tr = transform_tensor_batch(right, mats, invs, p).reshape(len(mats), -1) @ flat_powers
    return set(zip(tl.tolist(), tr.tolist()))


def _iso_mask(ga, gb, mats, p):
    lhs = np.einsum("ijc,gck->gijk", ga, mats) % p
    rhs = np.einsum("gil,gjm,lmk->gijk", mats, mats, gb) % p
    return (lhs == rhs).reshape(len(mats), -1).all(axis=1)


def isomorphism_indices(a_pair, b_pair, p):
    """Indices into gl_matrices of every map sending pair a to pair b.

    A hit T satisfies T(x * y) = T(x) * T(y) for both products, rows of T
    being the images of the basis of a in coordinates of b.
    """
    la, ra = a_pair
    lb, rb = b_pair
    n = la.shape[0]
    mats, _ = gl_matrices(p, n)
    mask = _iso_mask(la, lb, mats, p) & _iso_mask(ra, rb, mats, p)
    return np.flatnonzero(mask)


def dialgebra_to_arrays(d):
    """Residue arrays (left, right) of a prime-field dialgebra."""
    if d.field.kind != PRIME:
        raise FieldMismatchError("residue arrays need a prime field")
    n = d.dim

    def grab(prod):
        return np.array(
            [[[prod.entry(i, j, k).value for k in range(n)] for j in range(n)] for i in range(n)],
            dtype=np.int64,
        ).reshape(n, n, n)

    return grab(d.left), grab(d.right)


def arrays_to_dialgebra(field, left, right):
    return Dialgebra(
        field,
        left.shape[0],
        int_tensor_to_product(field, left),
        int_tensor_to_product(field, right),
    )


def int_tensor_to_product(field, tensor):
    n = tensor.shape[0]
    rows = tuple(
        tuple(Vec.of(field, [int(tensor[i, j, k]) for k in range(n)]) for j in range(n))
        for i in range(n)
    )
    return BilinearProduct(field, n, rows)


def int_matrix_to_mat(field, matrix):
    matrix = np.asarray(matrix)
    nrows, ncols = matrix.shape
    return Mat.from_rows(
        field, [[int(matrix[i, j]) for j in range(ncols)] for i in range(nrows)], ncols
    )
