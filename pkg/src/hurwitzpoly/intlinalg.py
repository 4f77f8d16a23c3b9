"""Exact integer linear algebra for lattice computations.

Everything here works on small dense integer matrices (lists of lists).
The one workhorse is row Hermite reduction carrying its unimodular
transform; from it come saturated integer kernels, and from those the
degree-filtered member lattices of the ideal machinery.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_with_transform(A: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite form: returns (H, U) with U*A = H, U unimodular.

    H is in row-echelon shape: positive pivots, entries above a pivot
    reduced into [0, pivot), zero rows last.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if H[i][c] != 0), None)
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, s, t = xgcd(a, b)
            u, v = -(b // g), a // g
            H[r], H[i] = (
                [s * x + t * y for x, y in zip(H[r], H[i])],
                [u * x + v * y for x, y in zip(H[r], H[i])],
            )
            U[r], U[i] = (
                [s * x + t * y for x, y in zip(U[r], U[i])],
                [u * x + v * y for x, y in zip(U[r], U[i])],
            )
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return H, U


def left_kernel_basis(A: list[list[int]]) -> list[list[int]]:
    """Basis of the full integer lattice {u : u*A = 0}.

    The rows of the Hermite transform sitting over zero rows of H form a
    saturated basis: any rational kernel vector with integer entries is
    an integer combination of them.
    """
    H, U = hnf_with_transform(A)
    out = []
    for h, u in zip(H, U):
        if all(x == 0 for x in h):
            out.append(u)
    return out


def transpose(A: list[list[int]]) -> list[list[int]]:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def integer_column_kernel(C: list[list[int]], n: int) -> list[list[int]]:
    """Basis of {x in Z^n : C*x = 0} for an integer matrix C with n columns."""
    if not C:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return left_kernel_basis(transpose(C))


def gcd_of_coordinate(basis: list[list[int]], j: int) -> int:
    """Non-negative generator of the coordinate-j projection of the lattice."""
    g = 0
    for row in basis:
        a = row[j]
        g, _, _ = xgcd(g, a)
    return g


def combo_with_coordinate(basis: list[list[int]], j: int, target: int) -> list[int] | None:
    """A lattice vector whose j-th coordinate equals target, or None.

    Folds the basis rows through extended gcds, tracking the integer
    combination alongside the running gcd of the j-th coordinates.
    """
    if not basis:
        return None
    g = 0
    vec = [0] * len(basis[0])
    for row in basis:
        a = row[j]
        if a == 0:
            continue
        g2, s, t = xgcd(g, a)
        vec = [s * x + t * y for x, y in zip(vec, row)]
        g = g2
    if g == 0:
        return vec if target == 0 else None
    if target % g != 0:
        return None
    k = target // g
    return [k * x for x in vec]
