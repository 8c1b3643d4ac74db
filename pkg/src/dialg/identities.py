"""Law checking: associativity, the dialgebra laws, the Leibniz identity, bar-units.

All identities here are multilinear, so checking them on basis triples is
complete; violations are reported as explicit basis-triple witnesses with
their nonzero residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat, Subspace, Vec, solve

LAW_ASSOC = "assoc"
LAW_ASSOC_LEFT = "assoc-left"
LAW_ASSOC_RIGHT = "assoc-right"
LAW_AX1 = "ax1"
LAW_AX2 = "ax2"
LAW_AX3 = "ax3"
LAW_LEIBNIZ = "leibniz"

DIALGEBRA_LAWS = (LAW_ASSOC_LEFT, LAW_ASSOC_RIGHT, LAW_AX1, LAW_AX2, LAW_AX3)


@dataclass(frozen=True)
class ViolationReport:
    """One failed law instance: the basis triple and the LHS - RHS residual."""

    law: str
    triple: tuple
    residual: Vec


def law_residual(d, law, x, y, z):
    """LHS minus RHS of one dialgebra law on arbitrary elements.

    ax1: (x <| y) <| z = x <| (y |> z)
    ax2: (x |> y) <| z = x |> (y <| z)
    ax3: (x <| y) |> z = x |> (y |> z)
    """
    l, r = d.left, d.right
    if law == LAW_ASSOC_LEFT:
        return l.apply(l.apply(x, y), z) - l.apply(x, l.apply(y, z))
    if law == LAW_ASSOC_RIGHT:
        return r.apply(r.apply(x, y), z) - r.apply(x, r.apply(y, z))
    if law == LAW_AX1:
        return l.apply(l.apply(x, y), z) - l.apply(x, r.apply(y, z))
    if law == LAW_AX2:
        return l.apply(r.apply(x, y), z) - r.apply(x, l.apply(y, z))
    if law == LAW_AX3:
        return r.apply(l.apply(x, y), z) - r.apply(x, r.apply(y, z))
    raise ValueError(f"unknown law {law!r}")


def _units(field, n):
    return tuple(Vec.unit(field, n, i) for i in range(n))


def _product_violations(product, law, residual):
    units = _units(product.field, product.dim)
    reports = []
    n = product.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = residual(units[i], units[j], units[k])
                if res:
                    reports.append(ViolationReport(law, (i, j, k), res))
    return reports


def check_associative(a):
    """All basis triples where (xy)z differs from x(yz); empty iff associative."""
    p = a.product
    return _product_violations(
        p, LAW_ASSOC, lambda x, y, z: p.apply(p.apply(x, y), z) - p.apply(x, p.apply(y, z))
    )


def check_dialgebra(d):
    """Violations of both associativities and the three mixed laws, all triples."""
    units = _units(d.field, d.dim)
    n = d.dim
    reports = []
    for law in DIALGEBRA_LAWS:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    res = law_residual(d, law, units[i], units[j], units[k])
                    if res:
                        reports.append(ViolationReport(law, (i, j, k), res))
    return reports


def is_valid_dialgebra(d):
    """Same laws as check_dialgebra, stopping at the first violation."""
    units = _units(d.field, d.dim)
    n = d.dim
    for law in DIALGEBRA_LAWS:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if law_residual(d, law, units[i], units[j], units[k]):
                        return False
    return True


def check_leibniz(a):
    """Violations of [[x,y],z] = [[x,z],y] + [x,[y,z]] where [,] is a's product."""
    br = a.product.apply
    return _product_violations(
        a.product,
        LAW_LEIBNIZ,
        lambda x, y, z: br(br(x, y), z) - br(br(x, z), y) - br(x, br(y, z)),
    )


@dataclass(frozen=True)
class BarUnitSet:
    """The affine set of bar-units {e : x <| e = x = e |> x for all x}.

    Empty when point is None; otherwise every element is point + v with v in
    direction.
    """

    point: Vec | None
    direction: Subspace | None

    @property
    def is_empty(self):
        return self.point is None

    def contains(self, e):
        if self.is_empty:
            return False
        return self.direction.contains(e - self.point)

    def elements(self):
        """All bar-units; finite fields only."""
        if self.is_empty:
            return
        for v in self.direction.elements():
            yield self.point + v


def bar_units(d):
    """Solve the linear system for bar-units; returns the whole solution set."""
    field, n = d.field, d.dim
    rows = []
    rhs = []
    # x <| e = x on basis x = e_i, coordinate k: sum_j gl[i][j][k] e_j = delta_ik
    for i in range(n):
        for k in range(n):
            rows.append(Vec(field, tuple(d.left.entry(i, j, k) for j in range(n))))
            rhs.append(field.one if i == k else field.zero)
    # e |> x = x on basis x = e_i: sum_j e_j gr[j][i][k] = delta_ik
    for i in range(n):
        for k in range(n):
            rows.append(Vec(field, tuple(d.right.entry(j, i, k) for j in range(n))))
            rhs.append(field.one if i == k else field.zero)
    system = Mat(field, tuple(rows), n)
    result = solve(system, Vec(field, tuple(rhs)))
    if result is None:
        return BarUnitSet(None, None)
    point, direction = result
    return BarUnitSet(point, direction)
