"""Smoke test for the quadrics_py extension module.

Build and install first, e.g. from crates/py:  maturin build && pip install
target/wheels/*.whl, then run:  python python/smoke_test.py
"""

from fractions import Fraction

import quadrics_py as q


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL {what}")
    print(f"ok   {what}")


def main():
    x = q.Poly("x + 1/2*y")
    y = q.Poly("x - y")
    check(str(x * y) == str(q.Poly("x^2 - 1/2*x*y - 1/2*y^2")), "poly product")
    check((x * y).evaluate({"x": 2, "y": Fraction(1, 3)}) == Fraction(13, 6) * Fraction(5, 3), "poly evaluate")
    check(q.Poly(str(x ** 3)) == x ** 3, "print/parse round trip")

    form = q.QuadForm(["a", "b"], [[0, Fraction(1, 2)], [Fraction(1, 2), 0]])
    check(str(form) == "a*b", "quadform from gram")
    t, d = form.diagonalize()
    check(d == [1, Fraction(-1, 4)], "congruence diagonalization")

    net = q.net_genus2(2, 2)
    check([str(f) for f in net["normalized"]] == ["y1^2", "y2^2", "y3^2"], "genus-2 normal form")
    check(str(net["normalized_discriminant"]) == "z1*z2*z3", "normalized discriminant")
    check(net["corrections"] == [-1, -1], "correction scalars")
    check(str(q.net_nilpotent_discriminant()) == "-1/4*z1*z3^2", "nilpotent discriminant")

    vars6 = list("abcdef")
    ident = [[int(i == j) for j in range(6)] for i in range(6)]
    diag = [[(i + 1) * int(i == j) for j in range(6)] for i in range(6)]
    sextic = q.pencil_sextic(q.QuadForm(vars6, ident), q.QuadForm(vars6, diag))
    roots = sorted(v for kind, v, m in q.branch_points(sextic) if kind == "exact")
    check(roots == [(Fraction(-k), 1) for k in range(6, 0, -1)], "diagonal pencil roots")

    check(len(q.atiyah_triples([(1, 2, 1), (0, 1, -1), (3, -1, 1)])) == 4, "Atiyah orbit")

    l1 = q.plucker([1, 0, 0, 0], [0, 1, 0, 0])
    l2 = q.plucker([1, 0, 0, 0], [0, 0, 1, 0])
    l3 = q.plucker([0, 0, 1, 0], [0, 0, 0, 1])
    check(q.lines_incident(l1, l2) and not q.lines_incident(l1, l3), "line incidence")
    check(len(q.alpha_plane([1, 2, 3, 4])) == 3, "alpha plane")

    tet = q.Tetrad([1, 2, 3], [1, -1, 2])
    check((tet.discriminant() - tet.component_product()).is_zero(), "syzygetic components")
    check(tet.fit_triple() == (Fraction(-1, 64), Fraction(4)), "triple discriminant constants")
    check(tet.tangency_check(), "tangency")
    check(q.det_identity(seed=7, count=3) is None, "determinant identity")

    check(q.count_theta_chars(3) == (64, 36, 28), "theta characteristics")
    check(q.count_isotropic_planes(3) == 315, "isotropic planes")

    try:
        q.Poly("x +* y")
    except ValueError as e:
        check("byte" in str(e), "parse error raises ValueError")
    else:
        check(False, "parse error raises ValueError")

    reports = q.run_selftest(1)
    check(len(reports) == 12 and all(r[2] for r in reports), "selftest")


if __name__ == "__main__":
    main()
