"""Reference values of the manufactured-solution sources, derived symbolically.

Prints a C++ table consumed by tests/unit/test_mms.cpp. Run with python3 and sympy.
"""
import sympy as sp

x, t = sp.symbols("x t", real=True)
K, g = sp.Integer(1), sp.Rational(7, 5)
M = sp.Matrix([[sp.Rational(1, 5), sp.Rational(1, 20)], [sp.Rational(1, 20), sp.Rational(3, 20)]])
A = sp.Matrix([[0, sp.Rational(3, 2)], [sp.Rational(3, 2), 0]])
N = 2
b = [sp.Rational(1, 2) * sp.Rational(-3, 5) ** i for i in range(N)]


def fields(length):
    s = x / length
    rho = 2 + sp.sin(2 * sp.pi * s) * sp.cos(t) / 2
    u = [b[i] * sp.sin(sp.pi * s) * sp.cos(t) for i in range(N)]
    return rho, u


def eulerian():
    rho, u = fields(1)
    v = sum(u) / N
    out = [sp.diff(rho, t) + sp.diff(rho * v, x)]
    for i in range(N):
        mom = rho * (sp.diff(u[i], t) + v * sp.diff(u[i], x)) + sp.diff(K * rho**g, x)
        mom -= sum(M[i, j] * sp.diff(u[j], x, 2) for j in range(N))
        mom -= sum(A[i, j] * (u[j] - u[i]) for j in range(N))
        out.append(mom / rho)
    return out


def lagrangian():
    rho, u = fields(2)
    v = sum(u) / N
    out = [sp.diff(rho, t) + rho**2 * sp.diff(v, x)]
    for i in range(N):
        mom = sp.diff(u[i], t) + sp.diff(K * rho**g, x)
        mom -= sum(M[i, j] * sp.diff(rho * sp.diff(u[j], x), x) for j in range(N))
        mom -= sum(A[i, j] * (u[j] - u[i]) for j in range(N)) / rho
        out.append(mom)
    return out


for name, exprs, points in [
    ("eulerian", eulerian(), [(0.1, 0.0), (0.37, 0.2), (0.8, 0.45)]),
    ("lagrangian", lagrangian(), [(0.2, 0.0), (0.74, 0.2), (1.6, 0.45)]),
]:
    for xv, tv in points:
        vals = [sp.N(e.subs({x: xv, t: tv}), 20) for e in exprs]
        print("    {Frame::%s, %s, %s, {%s}}," % (name.capitalize(), xv, tv, ", ".join("%.17g" % float(v) for v in vals)))
