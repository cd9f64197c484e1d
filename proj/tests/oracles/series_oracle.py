"""Independent oracle for the expansion coefficients.

Expands exp(p * sum_{k>=1} (-1)^(k+1) B_k(t)/k * u^k) as a power series in
u = 1/x with sympy's generic series machinery (no recurrences shared with
the C++ code), and evaluates digamma-based quantities with mpmath.
Values printed here are frozen into the C++ tests.
"""
import sympy as sp
import mpmath as mp

p, t, u = sp.symbols("p t u")


def g_coeffs(N, pv=p, tv=t):
    inner = sum((-1) ** (k + 1) * sp.bernoulli(k, tv) / k * u**k for k in range(1, N + 1))
    ser = sp.series(sp.exp(pv * inner), u, 0, N + 1).removeO()
    return [sp.expand(ser.coeff(u, n)) for n in range(N + 1)]


if __name__ == "__main__":
    print("B12 =", sp.bernoulli(12))
    S = g_coeffs(6, 1, t)
    for n, c in enumerate(S):
        print(f"S_{n} =", sp.factor(c), "| at 0:", c.subs(t, 0), "| at 1/2:", c.subs(t, sp.Rational(1, 2)))
    print("S_7(1/2) =", g_coeffs(7, 1, sp.Rational(1, 2))[7])
    G = g_coeffs(5)
    for n, c in enumerate(G):
        print(f"G_{n} =", sp.factor(c))
        print("   expanded:", c)
    for pv in (2, 3, 4):
        print(f"p={pv} t=0:", g_coeffs(7, pv, 0))
        print(f"p={pv} symbolic t:", [sp.factor(c) for c in g_coeffs(6, pv, t)])
    print("t=1:", [sp.factor(c) for c in g_coeffs(5, p, 1)])
    print("t=1/2:", [sp.factor(c) for c in g_coeffs(6, p, sp.Rational(1, 2))])
    mp.mp.prec = 300
    print("gamma =", +mp.euler)
    print("H_100 =", mp.nstr(mp.harmonic(100), 20))
    x = mp.mpf(10)
    c = [sp.Rational(v) for v in g_coeffs(5, 1, 1)]
    e4 = x * sum(mp.mpf(sp.Rational(ci).p) / sp.Rational(ci).q * x**-n for n, ci in enumerate(c[:5]))
    print("eval p=1 t=1 N=4 x=10:", e4, " e^psi(11) =", mp.e ** mp.digamma(11), "diff", e4 - mp.e ** mp.digamma(11))
    for N in (3, 4):
        for xv in (16, 32, 64, 128):
            X = mp.mpf(xv)
            ev = X * sum(mp.mpf(sp.Rational(ci).p) / sp.Rational(ci).q * X**-n for n, ci in enumerate(c[: N + 1]))
            print(f"N={N} x={xv} abs err", mp.nstr(abs(ev - mp.e ** mp.digamma(X + 1)), 8))
