"""Reference values frozen into the C++ tests.

Every value here comes from a route that does not share code or algorithm
with the library: closed forms, Beta-function identities, or mpmath
tanh-sinh quadrature at 30 digits.  Run with `python3 compute_oracles.py`.
"""
import mpmath as mp

mp.mp.dps = 30


def show(label, value):
    if isinstance(value, mp.mpc):
        print(f"{label:48s} {mp.nstr(value.real, 17)} {mp.nstr(value.imag, 17)}")
    else:
        print(f"{label:48s} {mp.nstr(value, 17)}")


def symbol_lower(alpha, R, th):
    return ((1 - R * R) - 2j * R * mp.sin(th)) ** alpha


def fourier_coeff(alpha, R, n):
    # (1/2pi) * integral over the circle, split at the branch points and
    # at the zeros of the oscillating factor.
    pieces = max(8, 4 * abs(n))
    pts = [-mp.pi + 2 * mp.pi * k / pieces for k in range(pieces + 1)]
    f = lambda th: symbol_lower(alpha, R, th) * mp.exp(-1j * n * th)
    return mp.quad(f, pts) / (2 * mp.pi)


def power_rule_d(alpha, beta, x):
    return 2 ** alpha * mp.gamma(beta + 1) / mp.gamma(beta + 1 - alpha) * x ** (beta - alpha)


def power_rule_j(alpha, beta, x):
    return 2 ** (-alpha) * mp.gamma(beta + 1) / mp.gamma(beta + 1 + alpha) * x ** (beta + alpha)


def marchaud_quad(f, alpha, lo, x):
    g = lambda t: (x - t) ** (-alpha - 1) * (f(t) - f(x))
    return 2 ** alpha / mp.gamma(-alpha) * (
        mp.quad(g, [lo, x]) - f(x) * (x - lo) ** (-alpha) / alpha)


def rl_quad(f, alpha, lo, x):
    return mp.quad(lambda t: f(t) * (x - t) ** (alpha - 1), [lo, x]) / (2 ** alpha * mp.gamma(alpha))


def green(p, x, y):
    m = max(x, y)
    integ = mp.quad(lambda t: (t - x) ** (p - 1) * (t - y) ** (p - 1) / t ** (2 * p), [m, 1])
    return x ** p * y ** p / mp.factorial(p - 1) ** 2 * integ


def main():
    print("# specialfn")
    show("gamma(-0.5)", mp.gamma(-0.5))
    show("gamma(-1.5)", mp.gamma(-1.5))
    a = mp.mpf("0.5")
    u = 10000
    show("binom(0.5,1e4)*gamma(0.5)*u^0.5", mp.gamma(u + a) / (mp.gamma(a) * mp.factorial(u)) * mp.gamma(a) * mp.sqrt(u))

    print("# symbol")
    show("eval(0.5,0.9,lower,1.0)", symbol_lower(0.5, 0.9, 1.0))
    show("delta(0.5,0.9,3)", fourier_coeff(0.5, 0.9, 3))
    show("delta(0.5,0.9,-3)", fourier_coeff(0.5, 0.9, -3))
    for al in ["0.3", "0.5", "0.7", "1.5"]:
        show(f"delta({al},1,64)", fourier_coeff(mp.mpf(al), 1, 64))
        show(f"delta({al},1,-7)", fourier_coeff(mp.mpf(al), 1, -7))
    show("delta(0.5,1,0)", fourier_coeff(0.5, 1, 0))
    for n in [100, -100, -101]:
        show(f"asym(0.5,{n})", (-1) ** (n if n < 0 else 0) * abs(n) ** (-1.5) * mp.sqrt(2) / mp.gamma(-0.5))
    show("asym(1.5,100)", mp.mpf(100) ** (-2.5) * 2 ** 1.5 / mp.gamma(-1.5))

    print("# toeplitz")
    show("t1_entry(0.5,1,100)", mp.mpf(100) ** (-0.5) / mp.gamma(0.5) * 2 ** (-0.5))

    print("# wienerhopf")
    show("g2 coeff -2 (0.5,0.9)", mp.binomial(0.5, 2) * 0.81)

    print("# fracderiv")
    show("D t, 0.5, x=0.25", power_rule_d(a, 1, mp.mpf("0.25")))
    show("D t^2, 0.5, x=0.5", power_rule_d(a, 2, mp.mpf("0.5")))
    show("D bridge, 0.5, x=0.5", power_rule_d(a, 1, 0.5) - power_rule_d(a, 2, 0.5))
    show("D bridge by quad, 0.5, x=0.5", marchaud_quad(lambda t: t * (1 - t), a, 0, mp.mpf("0.5")))
    show("D sinpi by quad, 0.5, x=0.3", marchaud_quad(lambda t: mp.sin(mp.pi * t), a, 0, mp.mpf("0.3")))
    show("D_upper sinpi by quad, 0.5, x=0.3",
         2 ** a / mp.gamma(-a) * (mp.quad(lambda t: (t - 0.3) ** (-a - 1) * (mp.sin(mp.pi * t) - mp.sin(0.3 * mp.pi)), [0.3, 1])
                                  - mp.sin(0.3 * mp.pi) * mp.mpf(0.7) ** (-a) / a))
    show("GL limit t, 0.5, x=0.25", mp.mpf("0.25") ** 0.5 / mp.gamma(1.5))
    x = mp.mpf("0.5")
    comp = 4 * (2 * power_rule_d(a, 0, x) - 12 * power_rule_d(a, 1, x) + 12 * power_rule_d(a, 2, x))
    show("D^2.5 t^2(1-t)^2 at 0.5", comp)
    show("endpoint-one t^-a-1 weight, bridge", 2 ** a / mp.gamma(-a) * mp.beta(1 - a, 2))
    show("endpoint-one (1-t)^-a-1 weight, t^2", 2 ** a / mp.gamma(-a) * mp.quad(lambda t: (1 - t) ** (-a - 1) * t * t * (1 - t) , [0, 1]))
    show("endpoint-one t^-a-1 weight, t^2(1-t)", 2 ** a / mp.gamma(-a) * mp.quad(lambda t: t ** (-a - 1) * t * t * (1 - t), [0, 1]))

    print("# fracint")
    show("J t, 0.5, x=1", power_rule_j(a, 1, 1))
    show("J 1, 0.5, x=0.25", power_rule_j(a, 0, mp.mpf("0.25")))
    show("J t, 0.5, x=0.5", power_rule_j(a, 1, x))
    show("J sinpi by quad, 0.5, x=0.6", rl_quad(lambda t: mp.sin(mp.pi * t), a, 0, mp.mpf("0.6")))
    show("G1(0.25,0.5)", green(1, 0.25, 0.5))
    show("G2(0.3,0.7)", green(2, mp.mpf("0.3"), mp.mpf("0.7")))
    show("G3(0.2,0.6)", green(3, mp.mpf("0.2"), mp.mpf("0.6")))
    c = 1 / (mp.sqrt(2) * mp.gamma(0.5)) * 2
    jt1 = -mp.mpf(1) / 4 * c * mp.mpf(4) / 15 * (x - x ** 2.5)
    show("Jtilde 2.5 psi=1 at 0.5", jt1)
    jq = -mp.mpf(1) / 4 * mp.quad(lambda s: green(1, x, s) * c * mp.sqrt(s), [0, x, 1])
    show("Jtilde 2.5 psi=1 at 0.5 (quad)", jq)
    ct = power_rule_j(a, 1, 1)
    show("Jtilde 2.5 psi=t at 0.3", -mp.mpf(1) / 4 * ct * (mp.mpf("0.3") - mp.mpf("0.3") ** 3.5) / (2.5 * 3.5))
    show("Jtilde 4.5 psi=1 at 0.5 (quad)",
         mp.mpf(1) / 16 * mp.quad(lambda s: green(2, x, s) * c * mp.sqrt(s), [0, x, 1]))
    lit = 2 ** mp.mpf(2.5) / mp.gamma(2.5) * 2 * mp.mpf(4) / 15 * (x - x ** 2.5)
    show("uncalibrated 2.5 psi=1 at 0.5", lit)
    show("J2(1) at 0.5", -mp.mpf(1) / 4 * x * (1 - x) / 2)

    print("# interval")
    show("d_ab u-a on [2,4] at 3", 2 * power_rule_d(a, 1, mp.mpf("0.5")))
    show("d_ab const 1 on [2,4] at 3", -(mp.mpf(2) ** 0.5) * 2 ** a / mp.gamma(-a) * 1 / a)
    show("j_ab const 1 on [2,4] at 3", mp.mpf(2) ** (-0.5) / (2 ** a * mp.gamma(a)) * 2)
    tri = lambda u: max(0, 1 - abs(u))
    bump = lambda u: max(0, 1 - u * u) ** 2
    show("d_inf tri at 0.5", 2 ** a / mp.gamma(-a) * (mp.quad(lambda t: (0.5 - t) ** (-a - 1) * (tri(t) - tri(0.5)), [-1, 0, 0.5]) - tri(0.5) * mp.mpf(1.5) ** (-a) / a))
    for xv in ["-0.5", "0", "0.5"]:
        xv = mp.mpf(xv)
        show(f"j_inf bump at {xv}", rl_quad(bump, a, -1, xv))
        show(f"d_inf bump at {xv}", marchaud_quad(bump, a, -1, xv))
    show("j_inf u^1 cutoff at 0.7 (Weyl/2^a)", 2 ** (-a) * mp.gamma(2) / mp.gamma(2 + a) * mp.mpf(0.7) ** 1.5)


if __name__ == "__main__":
    main()
