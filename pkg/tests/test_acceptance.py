"""Acceptance gate: one check per criterion, each at its stated tolerance.

Run with pytest (a summary block lists every criterion) or directly with
``python3 tests/test_acceptance.py`` for one pass/fail line per criterion.
"""

import cmath
import json
import math
import random
import subprocess
import sys
import warnings

import pytest
from scipy import integrate

from hypersum import contfrac as cf
from hypersum import elliptic_core as ec
from hypersum import identities as I
from hypersum import jacobi_fourier as jf

RESULTS = {}

# independent high-precision values (mpmath, 30 digits), frozen
CD1_IKPRIME_R1 = 30.2305068210427283845
KK_OVER_PI_R1 = 0.41731342083703659314
TWO_K_OVER_PI_R1 = 1.18034059901609622605


def _residual_ok(rep, tol):
    return rep.abs_residual < tol or rep.rel_residual < tol


def _worst(reports):
    return max((min(rep.abs_residual, rep.rel_residual) for rep in reports), default=0.0)


def _check(reports, tol):
    bad = [f"{rep.id}{rep.params}" for rep in reports if not _residual_ok(rep, tol)]
    return bad


def criterion_1():
    rep = I.verify("eq7", {})
    ok = rep.abs_residual < 1e-12 and rep.terms_used <= 20
    return ok, f"eq7 abs residual {rep.abs_residual:.2e}, {rep.terms_used} terms"


def criterion_2():
    rep = I.verify("eq2", {"nu": 1})
    ok = rep.abs_residual < 1e-12 and abs(rep.rhs.real - 1 / 504) < 1e-17
    return ok, f"sum n^5/(e^(2 pi n)-1) = {rep.lhs.real:.15g}, abs residual {rep.abs_residual:.2e}"


def criterion_3():
    rep = I.verify("eq3", {"nu": 0})
    ok = rep.abs_residual < 1e-12 and abs(rep.rhs.real - 1 / 24) < 1e-17
    return ok, f"odd sum = {rep.lhs.real:.15g} vs 1/24, abs residual {rep.abs_residual:.2e}"


def criterion_4():
    reps = [I.verify("thm1", {"nu": nu, "a": math.pi}) for nu in (1, 2)]
    bad = _check(reps, 1e-10)
    return not bad, f"a=b=pi, nu=1,2: worst residual {_worst(reps):.2e}" + (f"; failing {bad}" if bad else "")


def criterion_5():
    rep = I.verify("eq17", {})
    quad, _ = integrate.quad(lambda s: math.exp(-s ** 4), 0, 6, epsabs=1e-13, limit=200)
    gamma_err = abs(ec.gamma_quarter() - 4 * quad)
    ok = rep.abs_residual < 1e-10 and abs(rep.lhs.real - 0.045409) < 5e-7 and gamma_err < 1e-10
    return ok, (f"lhs {rep.lhs.real:.10f}, residual {rep.abs_residual:.2e}, "
                f"Gamma(1/4) vs quadrature {gamma_err:.2e}")


def criterion_6():
    reps = [I.verify(ident, {"r": r}, tol=1e-9) for ident in ("thm2", "eq20", "thm3") for r in (1, 2, 4)]
    bad = [f"{rep.id}(r={rep.params['r']})" for rep in reps if not rep.passed]
    corrected = [I.verify(ident, {"r": r}, tol=1e-9) for ident in ("eq20_corrected", "thm3_corrected")
                 for r in (1, 2, 4)]
    note = ("; corrected mu form passes at all r" if all(rep.passed for rep in corrected)
            else "; corrected mu form also fails")
    detail = "thm2/eq20/thm3 at r=1,2,4 pass" if not bad else f"failing {', '.join(bad)} (printed mu){note}"
    return not bad, detail


def criterion_7():
    reps = [I.verify(ident, {"r": r}, tol=1e-10)
            for ident in ("thm4", "thm5", "thm6", "cor1") for r in (1, 2, 3, 4, 1.3)]
    bad = [f"{rep.id}{rep.params}" for rep in reps if not rep.passed]
    c1 = I.verify("cor1", {"r": 1})
    value_ok = (abs(c1.lhs.real - TWO_K_OVER_PI_R1) < 1e-10 and abs(c1.rhs.real - TWO_K_OVER_PI_R1) < 1e-10
                and f"{c1.lhs.real:.10f}" == "1.1803405990")
    return not bad and value_ok, f"worst residual {_worst(reps):.2e}; cor1(r=1) = {c1.lhs.real:.10f}"


def criterion_8():
    rep = I.verify("thm8", {"r": 1}, tol=1e-10)
    near = all(abs(v - 0.41729) < 1e-3 * 0.41729 for v in (rep.lhs.real, rep.rhs.real))
    exact = abs(rep.lhs.real - KK_OVER_PI_R1) < 1e-13
    return rep.passed and near and exact, (f"both sides {rep.lhs.real:.10f} (stated approx 0.41729), "
                                           f"residual {rep.abs_residual:.2e}")


def criterion_9():
    reps = [I.verify(ident, {"x": x}) for ident in ("prop1", "eq26") for x in (1.0, 2.0)]
    bad = [rep.id for rep in reps if not rep.abs_residual < 1e-12]
    return not bad, f"worst abs residual {max(rep.abs_residual for rep in reps):.2e}"


def criterion_10():
    reps = [I.verify(ident, {"x": math.pi}) for ident in ("thm7", "eq12")]
    bad = _check(reps, 1e-10)
    return not bad, f"x = pi: worst residual {_worst(reps):.2e}"


def _strip_points(ctx, count=10):
    # complex points inside both the q and the -q strips, away from 2z = 0 mod pi
    out = []
    for j in range(count):
        a = 0.07 + 1.86 * j / (count - 1)
        if abs(a - 1) < 0.05:
            a += 0.08
        b = 0.25 * math.sin(1.7 * j + 0.3)
        out.append(a * ctx.bigK + 1j * b * ctx.bigKprime)
    return out


def criterion_11():
    worst = 0.0
    for r in (1.0, 2.0):
        c = ec.context_from_r(r)
        for u in _strip_points(c):
            lhs3 = jf.fourier_fn_negative("sn", c, u)
            rhs3 = c.kprime * jf.fourier_fn("sd", c, u / c.kprime)
            lhs5 = jf.fourier_fn_negative("cn", c, u)
            rhs5 = jf.fourier_fn("cd", c, u / c.kprime)
            z = math.pi * u / (2 * c.bigK)
            lhs4 = jf.ss(c, u)
            rhs4 = (jf.fourier_fn("cn", c, u) * cmath.cos(2 * z) - jf.fourier_fn("cn1", c, u)) / cmath.sin(2 * z)
            for lhs, rhs in ((lhs3, rhs3), (lhs4, rhs4), (lhs5, rhs5)):
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst < 1e-9, f"prop3/4/5 on 10 complex strip points at r=1,2: worst residual {worst:.2e}"


def criterion_12():
    reps = []
    for r in (1.0, 2.0, 3.0, 4.0):
        reps += [I.verify("thm9", {"r": r, "theta": f"{f}K"}, tol=1e-9) for f in (0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9)]
        reps += [I.verify("thm10", {"r": r, "lam": lam}, tol=1e-9) for lam in (0.25, 0.5, 0.75)]
        reps += [I.verify("thm11", {"r": r, "nu": nu}, tol=1e-9) for nu in (3, 5)]
    bad = [f"{rep.id}{rep.params}" for rep in reps if not rep.passed]
    return not bad, f"{len(reps)} checks, worst residual {_worst(reps):.2e}"


def criterion_13():
    c = ec.context_from_r(1.0)
    closed = jf.cd1_special(c, "iK'")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", jf.CancellationWarning)
        product = jf.cd1(c, 1j * c.bigKprime).real
        cfroute = I.verify("thm14_cf", {"r": 1.0, "theta": "iKprime"}).lhs.real
    disagreement = max(abs(closed - product), abs(closed - cfroute))
    near = all(abs(v - 30.238) < 1e-3 * 30.238 for v in (closed, product))
    exact = abs(closed - CD1_IKPRIME_R1) < 1e-10 * CD1_IKPRIME_R1
    reps = [I.verify(ident, {"r": r}, tol=1e-9) for ident in ("cor3", "cor4", "eq55", "eq58", "eq59")
            for r in (1.0, 2.0)]
    bad = [f"{rep.id}{rep.params}" for rep in reps if not rep.passed]
    ok = disagreement < 1e-8 and near and exact and not bad
    return ok, (f"cd1(iK') = {closed:.10f} closed form, {product:.10f} product route "
                f"(stated approx 30.238), disagreement {disagreement:.1e}; special-point sums worst {_worst(reps):.1e}")


def criterion_14():
    lim = [I.verify("cor2_limit", {"r": r}) for r in (1.0, 2.0, 4.0)]
    vals = [I.verify("cor2_values", {"r": r, "theta": t}, tol=1e-10) for r in (1.0, 2.0, 4.0)
            for t in ("0", "K", "2K")]
    ok = all(rep.abs_residual < 1e-6 for rep in lim) and all(rep.passed for rep in vals)
    return ok, (f"Richardson limit worst {max(rep.abs_residual for rep in lim):.1e}; "
                f"cd1 at 0, K, 2K worst {max(rep.abs_residual for rep in vals):.1e}")


def criterion_15():
    thetas = [f"{f}K" for f in (0.1, 0.25, 0.4, 0.55, 0.7, 0.85)]
    printed = [I.verify("thm13", {"r": r, "theta": t}, tol=1e-9) for r in (1.0, 2.0) for t in thetas]
    corrected = [I.verify("thm13_corrected", {"r": r, "theta": t}, tol=1e-9) for r in (1.0, 2.0) for t in thetas]
    cd1_form = [I.verify("thm13_cd1", {"r": r, "theta": t}, tol=1e-9) for r in (1.0, 2.0) for t in thetas]
    lattice = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", jf.CancellationWarning)
        for r in (1.0, 2.0):
            c = ec.context_from_r(r)
            for m, inv_nu in ((0, 1), (2, 1), (0, 2)):
                closed = jf.cd1_special(c, "lattice", m, inv_nu)
                route = jf.cd1(c, jf.lattice_point(c, m, inv_nu))
                lattice.append(abs(closed - route) / max(1.0, abs(closed)))
    printed_ok = all(rep.passed for rep in printed)
    rest_ok = all(rep.passed for rep in cd1_form) and max(lattice) < 1e-8
    detail = (f"Re-part identity as printed: {'pass' if printed_ok else 'FAIL (opposite sign)'}; "
              f"with sign corrected: {'pass' if all(rep.passed for rep in corrected) else 'fail'}; "
              f"cd1 product form worst {_worst(cd1_form):.1e}; finite-sum vs product route worst {max(lattice):.1e}")
    return printed_ok and rest_ok, detail


def criterion_16():
    rng = random.Random(20240601)
    worst_cf = worst_log = 0.0
    for _ in range(50):
        a = cmath.rect(rng.uniform(0.0, 0.5), rng.uniform(-math.pi, math.pi))
        q = rng.uniform(0.0, 0.5)
        worst_cf = max(worst_cf, abs(cf.u0_cf(a, q) - cf.u0_product(a, q)))
        worst_log = max(worst_log, abs(cf.log_P_series(a, q) - cf.log_P_product(a, q)))
    return worst_cf < 1e-10 and worst_log < 1e-12, f"CF vs product {worst_cf:.1e}; log P series vs product {worst_log:.1e}"


def criterion_17():
    legendre = max(abs(ec.legendre_residual(k)) for k in (0.05, 0.2, 0.5, 0.7071, 0.9, 0.99))
    ratio = max(abs(ec.context_from_r(r).bigKprime / ec.context_from_r(r).bigK - math.sqrt(r))
                for r in (0.25, 0.5, 1, 1.3, 2, 3, 4, 9, 16))
    infra = [rep for r in (1, 2, 3, 4) for rep in I.verify_all([r], 1e-9, ids=["pythagorean", "sn_fourier",
                                                                           "cn_fourier", "cd_fourier", "sd_fourier"])]
    proc = subprocess.run([sys.executable, "-m", "hypersum", "verify", "--all", "--r", "1,2,3,4", "--tol", "1e-9",
                           "--output", "json"], capture_output=True, text=True)
    failing = sorted({json.loads(line)["id"] for line in proc.stdout.splitlines() if not json.loads(line)["pass"]})
    infra_ok = legendre < 1e-9 and ratio < 1e-9 and all(rep.passed for rep in infra)
    detail = (f"Legendre {legendre:.1e}, K'/K {ratio:.1e}, sn^2+cn^2 and Fourier checks "
              f"{'pass' if all(rep.passed for rep in infra) else 'fail'}; verify --all exit {proc.returncode}")
    if failing:
        detail += f" (failing ids: {', '.join(failing)})"
    return infra_ok and proc.returncode == 0, detail


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 18)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        failures += not ok
        print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    sys.exit(1 if failures else 0)
