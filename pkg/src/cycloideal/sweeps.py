"""Verification sweeps behind ``cycloideal check``.

Every suite is split into independent per-``l`` cases so they can be farmed
out to worker processes; results are merged in a fixed order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cyclotomic import cyclotomic, divisors, factor_cyclotomic
from .fixtures import T_TABLE
from .habiro_ideals import (
    InternalInconsistency,
    f_gen,
    g_exponents,
    g_poly,
    gcd_oracle_lk,
    gcd_oracle_rational,
    lemma_gl_witness,
    principality_certificate,
    t_exponent,
    t_exponents,
    tilde_g_exponents,
    verify_certificate,
)
from .link_ideals import base_exponents
from .poly_core import LaurentPoly, ONE, divide_exact, try_divide
from .qcalc import expand, q_factorial, q_falling, q_int, sub_exponents


@dataclass
class SuiteResult:
    name: str
    unit: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        text = f"{self.name}: {status} ({self.cases} {self.unit})"
        if self.failures:
            text += "; first failure: " + self.failures[0]
        return text


def _t_table(l: int) -> tuple[int, list[str]]:
    if l > 16:
        return 0, []
    bad = [f"t({l},{m})={t_exponent(l, m)} != {T_TABLE[m][l]}"
           for m in range(1, 5) if t_exponent(l, m) != T_TABLE[m][l]]
    return 4, bad


def _gcd_closed_form(l: int) -> tuple[int, list[str]]:
    got = gcd_oracle_lk(l, l)
    return 1, [] if got == t_exponents(l) else [f"l={l}: oracle {got} != {t_exponents(l)}"]


def _gcd_intermediate(l: int) -> tuple[int, list[str]]:
    bad = []
    for k in range(l + 1):
        got = gcd_oracle_lk(l, k)
        if got != g_exponents(l, k):
            bad.append(f"(l,k)=({l},{k}): oracle {got} != {g_exponents(l, k)}")
    return l + 1, bad


def _telescoping(l: int) -> tuple[int, list[str]]:
    bad = []
    for k in range(1, l + 1):
        step = sub_exponents(g_exponents(l, k), g_exponents(l, k - 1))
        if step != tilde_g_exponents(l, k):
            bad.append(f"(l,k)=({l},{k}): {step} != {tilde_g_exponents(l, k)}")
    return l, bad


def _inclusion(l: int) -> tuple[int, list[str]]:
    g = g_poly(l)
    bad = [f"g_{l} does not divide f_({l},{k})" for k in range(l + 1)
           if try_divide(f_gen(l, k), g) is None]
    return l + 1, bad


def _step_multiplicity(l: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    for k in range(1, l + 1):
        rest = divide_exact(q_factorial(k - 1), g_poly(l, k - 1))
        fac = factor_cyclotomic(rest)
        for m in divisors(l - k + 1):
            if m > k:
                continue
            count += 1
            want = 0 if k % m == 0 else 1
            if fac.multiplicity(m) != want:
                bad.append(f"(l,k,m)=({l},{k},{m}): d_m = {fac.multiplicity(m)} != {want}")
    return count, bad


def _coprime_step(l: int) -> tuple[int, list[str]]:
    bad = []
    for k in range(1, l + 1):
        try:
            w = lemma_gl_witness(l, k)
        except InternalInconsistency as exc:
            bad.append(f"(l,k)=({l},{k}): {exc}")
            continue
        if not w.holds():
            bad.append(f"(l,k)=({l},{k}): witness identity fails")
    return l, bad


def _base_factor(l: int) -> tuple[int, list[str]]:
    direct = divide_exact(q_falling(2 * l + 1, l + 1), q_int(1))
    ok = expand(base_exponents(l)) == direct
    return 1, [] if ok else [f"l_max={l}: base exponents disagree with the quotient"]


def _rational_gcd(l: int) -> tuple[int, list[str]]:
    ok = gcd_oracle_rational(l) == g_poly(l)
    return 1, [] if ok else [f"l={l}: rational GCD differs from g_l"]


def _certificate(l: int) -> tuple[int, list[str]]:
    try:
        cert = principality_certificate(l)
    except InternalInconsistency as exc:
        return 1, [f"l={l}: {exc}"]
    return 1, [] if verify_certificate(cert) else [f"l={l}: certificate rejected"]


def _cyclotomic(m: int) -> tuple[int, list[str]]:
    prod = ONE
    for d in divisors(m):
        prod = prod * cyclotomic(d)
    ok = prod == LaurentPoly({m: 1, 0: -1})
    return 1, [] if ok else [f"m={m}: product of Phi_d over d | m != q^m - 1"]


# name -> (unit, case function, first index)
SUITES = {
    "t-table": ("cells", _t_table, 0),
    "cyclotomic": ("indices", _cyclotomic, 1),
    "gcd-closed-form": ("levels", _gcd_closed_form, 0),
    "gcd-intermediate": ("(l,k) pairs", _gcd_intermediate, 0),
    "telescoping": ("(l,k) pairs", _telescoping, 0),
    "ideal-inclusion": ("generators", _inclusion, 0),
    "step-multiplicity": ("(l,k,m) cases", _step_multiplicity, 0),
    "coprime-step": ("(l,k) pairs", _coprime_step, 0),
    "base-factor": ("levels", _base_factor, 0),
    "rational-gcd": ("levels", _rational_gcd, 0),
    "certificates": ("certificates", _certificate, 0),
}


def _run_case(name: str, index: int) -> tuple[int, list[str]]:
    return SUITES[name][1](index)


def run_suites(
    l_max: int,
    *,
    certificates: bool = False,
    rational_max: int = 12,
    jobs: int = 1,
) -> list[SuiteResult]:
    """Run every suite up to ``l_max``; ordering of the report is fixed."""
    plan: list[tuple[str, int]] = []
    for name, (_, _, start) in SUITES.items():
        if name == "certificates" and not certificates:
            continue
        top = l_max
        if name == "rational-gcd":
            top = min(l_max, rational_max)
        elif name == "cyclotomic":
            top = 2 * l_max + 1
        plan.extend((name, i) for i in range(start, top + 1))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_case, *zip(*plan)))
    else:
        outcomes = [_run_case(name, i) for name, i in plan]

    results: dict[str, SuiteResult] = {}
    for (name, _), (count, bad) in zip(plan, outcomes):
        res = results.setdefault(name, SuiteResult(name, SUITES[name][0]))
        res.cases += count
        res.failures.extend(bad)
    for name in SUITES:
        if name not in results and (name != "certificates" or certificates):
            results[name] = SuiteResult(name, SUITES[name][0])
    return [results[name] for name in SUITES if name in results]
