"""One front door for checking any registered identity.

Each family name maps to a bundle of checks appropriate to what is
known about it: the counting series against the product always, plus a
finite recursion, an explicit bijection, or an overline specialization
where one is on file.  Names from the refuted list get their
counterexample reproduced instead, and the report says so plainly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import UnknownFamily, UnknownRecursion
from . import recursions
from .families import get_identity, get_refuted, refuted_names, registered_names

PREDICATE_CAP = 40


@dataclass(frozen=True)
class CheckResult:
    label: str
    passed: bool
    detail: str = ""

    def __str__(self):
        line = "%s: %s" % (self.label, "pass" if self.passed else "FAIL")
        if self.detail:
            line += " (%s)" % self.detail
        return line


@dataclass(frozen=True)
class VerifyReport:
    name: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        head = "%s: %s" % (self.name, "pass" if self.passed else "FAIL")
        return "\n".join([head] + ["  " + str(c) for c in self.checks])


def _count_check(ident, nmax: Optional[int]) -> CheckResult:
    dp_capable = ident.flat is not None or ident.dp_rules is not None
    order = nmax if nmax is not None else (200 if dp_capable else PREDICATE_CAP)
    note = ""
    if not dp_capable and order > PREDICATE_CAP:
        order = PREDICATE_CAP
        note = ", enumeration capped at %d" % PREDICATE_CAP
    got = ident.count_series(order)
    want = ident.product_series(order)
    for n in range(order + 1):
        if got[n] != want[n]:
            return CheckResult(
                "count vs product", False,
                "first mismatch at n=%d: sum %d, product %d"
                % (n, got[n], want[n]))
    return CheckResult("count vs product", True,
                       "exact to n=%d%s" % (order, note))


def _recursion_check(name: str, order: int) -> Optional[CheckResult]:
    try:
        report = recursions.verify_recursion(name, j_max=30, order=order)
    except UnknownRecursion:
        return None
    detail = ("levels %d..%d to order %d"
              % (report.levels[0], report.levels[-1], report.order))
    if not report.passed and report.first_mismatch:
        j, n, got, want = report.first_mismatch
        detail = ("level %d at n=%d: recursion %d, direct %d"
                  % (j, n, got, want))
    if not report.bases_ok:
        detail += "; printed base forms disagree"
    return CheckResult("finite recursion", report.passed and report.bases_ok,
                       detail)


def _bijection_check(name: str, n_max: int) -> Optional[CheckResult]:
    m = re.fullmatch(r"(FAM1_[123]|FAM[2-7])_K(\d+)", name)
    if not m:
        return None
    from .bijections import verify_bijection
    report = verify_bijection(m.group(1), int(m.group(2)), n_max)
    detail = ("%d partitions mapped to n=%d; core: %s"
              % (report.checked, report.n_max, report.core))
    if report.failure:
        detail = report.failure
    return CheckResult("bijection round trip", report.passed, detail)


def _specialization_check(name: str) -> Optional[CheckResult]:
    m = re.fullmatch(r"FAM9_K(\d+)|AND1_K(\d+)|COR_K(\d+)_I(\d+)", name)
    if not m:
        return None
    from .overpartitions import specialize
    if m.group(1):
        k, s = int(m.group(1)), -1
    elif m.group(2):
        k = int(m.group(2))
        s = 2 * k - 3
    else:
        k, i = int(m.group(3)), int(m.group(4))
        s = 2 * i - 1
    order = 30
    ident = get_identity(name)
    series = specialize(k, s, 2, order)
    want = ident.count_series(order)
    for n in range(order + 1):
        if series[n] != want[n]:
            return CheckResult(
                "overline specialization", False,
                "a->q^%d, q->q^2 diverges at n=%d: %d vs %d"
                % (s, n, series[n], want[n]))
    return CheckResult("overline specialization", True,
                       "a->q^%d, q->q^2 matches counts to n=%d" % (s, order))


def _refuted_report(name: str) -> VerifyReport:
    from .counting import sum_series_dp
    from .series import product_series
    entry = get_refuted(name)
    n = entry.counterexample_n
    got = sum_series_dp(entry.flat(), n)[n]
    want = product_series(entry.product(), n)[n]
    if got != want:
        detail = ("not a theorem: sum side %d, product side %d at n=%d"
                  % (got, want, n))
    else:
        detail = "recorded counterexample at n=%d did not reproduce" % n
    return VerifyReport(name, (CheckResult("identity holds", False, detail),))


def verify_identity(name: str, nmax: Optional[int] = None,
                    bijection_n: int = 16,
                    recursion_order: int = 150) -> VerifyReport:
    """Run every check on file for this family name."""
    key = name.strip().upper()
    if key in refuted_names():
        return _refuted_report(key)
    ident = get_identity(key)
    checks = [_count_check(ident, nmax)]
    for extra in (_recursion_check(ident.name, recursion_order),
                  _bijection_check(ident.name, bijection_n),
                  _specialization_check(ident.name)):
        if extra is not None:
            checks.append(extra)
    return VerifyReport(ident.name, tuple(checks))


def verify_all(nmax: Optional[int] = None):
    """Count-vs-product sweep over the whole registry; yields reports."""
    for name in registered_names():
        ident = get_identity(name)
        yield VerifyReport(name, (_count_check(ident, nmax),))
