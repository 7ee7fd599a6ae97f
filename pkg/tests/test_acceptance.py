"""The ten acceptance criteria, each at exact tolerance.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``; both print one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import sys

import pytest

from cohlength.suites import RunConfig, SuiteReport, run_suite

CRITERIA = [
    (1, "barcode soundness and completeness", "barcode"),
    (2, "equal lengths iff isomorphic", "theorem1"),
    (3, "cohomologicality with negative control", "axioms"),
    (4, "decomposition and weighted additivity", "decompose"),
    (5, "AR triangles with simple end terms", "ar-exact"),
    (6, "Schanuel for presentations", "schanuel"),
    (7, "spectrum of per k[eps]", "spectrum"),
    (8, "Spec A embedding and supports", "spec-embedding"),
    (9, "endolength versus dimension", "endolength"),
]

_reports: dict[str, SuiteReport] = {}


def report(suite: str) -> SuiteReport:
    if suite not in _reports:
        _reports[suite] = run_suite(suite, RunConfig(seed=1))
    return _reports[suite]


def _case(rep: SuiteReport, prefix: str) -> list:
    return [c for c in rep.cases if c.id.startswith(prefix)]


def extra_checks(number: int, rep: SuiteReport) -> list[str]:
    """Shape checks on top of all-cases-pass, so a criterion cannot pass vacuously."""
    problems = []

    def need(cond: bool, msg: str):
        if not cond:
            problems.append(msg)

    if number == 1:
        need(len(_case(rep, "complex-")) == 200, "expected 200 complexes")
    elif number == 2:
        need(len(_case(rep, "independence-certificate")) == 1, "missing rank certificate")
        need(len(_case(rep, "sample-")) == 1, "missing 3^9 sample")
        need(len(_case(rep, "iso-")) == 24, "expected 24 iso verdicts")
    elif number == 3:
        need(len(_case(rep, "chi[")) == 21, "expected 20 objects plus chi_k")
        need(len(_case(rep, "negative-control")) == 1, "missing negative control")
    elif number == 4:
        need(len(_case(rep, "combo-")) == 100, "expected 100 combos")
        need(len(_case(rep, "weighted[")) >= 1, "missing weighted additivity")
    elif number == 5:
        need(len(_case(rep, "AR(")) == 7 * 4, "expected |n| <= 3, r <= 3")
    elif number == 6:
        need(len(_case(rep, "pair-")) == 100, "expected 100 pairs")
    elif number == 7:
        for r in range(3, 7):
            need(len(_case(rep, f"isolated[r_max={r}]")) == 1, f"missing r_max={r}")
            need(len(_case(rep, f"closure[r_max={r}]")) == 1, f"missing closure r_max={r}")
    elif number == 8:
        need(len(_case(rep, "rho-injective")) == 1, "missing injectivity")
        need(len(_case(rep, "support-")) == 50, "expected 50 supports")
    elif number == 9:
        need(len(_case(rep, "module-")) == 100, "expected 100 modules")
        need(len(_case(rep, "chi_X00(X00)")) == 1, "missing chi_X00(X00)")
    return problems


def verdict(number: int, title: str, suite: str) -> tuple[bool, str]:
    rep = report(suite)
    problems = extra_checks(number, rep) + [f"{c.id}: {c.detail}" for c in rep.failures()]
    n_ok = sum(c.ok for c in rep.cases)
    detail = f"{n_ok}/{len(rep.cases)} cases" + (f"; {problems[:3]}" if problems else "")
    return rep.passed and not problems, detail


def determinism() -> tuple[bool, str]:
    changed = []
    for _, _, suite in CRITERIA:
        first = report(suite)
        again = run_suite(suite, RunConfig(seed=1))
        if first.text() != again.text():
            changed.append(f"{suite}/report")
        for name in sorted(set(first.artifacts) | set(again.artifacts)):
            if first.artifacts.get(name, "").encode() != again.artifacts.get(name, "").encode():
                changed.append(f"{suite}/{name}")
    n_art = sum(len(report(s).artifacts) for _, _, s in CRITERIA)
    return not changed, f"{n_art} artifacts over {len(CRITERIA)} suites" + (f"; differing {changed}" if changed else "")


def line(number: int, title: str, ok: bool, detail: str) -> str:
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({detail})"


def _emit(text: str, capsys) -> None:
    with capsys.disabled():
        print("\n" + text)


@pytest.mark.parametrize("number, title, suite", CRITERIA, ids=[s for _, _, s in CRITERIA])
def test_criterion(number, title, suite, capsys):
    ok, detail = verdict(number, title, suite)
    _emit(line(number, title, ok, detail), capsys)
    assert ok, detail


def test_criterion_10_determinism(capsys):
    ok, detail = determinism()
    _emit(line(10, "byte-identical artifacts on rerun", ok, detail), capsys)
    assert ok, detail


def main() -> int:
    results = [(n, t, *verdict(n, t, s)) for n, t, s in CRITERIA]
    results.append((10, "byte-identical artifacts on rerun", *determinism()))
    for n, t, ok, detail in results:
        print(line(n, t, ok, detail))
    return 0 if all(ok for _, _, ok, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
