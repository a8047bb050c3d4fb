import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import weightiso.isotest as isotest  # noqa: E402
from weightiso import matcher  # noqa: E402
from oracles import matrix_verify  # noqa: E402

ARTIFACT_DIR = Path(__file__).resolve().parent.parent / "artifacts" / "counterexamples"


class Audit:
    """Session-wide record of every isomorphic verdict and every refined bigraph
    that admitted a transversal, checked independently of the library."""

    def __init__(self):
        self.iso_verdicts = 0
        self.bad_verdicts = []
        self.refinements_with_transversal = 0
        self.bad_refinements = []


AUDIT = Audit()
ACCEPTANCE: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--strict-iso", action="store_true",
                     help="fail completeness criteria on any false negative")


@pytest.fixture(scope="session")
def strict(request):
    return request.config.getoption("--strict-iso") or os.environ.get("WEIGHTISO_STRICT") == "1"


@pytest.fixture(scope="session")
def audit():
    return AUDIT


@pytest.fixture(autouse=True, scope="session")
def _audit_hooks():
    """Wrap algorithm1 and refine where every caller resolves them."""
    orig_alg, orig_refine = isotest.algorithm1, isotest.refine

    def algorithm1(g, g2, *a, **kw):
        res = orig_alg(g, g2, *a, **kw)
        if res.isomorphic:
            AUDIT.iso_verdicts += 1
            if res.mapping is None or not matrix_verify(g, g2, res.mapping):
                AUDIT.bad_verdicts.append((g, g2, res.mapping))
        return res

    def refine(*a, **kw):
        u = orig_refine(*a, **kw)
        if matcher.transversal(u) is not None:
            AUDIT.refinements_with_transversal += 1
            if any(d != 1 for d in u.right_degrees()) or any(
                u.left_degree(p) != 1 for p in range(u.n)
            ):
                AUDIT.bad_refinements.append(u)
        return u

    import weightiso.bench as bench
    import weightiso.cli as cli
    import weightiso.oracle as oracle

    patched = [(isotest, "algorithm1"), (oracle, "algorithm1"), (bench, "algorithm1"),
               (cli, "algorithm1")]
    for mod, name in patched:
        setattr(mod, name, algorithm1)
    isotest.refine = refine
    yield
    for mod, name in patched:
        setattr(mod, name, orig_alg)
    isotest.refine = orig_refine


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    if ACCEPTANCE:
        tr.section("acceptance criteria")
        for line in ACCEPTANCE:
            tr.write_line(line)
    tr.section("weightiso audit")
    tr.write_line(f"isomorphic verdicts audited: {AUDIT.iso_verdicts}, "
                  f"invalid mappings: {len(AUDIT.bad_verdicts)}")
    tr.write_line(f"refinements with a transversal: {AUDIT.refinements_with_transversal}, "
                  f"not one-edge-per-vertex: {len(AUDIT.bad_refinements)}")
