import functools

from ginfan.family import G0, family_ideal
from ginfan.generic import SamplerConfig, sample_gl3
from ginfan.oracle import all_pluecker
from ginfan.poly import degree_matrix


@functools.lru_cache(maxsize=None)
def generic_family_matrix(d, seed=1):
    g, _ = sample_gl3(SamplerConfig(seed=seed), 0)
    return degree_matrix(family_ideal(d).transform(g), d)[0]


@functools.lru_cache(maxsize=None)
def g0_family_matrix(d):
    return degree_matrix(family_ideal(d).transform(G0), d)[0]


@functools.lru_cache(maxsize=None)
def pluecker(A):
    return all_pluecker(A)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
