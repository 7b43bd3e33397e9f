"""Randomised stand-ins for "generic" coordinate changes and ideals.

A generic object is replaced by a handful of seeded random integer samples.
Fan components are only reported when every sample agrees; disagreement is
surfaced with the per-sample data, never merged.

Random numbers come from SplitMix64 (Steele, Lea & Flood 2014).  Every draw
is a function of ``(seed, stream, index)`` alone, so sample ``k`` does not
depend on how many other samples were taken or in which order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoBasisError, PreconditionError, SamplingError, StabilityError
from .family import bound, m_of, omega_lambda, valid_n, _J
from .fan import DegreeFanComponent, enumerate_vertices, locate_cone
from .linalg import RationalMatrix, rank
from .poly import IdealSpec, LinearChange, Poly, degree_matrix, monomial_basis

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_HEIGHT",
    "DEFAULT_SAMPLES",
    "SplitMix64",
    "SamplerConfig",
    "GenericFanResult",
    "RandomIdealSpec",
    "OmegaCheck",
    "random_gl3",
    "sample_gl3",
    "generic_degree_fan",
    "gin_lower_bound",
    "check_omega_cones",
    "random_dense_ideal",
    "theorem_generic_experiment",
]

DEFAULT_SEED = 20140501
DEFAULT_HEIGHT = 10**6
DEFAULT_SAMPLES = 5
MAX_ATTEMPTS = 1000

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

STREAM_GL3 = 1
STREAM_DENSE = 2


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 generator; ``next()`` returns a 64-bit unsigned int."""

    def __init__(self, seed: int, stream: int = 0, index: int = 0):
        s = _mix((seed & _MASK) + _GOLDEN & _MASK)
        s = _mix(s ^ ((stream * 0xD1B54A32D192ED03) & _MASK))
        self.state = _mix(s ^ ((index * 0xA0761D6478BD642F + 1) & _MASK))

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return _mix(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = ((1 << 64) // span) * span
        while True:
            r = self.next()
            if r < limit:
                return lo + r % span


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = DEFAULT_SEED
    height: int = DEFAULT_HEIGHT
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")

    def as_dict(self) -> dict:
        return {"seed": self.seed, "height": self.height, "samples": self.samples}


def sample_gl3(config: SamplerConfig, index: int) -> tuple[LinearChange, int]:
    """Invertible integer 3x3 change and the number of singular draws rejected."""
    rng = SplitMix64(config.seed, STREAM_GL3, index)
    h = config.height
    for attempt in range(MAX_ATTEMPTS):
        g = LinearChange.from_rows([[rng.randint(-h, h) for _ in range(3)] for _ in range(3)])
        if g.is_invertible():
            return g, attempt
    raise SamplingError(f"no invertible matrix after {MAX_ATTEMPTS} draws")


def random_gl3(config: SamplerConfig, index: int) -> LinearChange:
    return sample_gl3(config, index)[0]


@dataclass(frozen=True)
class GenericFanResult:
    component: DegreeFanComponent
    agreement: bool
    per_sample_counts: tuple[int, ...]
    used_matrices: tuple[LinearChange, ...]
    per_sample: tuple[DegreeFanComponent, ...] = field(repr=False)
    rejected: tuple[int, ...] = ()

    def disagreements(self) -> dict[int, list[list[int]]]:
        """Vertex sets of the samples that differ from sample 0."""
        ref = self.per_sample[0].point_set()
        return {k: sorted(list(m) for m in c.point_set())
                for k, c in enumerate(self.per_sample) if c.point_set() != ref}


def generic_degree_fan(I: IdealSpec, e: int, config: SamplerConfig) -> GenericFanResult:
    """Degree-``e`` fan component of ``g(I)`` for ``config.samples`` random ``g``."""
    comps, gs, rejected = [], [], []
    for k in range(config.samples):
        g, rej = sample_gl3(config, k)
        A, _ = degree_matrix(I.transform(g), e)
        if rank(A) == 0:
            raise NoBasisError(f"dim g(I)_{e} = 0")
        comps.append(enumerate_vertices(A))
        gs.append(g)
        rejected.append(rej)
    ref = comps[0].point_set()
    agree = all(c.point_set() == ref for c in comps)
    return GenericFanResult(comps[0], agree, tuple(c.count for c in comps),
                            tuple(gs), tuple(comps), tuple(rejected))


def _require_dim(I: IdealSpec, d: int) -> int:
    A, _ = degree_matrix(I, d)
    r = rank(A)
    if r != d + 1:
        raise PreconditionError(f"dim I_{d} = {r}, expected {d + 1}")
    return r


def _stable(I: IdealSpec, d: int, config: SamplerConfig) -> GenericFanResult:
    _require_dim(I, d)
    res = generic_degree_fan(I, d, config)
    if not res.agreement:
        raise StabilityError(
            f"samples disagree on the degree-{d} component "
            f"(counts {list(res.per_sample_counts)})",
            {"counts": list(res.per_sample_counts),
             "vertex_sets": {k: sorted(list(m) for m in c.point_set())
                             for k, c in enumerate(res.per_sample)},
             "matrices": [[[int(x) for x in g.matrix.row(i)] for i in range(3)]
                          for g in res.used_matrices]})
    return res


def gin_lower_bound(I: IdealSpec, d: int, config: SamplerConfig) -> int:
    """Vertex count of the stabilised generic degree-``d`` component.

    Each vertex is a distinct maximal cone of the degree-``d`` fan, and
    distinct cones there give distinct generic initial ideals, so this is a
    lower bound for their number.
    """
    return _stable(I, d, config).component.count


@dataclass(frozen=True)
class OmegaCheck:
    """Where the weights ``omega(n)`` land in a degree-``d`` component."""

    located: tuple[tuple[int, int, int], ...]
    strict: tuple[bool, ...]
    expected: tuple[tuple[int, int, int], ...]

    @property
    def distinct(self) -> bool:
        return len(set(self.located)) == len(self.located)

    @property
    def all_strict(self) -> bool:
        return all(self.strict)

    @property
    def realizes_J(self) -> tuple[bool, ...]:
        """Per ``n``: is the located vertex ``m_{J(n)}``?"""
        return tuple(a == b for a, b in zip(self.located, self.expected))


def check_omega_cones(component: DegreeFanComponent, d: int) -> OmegaCheck:
    located, strict, expected = [], [], []
    for n in valid_n(d):
        sep = omega_lambda(d, n)
        loc = locate_cone(component, None, sep.omega)
        located.append(loc.vertex.m)
        strict.append(loc.strict)
        expected.append(m_of(_J(d, n)))
    return OmegaCheck(tuple(located), tuple(strict), tuple(expected))


# --------------------------------------------------------------------------
# random dense ideals


@dataclass(frozen=True)
class RandomIdealSpec:
    """Coefficients ``q``: row ``i`` holds ``f_i`` in ``monomial_basis(d)`` order."""

    d: int
    q: RationalMatrix
    resamples: int = 0

    def __post_init__(self):
        if self.q.cols != len(monomial_basis(self.d)):
            raise ValueError("q must have one column per degree-d monomial")


def random_dense_ideal(d: int, config: SamplerConfig, trial: int,
                       degenerate: bool = False) -> tuple[RandomIdealSpec, IdealSpec]:
    """``d+1`` dense degree-``d`` forms with integer coefficients in ``[-h, h]``.

    Draws whose forms are linearly dependent are rejected and counted.  With
    ``degenerate=True`` all forms are copies of the first draw (for testing
    the dimension check) and nothing is rejected.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    basis = monomial_basis(d)
    rng = SplitMix64(config.seed, STREAM_DENSE, trial)
    h = config.height
    for attempt in range(MAX_ATTEMPTS):
        if degenerate:
            row = [rng.randint(-h, h) for _ in basis]
            rows = [row] * (d + 1)
        else:
            rows = [[rng.randint(-h, h) for _ in basis] for _ in range(d + 1)]
        q = RationalMatrix.from_rows(rows)
        if degenerate or rank(q) == d + 1:
            gens = tuple(Poly({nu: c for nu, c in zip(basis, r)}) for r in rows)
            return RandomIdealSpec(d, q, attempt), IdealSpec(gens)
    raise SamplingError(f"no independent forms after {MAX_ATTEMPTS} draws")


def theorem_generic_experiment(d: int, trials: int, config: SamplerConfig,
                               degenerate: bool = False) -> dict:
    """Bound check for ``trials`` random dense ideals generated in degree ``d``.

    A trial passes when ``dim I_d = d+1``, the samples agree, the vertex
    count reaches ``floor((d-1)/3) + 1`` and the weights ``omega(n)`` fall in
    pairwise distinct cones.  Failures are recorded, not raised.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    need = bound(d)
    rows = []
    for t in range(trials):
        row = {"trial": t}
        try:
            spec, I = random_dense_ideal(d, config, t, degenerate=degenerate)
            row["resamples"] = spec.resamples
            res = _stable(I, d, config)
        except PreconditionError as exc:
            row.update(passed=False, count_ok=False, failure="dimension", error=str(exc))
        except StabilityError as exc:
            row.update(passed=False, count_ok=False, failure="stability", error=str(exc),
                       counts=exc.diagnostics.get("counts"))
        else:
            comp = res.component
            om = check_omega_cones(comp, d)
            count_ok = comp.count >= need
            row.update(count=comp.count, count_ok=count_ok,
                       omega_distinct=om.distinct, omega_strict=om.all_strict,
                       passed=count_ok and om.distinct and om.all_strict)
        rows.append(row)
    passed = sum(r["passed"] for r in rows)
    return {
        "d": d,
        "bound": need,
        "trials": rows,
        "passed": passed,
        "count_ok": sum(r["count_ok"] for r in rows),
        "total": trials,
        "dimension_failures": sum(r.get("failure") == "dimension" for r in rows),
    }
