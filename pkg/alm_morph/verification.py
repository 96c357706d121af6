"""
Randomized law checking for the extended operators and their references.

Every trial draws its operands from its own generator seeded by
(seed, trial index), so any single trial can be replayed and reports are
identical run to run.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .alm import cog_merge
from .exceptions import ConfigurationError
from .extended_norms import (
    NEUTRAL, SizeOrder, complement_sm, ext_thicken, ext_thin, max_by_size, min_by_size,
)
from .models.image import MaskOctet, default_thinning_octet
from .models.matrix import Layer, StringMatrix
from .morphology import check_duality, random_image
from .string_matrix import layers, left, pad_to_square

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5

Operator = Callable[[StringMatrix, StringMatrix], StringMatrix]


@dataclass
class AxiomReport:
    """
    Outcome of one law over a batch of trials.

    `expected` is True when the law must hold in every trial, False when at
    least one counterexample must be found, and None when the pass rate is
    only measured.
    """
    law: str
    trials: int
    passes: int
    counterexamples: List[tuple] = field(default_factory=list)
    expected: Optional[bool] = True

    def __post_init__(self):
        if self.trials < 0 or not 0 <= self.passes <= self.trials:
            raise ValueError(f"invalid report counts: {self.passes}/{self.trials}")

    @property
    def pass_rate(self) -> float:
        return self.passes / self.trials if self.trials else 1.0

    @property
    def satisfied(self) -> bool:
        if self.expected is None:
            return True
        if self.expected:
            return self.passes == self.trials
        return self.passes < self.trials


class _Tally:
    """Accumulates passes and the first few counterexamples of one law."""

    def __init__(self, law: str, expected: Optional[bool] = True):
        self.law = law
        self.expected = expected
        self.trials = 0
        self.passes = 0
        self.counterexamples: List[tuple] = []

    def record(self, ok: bool, operands: tuple) -> None:
        self.trials += 1
        if ok:
            self.passes += 1
        elif len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(operands)

    def report(self) -> AxiomReport:
        report = AxiomReport(self.law, self.trials, self.passes, self.counterexamples, self.expected)
        logger.info("%s: %d/%d passed", report.law, report.passes, report.trials)
        return report


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial."""
    return np.random.Generator(np.random.PCG64([seed, trial]))


class SizeSituation(Enum):
    """Position of size(C) relative to size(A) <= size(B)."""
    BELOW_A = "C<A"
    EQUAL_A = "C=A"
    BETWEEN = "A<C<B"
    EQUAL_B = "C=B"
    ABOVE_B = "C>B"


SITUATIONS = tuple(SizeSituation)


def history_layers(matrix: StringMatrix) -> List[Layer]:
    """Layers after the numeric one, in canonical order."""
    return sorted(layers(matrix)[1:], key=lambda layer: layer.to_rows())


@dataclass(frozen=True)
class MatrixGenerator:
    """Depth-1 random string matrices with uniform sizes and i.i.d. cells."""
    min_size: int = 1
    max_size: int = 9
    p_one: float = 0.5

    def __post_init__(self):
        if self.min_size < 1 or self.max_size - self.min_size < 2:
            raise ValueError(
                f"need 1 <= min_size and max_size >= min_size + 2, got [{self.min_size}, {self.max_size}]"
            )
        if not 0.0 <= self.p_one <= 1.0:
            raise ValueError(f"p_one must be in [0, 1], got {self.p_one}")

    def size(self, rng: np.random.Generator, low: Optional[int] = None, high: Optional[int] = None) -> int:
        """Uniform size in [low, high], defaulting to the generator bounds."""
        low = self.min_size if low is None else low
        high = self.max_size if high is None else high
        return int(rng.integers(low, high + 1))

    def matrix(self, rng: np.random.Generator, size: Optional[int] = None) -> StringMatrix:
        size = self.size(rng) if size is None else size
        ones = rng.random((size, size, 1)) < self.p_one
        return StringMatrix(np.where(ones, '1', '0'))

    def pair(self, rng: np.random.Generator) -> Tuple[StringMatrix, StringMatrix]:
        return self.matrix(rng), self.matrix(rng)

    def unequal_pair(self, rng: np.random.Generator) -> Tuple[StringMatrix, StringMatrix]:
        a = self.size(rng)
        b = self.size(rng, high=self.max_size - 1)
        if b >= a:
            b += 1
        return self.matrix(rng, a), self.matrix(rng, b)

    def triple(self, rng: np.random.Generator) -> Tuple[StringMatrix, StringMatrix, StringMatrix]:
        return self.matrix(rng), self.matrix(rng), self.matrix(rng)

    def neutral_operand(self, rng: np.random.Generator) -> StringMatrix:
        """Operand strictly larger than the 1x1 neutral element."""
        return self.matrix(rng, self.size(rng, low=max(2, self.min_size)))

    def monotony_sizes(self, rng: np.random.Generator, situation: SizeSituation) -> Tuple[int, int, int]:
        """Sizes (a, b, c) with a <= b and c placed as `situation` requires."""
        lo, hi = self.min_size, self.max_size
        if situation is SizeSituation.BELOW_A:
            a = self.size(rng, lo + 1, hi)
            return a, self.size(rng, a, hi), self.size(rng, lo, a - 1)
        if situation is SizeSituation.EQUAL_A:
            a = self.size(rng)
            return a, self.size(rng, a, hi), a
        if situation is SizeSituation.BETWEEN:
            a = self.size(rng, lo, hi - 2)
            b = self.size(rng, a + 2, hi)
            return a, b, self.size(rng, a + 1, b - 1)
        if situation is SizeSituation.EQUAL_B:
            a = self.size(rng)
            b = self.size(rng, a, hi)
            return a, b, b
        a = self.size(rng, lo, hi - 1)
        b = self.size(rng, a, hi - 1)
        return a, b, self.size(rng, b + 1, hi)

    def monotony_triple(self, rng: np.random.Generator,
                        situation: SizeSituation) -> Tuple[StringMatrix, StringMatrix, StringMatrix]:
        return tuple(self.matrix(rng, s) for s in self.monotony_sizes(rng, situation))


def _check_laws(op: Operator, generator: Optional[MatrixGenerator], trials: int, seed: int,
                neutral: StringMatrix, associativity_required: bool) -> List[AxiomReport]:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    generator = generator or MatrixGenerator()
    commutativity = _Tally("commutativity")
    monotony = _Tally("monotony")
    associativity = _Tally("associativity", True if associativity_required else None)
    neutrality = _Tally("neutrality")

    for trial in range(trials):
        rng = trial_rng(seed, trial)

        a, b = generator.pair(rng)
        commutativity.record(op(a, b) == op(b, a), (a, b))

        x, y, z = generator.monotony_triple(rng, SITUATIONS[trial % len(SITUATIONS)])
        monotony.record(SizeOrder(op(x, z)) <= SizeOrder(op(y, z)), (x, y, z))

        a, b, c = generator.triple(rng)
        right_nested, left_nested = op(a, op(b, c)), op(op(a, b), c)
        same_history = history_layers(right_nested) == history_layers(left_nested)
        associativity.record(left(right_nested) == left(left_nested) and same_history, (a, b, c))

        a = generator.neutral_operand(rng)
        neutrality.record(left(op(a, neutral)) == left(pad_to_square(a)), (a, neutral))

    return [t.report() for t in (commutativity, monotony, associativity, neutrality)]


def check_snorm(op: Operator, generator: Optional[MatrixGenerator] = None, trials: int = 1000,
                seed: int = 0, neutral: StringMatrix = NEUTRAL.zero,
                associativity_required: bool = False) -> List[AxiomReport]:
    """
    Commutativity, size monotony, associativity and neutrality of zero.

    Monotony cycles through the five size situations so each is covered once
    every five trials. Associativity compares the left layers and the sorted
    history layers of A*(B*C) and (A*B)*C.
    """
    return _check_laws(op, generator, trials, seed, neutral, associativity_required)


def check_tnorm(op: Operator, generator: Optional[MatrixGenerator] = None, trials: int = 1000,
                seed: int = 0, neutral: StringMatrix = NEUTRAL.one,
                associativity_required: bool = False) -> List[AxiomReport]:
    """As check_snorm with the neutral element one."""
    return _check_laws(op, generator, trials, seed, neutral, associativity_required)


def check_demorgan_extended(a: StringMatrix, b: StringMatrix) -> Tuple[bool, bool]:
    """
    Extended De Morgan on the left projection.

    Returns (thickening side, thinning side):
    L((A^c ⊗ B^c)^c) = L(A ⊙ B) and L((A^c ⊙ B^c)^c) = L(A ⊗ B).
    Equal sizes are accepted and reduce to the constant-matrix branch.
    """
    a, b = pad_to_square(a), pad_to_square(b)
    a_c, b_c = complement_sm(a), complement_sm(b)
    thickening = left(complement_sm(ext_thin(a_c, b_c))) == left(ext_thicken(a, b))
    thinning = left(complement_sm(ext_thicken(a_c, b_c))) == left(ext_thin(a, b))
    return thickening, thinning


def check_demorgan_trials(trials: int = 1000, seed: int = 0,
                          generator: Optional[MatrixGenerator] = None) -> List[AxiomReport]:
    """Extended De Morgan over random unequal-size pairs, plus the equal-size branch."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    generator = generator or MatrixGenerator()
    thickening = _Tally("demorgan-thickening")
    thinning = _Tally("demorgan-thinning")
    constant = _Tally("demorgan-equal-size")

    for trial in range(trials):
        rng = trial_rng(seed, trial)
        a, b = generator.unequal_pair(rng)
        first, second = check_demorgan_extended(a, b)
        thickening.record(first, (a, b))
        thinning.record(second, (a, b))

        size = generator.size(rng)
        a, b = generator.matrix(rng, size), generator.matrix(rng, size)
        constant.record(
            complement_sm(ext_thin(complement_sm(a), complement_sm(b))) == ext_thicken(a, b),
            (a, b),
        )

    return [t.report() for t in (thickening, thinning, constant)]


def check_duality_trials(trials: int = 1000, size: int = 16, seed: int = 0,
                         octet: Optional[MaskOctet] = None) -> List[AxiomReport]:
    """Classical thinning/thickening duality on random images against every octet mask."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    octet = octet or default_thinning_octet()
    thickening = _Tally("duality-thickening")
    thinning = _Tally("duality-thinning")

    for trial in range(trials):
        img = random_image(trial_rng(seed, trial), size, size)
        for mask in octet:
            first, second = check_duality(img, mask)
            thickening.record(first, (img, mask))
            thinning.record(second, (img, mask))

    return [thickening.report(), thinning.report()]


def pairwise_cog(values: Sequence[float]) -> float:
    """Fold COG over values with the weight reset to 1 after every merge."""
    y = values[0]
    for value in values[1:]:
        y, _ = cog_merge((y, 1.0), (value, 1.0))
    return y


def check_cog_merge(trials: int = 100, seed: int = 0, tolerance: float = 1e-9) -> List[AxiomReport]:
    """
    Commutativity and associativity of COG merging.

    Pairwise COG (weights reset between merges) is expected to be
    non-associative; carrying the merged weight makes it order-free.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    commutativity = _Tally("commutativity")
    pairwise = _Tally("associativity-pairwise", expected=False)
    carried = _Tally("associativity-carried")

    for trial in range(trials):
        rng = trial_rng(seed, trial)
        y = rng.uniform(-1.0, 1.0, size=3)
        w = rng.uniform(0.1, 2.0, size=3)
        a, b, c = zip(y, w)

        ab, ba = cog_merge(a, b), cog_merge(b, a)
        commutativity.record(abs(ab[0] - ba[0]) <= tolerance and ab[1] == ba[1], (a, b))

        left_first = pairwise_cog([pairwise_cog(y[:2]), y[2]])
        right_first = pairwise_cog([y[0], pairwise_cog(y[1:])])
        pairwise.record(abs(left_first - right_first) <= tolerance, tuple(y))

        left_first = cog_merge(cog_merge(a, b), c)[0]
        right_first = cog_merge(a, cog_merge(b, c))[0]
        carried.record(abs(left_first - right_first) <= tolerance, (a, b, c))

    return [t.report() for t in (commutativity, pairwise, carried)]


def _extended_target(op: Operator, neutral_check) -> Callable[[int, int], List[AxiomReport]]:
    return lambda trials, seed: neutral_check(op, trials=trials, seed=seed)


def _minmax(trials: int, seed: int) -> List[AxiomReport]:
    reports = []
    for name, check, op in (("max", check_snorm, max_by_size), ("min", check_tnorm, min_by_size)):
        for report in check(op, trials=trials, seed=seed, associativity_required=True):
            report.law = f"{name}-{report.law}"
            reports.append(report)
    return reports


TARGETS: Dict[str, Callable[[int, int], List[AxiomReport]]] = {
    'ext-thin': _extended_target(ext_thin, check_snorm),
    'ext-thicken': _extended_target(ext_thicken, check_tnorm),
    'minmax': _minmax,
    'cog': lambda trials, seed: check_cog_merge(trials, seed),
    'duality': lambda trials, seed: check_duality_trials(trials, seed=seed),
    'duality-extended': lambda trials, seed: check_demorgan_trials(trials, seed),
}


def run_target(target: str, trials: int = 1000, seed: int = 0) -> List[AxiomReport]:
    """
    Run the harness behind one axioms target.

    Raises:
        ConfigurationError: If the target is unknown
    """
    if target not in TARGETS:
        raise ConfigurationError(f"unknown axioms target '{target}', expected one of {sorted(TARGETS)}")
    logger.info("checking %s over %d trials (seed %d)", target, trials, seed)
    return TARGETS[target](trials, seed)


def all_satisfied(reports: Sequence[AxiomReport]) -> bool:
    return all(report.satisfied for report in reports)