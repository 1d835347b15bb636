"""Seeded builders of semantic systems shared by the test suites."""

import random
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from src.models.domain import (
    CostFunction,
    DistortionMeasure,
    EncodingScheme,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
)
from src.semantics import bayes_interpretation

SPECS_DIR = Path(__file__).resolve().parents[1] / "specs"


def random_distribution(rng: random.Random, size: int, positive: bool = False):
    """Random rational probability vector with small denominators."""
    low = 1 if positive else 0
    weights = [rng.randint(low, 4) for _ in range(size)]
    if not any(weights):
        weights[rng.randrange(size)] = 1
    total = sum(weights)
    return tuple(Fraction(weight, total) for weight in weights)


def random_system(
    rng: random.Random,
    n_meanings: int,
    n_messages: int,
    error_free: bool = False,
    hamming: bool = False,
) -> SemanticSystem:
    """Random system with positive priors and cost-sorted messages."""
    costs = sorted(rng.randint(0, 5) for _ in range(n_messages))
    if error_free:
        channel = SemanticChannel.error_free(n_messages)
    else:
        channel = SemanticChannel(
            kernel=tuple(
                random_distribution(rng, n_messages) for _ in range(n_messages)
            )
        )
    if hamming:
        distortion = DistortionMeasure.hamming(n_meanings)
    else:
        distortion = DistortionMeasure(
            matrix=tuple(
                tuple(
                    Fraction(0) if i == j else Fraction(rng.randint(0, 3))
                    for j in range(n_meanings)
                )
                for i in range(n_meanings)
            )
        )
    return SemanticSystem(
        language=SemanticLanguage(
            meanings=tuple(f"w{n}" for n in range(n_meanings)),
            messages=tuple(f"s{m}" for m in range(n_messages)),
            expression=tuple(
                random_distribution(rng, n_messages) for _ in range(n_meanings)
            ),
            interpretation=tuple(
                random_distribution(rng, n_meanings) for _ in range(n_messages)
            ),
            tx_prior=random_distribution(rng, n_meanings, positive=True),
            rx_prior=random_distribution(rng, n_meanings, positive=True),
        ),
        channel=channel,
        distortion=distortion,
        cost=CostFunction(costs=tuple(Fraction(cost) for cost in costs)),
    )


def random_encoder(
    rng: random.Random, n_meanings: int, n_messages: int
) -> EncodingScheme:
    """Stochastic encoder, usually with several messages per meaning."""
    return EncodingScheme(
        matrix=tuple(random_distribution(rng, n_messages) for _ in range(n_meanings))
    )


@st.composite
def systems(
    draw: st.DrawFn,
    max_meanings: int = 3,
    max_messages: int = 5,
    hamming: bool = False,
) -> SemanticSystem:
    """Hypothesis strategy over small random systems with noisy channels."""
    rng = draw(st.randoms(use_true_random=False))
    n_meanings = draw(st.integers(1, max_meanings))
    n_messages = draw(st.integers(1, max_messages))
    return random_system(rng, n_meanings, n_messages, hamming=hamming)


def permutation_system(
    rng: random.Random, size: int, shuffle: bool = False, hamming: bool = True
) -> SemanticSystem:
    """Self-consistent system where every meaning owns one message.

    Priors are strictly decreasing and costs strictly increasing, the
    channel is error-free. Meaning k owns message k unless shuffle is set,
    in which case the owners are a random permutation. Without hamming the
    distortion is symmetric with positive off-diagonal entries.
    """
    weights = sorted(rng.sample(range(1, 20), size), reverse=True)
    prior = tuple(Fraction(weight, sum(weights)) for weight in weights)
    costs = sorted(rng.sample(range(0, 10), size))
    owned = list(range(size))
    if shuffle:
        rng.shuffle(owned)
    expression = tuple(
        tuple(Fraction(int(owned[n] == m)) for m in range(size)) for n in range(size)
    )
    if hamming:
        distortion = DistortionMeasure.hamming(size)
    else:
        upper = {(i, j): rng.randint(1, 3) for i in range(size) for j in range(i)}
        distortion = DistortionMeasure(
            matrix=tuple(
                tuple(
                    Fraction(0) if i == j else Fraction(upper[max(i, j), min(i, j)])
                    for j in range(size)
                )
                for i in range(size)
            )
        )
    return SemanticSystem(
        language=SemanticLanguage(
            meanings=tuple(f"w{n}" for n in range(size)),
            messages=tuple(f"s{m}" for m in range(size)),
            expression=expression,
            interpretation=bayes_interpretation(expression, prior),
            tx_prior=prior,
            rx_prior=prior,
        ),
        channel=SemanticChannel.error_free(size),
        distortion=distortion,
        cost=CostFunction(costs=tuple(Fraction(cost) for cost in costs)),
    )
