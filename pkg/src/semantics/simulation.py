"""Monte Carlo simulation of one-shot semantic transmissions."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..middleware.exceptions import DomainError
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DistortionMeasure,
    SemanticChannel,
    SemanticLanguage,
    SimulationConfig,
    SimulationResult,
)
from ..models.domain.rational import Matrix
from .core import ZERO, check_dimensions

# Largest common denominator the int64 sampler accepts.
MAX_DENOMINATOR = 2**62


class IntegerSampler:
    """Exact sampler for the rows of a rational stochastic matrix.

    Every row is scaled to one common denominator, so a uniform integer draw
    in [0, denominator) selects an outcome with exactly its probability.
    """

    def __init__(self, rows: Matrix, name: str):
        denominator = math.lcm(*(value.denominator for row in rows for value in row))
        if denominator > MAX_DENOMINATOR:
            raise DomainError(
                f"Common denominator of {name} is too large to sample exactly",
                details={"name": name, "denominator": denominator},
            )
        self.denominator = denominator
        self.cumulative = np.cumsum(
            np.array(
                [
                    [int(value * denominator) for value in row]
                    for row in rows
                ],
                dtype=np.int64,
            ),
            axis=1,
        )

    def sample(self, rng: np.random.Generator, given: np.ndarray) -> np.ndarray:
        """Draw one outcome per entry of `given`, conditioned on that row."""
        draws = rng.integers(0, self.denominator, size=given.shape[0], dtype=np.int64)
        return (self.cumulative[given] <= draws[:, None]).sum(axis=1)


@dataclass(frozen=True)
class BlockCounts:
    """Integer tallies of one block of trials."""

    trials: int
    sent: np.ndarray
    received: np.ndarray
    confusion: np.ndarray


def _run_block(
    trials: int,
    seed: np.random.SeedSequence,
    samplers: Sequence[IntegerSampler],
    n_meanings: int,
    n_messages: int,
) -> BlockCounts:
    prior, encoder, channel, decoder = samplers
    rng = np.random.default_rng(seed)
    meanings = prior.sample(rng, np.zeros(trials, dtype=np.int64))
    sent = encoder.sample(rng, meanings)
    received = channel.sample(rng, sent)
    decoded = decoder.sample(rng, received)
    return BlockCounts(
        trials=trials,
        sent=np.bincount(sent, minlength=n_messages),
        received=np.bincount(received, minlength=n_messages),
        confusion=np.bincount(
            meanings * n_meanings + decoded, minlength=n_meanings * n_meanings
        ).reshape(n_meanings, n_meanings),
    )


def _mean_and_stderr(
    counts: Sequence[int], values: Sequence[Fraction], trials: int
) -> tuple[Fraction, float]:
    total = sum((count * value for count, value in zip(counts, values)), ZERO)
    squares = sum((count * value * value for count, value in zip(counts, values)), ZERO)
    mean = total / trials
    if trials < 2:
        return mean, 0.0
    variance = (squares - total * total / trials) / (trials - 1)
    return mean, math.sqrt(float(variance) / trials)


def simulate(
    config: SimulationConfig,
    lang: SemanticLanguage,
    channel: SemanticChannel,
    distortion: DistortionMeasure,
    cost: CostFunction,
) -> SimulationResult:
    """Estimate the average cost and distortion of a scheme pair by sampling.

    Each trial draws w from the transmitter prior, s from the encoder, the
    received message from the channel and the decoded meaning from the
    decoder. Trials run in blocks seeded from one SeedSequence and the
    block tallies are combined in block order, so the result depends only
    on the seed, the trial count and the block size.

    Args:
        config: Trials, seed, schemes and parallelism.
        lang: Semantic language supplying the prior.
        channel: Semantic channel, unless the config overrides it.
        distortion: Distortion measure.
        cost: Message costs.

    Returns:
        SimulationResult: Exact sample means, standard errors and tallies.
    """
    channel = config.channel or channel
    check_dimensions(
        lang,
        channel=channel,
        distortion=distortion,
        cost=cost,
        encoder=config.encoder,
        decoder=config.decoder,
    )
    n_meanings, n_messages = lang.n_meanings, lang.n_messages
    samplers = (
        IntegerSampler((lang.tx_prior,), "prior"),
        IntegerSampler(config.encoder.matrix, "encoder"),
        IntegerSampler(channel.kernel, "channel"),
        IntegerSampler(config.decoder.matrix, "decoder"),
    )
    sizes = [config.block_size] * (config.trials // config.block_size)
    if config.trials % config.block_size:
        sizes.append(config.trials % config.block_size)
    seeds = np.random.SeedSequence(config.seed).spawn(len(sizes))

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        blocks = list(
            pool.map(
                lambda job: _run_block(*job, samplers, n_meanings, n_messages),
                zip(sizes, seeds),
            )
        )

    sent = [int(sum(int(block.sent[m]) for block in blocks)) for m in range(n_messages)]
    received = [
        int(sum(int(block.received[m]) for block in blocks)) for m in range(n_messages)
    ]
    confusion = tuple(
        tuple(
            int(sum(int(block.confusion[n][k]) for block in blocks))
            for k in range(n_meanings)
        )
        for n in range(n_meanings)
    )
    trials = config.trials
    mean_cost, cost_stderr = _mean_and_stderr(sent, cost.costs, trials)
    pairs = [(n, k) for n in range(n_meanings) for k in range(n_meanings)]
    mean_distortion, distortion_stderr = _mean_and_stderr(
        [confusion[n][k] for n, k in pairs],
        [distortion.matrix[n][k] for n, k in pairs],
        trials,
    )
    logger.debug(
        "Simulation finished",
        extra={"trials": trials, "blocks": len(blocks), "workers": config.workers},
    )
    return SimulationResult(
        trials=trials,
        cost=mean_cost,
        distortion=mean_distortion,
        cost_stderr=cost_stderr,
        distortion_stderr=distortion_stderr,
        message_frequency=tuple(Fraction(count, trials) for count in received),
        confusion=confusion,
    )
