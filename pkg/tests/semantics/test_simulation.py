"""Unit tests for the Monte Carlo simulator."""

import unittest
from fractions import Fraction as F

from src.middleware.exceptions import DomainError
from src.models.domain import SemanticChannel, SimulationConfig
from src.semantics import simulate
from src.semantics.simulation import MAX_DENOMINATOR, IntegerSampler
from src.services.gridworld import generate_gridworld
from src.services.nodshake import generate_nodshake
from src.services.schemes import SchemeResolver

GRIDWORLD = generate_gridworld()
NODSHAKE = generate_nodshake()


def run(system, scheme, trials, seed=7, **options):
    encoder, decoder = SchemeResolver(system).resolve(scheme)
    config = SimulationConfig(
        trials=trials, seed=seed, encoder=encoder, decoder=decoder, **options
    )
    return simulate(
        config, system.language, system.channel, system.distortion, system.cost
    )


class TestSimulate(unittest.TestCase):
    """Test cases for simulate."""

    def test_estimate_agrees_with_exact_value(self):
        """Test the first lower frontier encoder against its exact distortion."""
        # Act
        result = run(GRIDWORLD, "lower:1/Q", 100_000)

        # Assert
        self.assertEqual(100_000, result.trials)
        self.assertLessEqual(
            abs(float(result.distortion - F(7, 18))), 4 * result.distortion_stderr
        )
        self.assertLessEqual(
            abs(float(result.cost - F(2, 3))), 4 * result.cost_stderr
        )

    def test_deterministic_system_has_no_spread(self):
        """Test that the nod-shake expression with V*_q never errs."""
        # Act
        result = run(NODSHAKE, "P/Vq", 1000)

        # Assert
        self.assertEqual(F(0), result.distortion)
        self.assertEqual(F(1), result.cost)
        self.assertEqual(0.0, result.distortion_stderr)
        self.assertEqual(0.0, result.cost_stderr)
        self.assertEqual(1000, sum(map(sum, result.confusion)))

    def test_channel_override(self):
        """Test that a swapping channel turns every decision wrong."""
        # Arrange
        one, zero = F(1), F(0)
        swap = SemanticChannel(kernel=((zero, one), (one, zero)))

        # Act
        result = run(NODSHAKE, "P/Vq", 500, channel=swap)

        # Assert
        self.assertEqual(F(1), result.distortion)
        self.assertEqual((0, 0), (result.confusion[0][0], result.confusion[1][1]))

    def test_reproducible_across_workers(self):
        """Test that results depend on the seed only, not on the thread count."""
        # Act
        first = run(GRIDWORLD, "upper:2/Vq", 25_000, seed=3, block_size=1000)
        again = run(GRIDWORLD, "upper:2/Vq", 25_000, seed=3, block_size=1000)
        parallel = run(
            GRIDWORLD, "upper:2/Vq", 25_000, seed=3, block_size=1000, workers=4
        )

        # Assert
        self.assertEqual(first, again)
        self.assertEqual(first, parallel)

    def test_partial_last_block(self):
        """Test that a trial count not divisible by the block size is honoured."""
        # Act
        result = run(GRIDWORLD, "P/Q", 2500, block_size=1000)

        # Assert
        self.assertEqual(2500, sum(map(sum, result.confusion)))
        self.assertEqual(F(1), sum(result.message_frequency))


class TestIntegerSampler(unittest.TestCase):
    """Test cases for the exact integer sampler."""

    def test_denominator_limit(self):
        """Test that a row needing more than 62 bits is refused."""
        # Arrange
        tiny = F(1, 2 * MAX_DENOMINATOR)

        # Act & Assert
        with self.assertRaises(DomainError):
            IntegerSampler(((tiny, 1 - tiny),), "prior")

    def test_cumulative_counts(self):
        """Test the scaled cumulative table of a small matrix."""
        # Act
        sampler = IntegerSampler(((F(1, 2), F(1, 2)), (F(1, 3), F(2, 3))), "encoder")

        # Assert
        self.assertEqual(6, sampler.denominator)
        self.assertEqual([[3, 6], [2, 6]], sampler.cumulative.tolist())


if __name__ == "__main__":
    unittest.main()
