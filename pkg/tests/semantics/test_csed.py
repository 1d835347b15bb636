"""Unit tests for combined semantic encoding and decoding."""

import random
import unittest
from fractions import Fraction as F

from hypothesis import given, settings

from src.models.domain import (
    CostFunction,
    CsedMixture,
    DistortionMeasure,
    EncodingScheme,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
)
from src.semantics import (
    bayes_interpretation,
    build_frontier,
    check_theorem4,
    compare_strategies,
    csed_distortion_cost_function,
    csed_evaluate,
    csed_operating_points,
    csed_region,
    decoder_distortion,
    envelope_value,
    expression_cost,
    global_optimum,
    map_decoder,
)
from src.semantics.hull import envelope_contains
from src.services.gridworld import generate_gridworld
from src.services.nodshake import generate_nodshake
from tests.factories import permutation_system, systems

GRIDWORLD = generate_gridworld()
NODSHAKE = generate_nodshake()


def args(system):
    return system.language, system.channel, system.distortion, system.cost


def two_meaning_system(owners):
    """Error-free Hamming system with p = q = (2/3, 1/3) and costs (0, 1)."""
    prior = (F(2, 3), F(1, 3))
    expression = tuple(
        tuple(F(int(owner == m)) for m in range(2)) for owner in owners
    )
    return SemanticSystem(
        language=SemanticLanguage(
            meanings=("w0", "w1"),
            messages=("s0", "s1"),
            expression=expression,
            interpretation=bayes_interpretation(expression, prior),
            tx_prior=prior,
            rx_prior=prior,
        ),
        channel=SemanticChannel.error_free(2),
        distortion=DistortionMeasure.hamming(2),
        cost=CostFunction(costs=(F(0), F(1))),
    )


def verdict(system):
    frontier = build_frontier(*args(system))
    return check_theorem4(
        system.language, system.channel, system.distortion, frontier
    ).verdict


class TestGridWorldCsed(unittest.TestCase):
    """Test cases for CSED in the grid world."""

    def test_region_reaches_zero_distortion(self):
        """Test that UU for A and RR for B decode perfectly with V*_q."""
        # Act
        region = csed_region(*args(GRIDWORLD))
        points = {point.label: point for point in region.points}

        # Assert
        self.assertEqual((F(10, 3), F(0)), points["lower-2"].xy)
        self.assertIn((F(10, 3), F(0)), [point.xy for point in region.lower])
        self.assertEqual(F(0), csed_distortion_cost_function(region, F(10, 3)))

    def test_region_holds_every_redecoded_point(self):
        """Test that all twelve re-decoded frontier encoders lie in the hull."""
        # Act
        region = csed_region(*args(GRIDWORLD))

        # Assert
        self.assertEqual(12, len(region.points))
        for point in region.points:
            self.assertTrue(
                envelope_contains(
                    region.lower, region.upper, point.cost, point.distortion
                ),
                point.label,
            )

    def test_mixture_of_two_operating_points(self):
        """Test an even time share between the first two frontier moves."""
        # Arrange
        lang = GRIDWORLD.language
        mixture = CsedMixture(
            weights=(F(1, 2), F(1, 2)),
            encoders=(
                EncodingScheme.deterministic((3, 0), n_messages=lang.n_messages),
                EncodingScheme.deterministic((3, 6), n_messages=lang.n_messages),
            ),
            decoder=map_decoder(lang, GRIDWORLD.channel, GRIDWORLD.distortion),
        )

        # Act
        point = csed_evaluate(mixture, *args(GRIDWORLD))

        # Assert
        self.assertEqual((F(2), F(1, 3)), point.xy)
        self.assertEqual(2, len(point.mixture))
        self.assertIsNone(point.encoder)

    def test_mixture_from_frontier(self):
        """Test that a one-hot weight vector reproduces a frontier vertex."""
        # Arrange
        lang = GRIDWORLD.language
        frontier = build_frontier(*args(GRIDWORLD))
        weights = tuple(
            F(int(i == 2)) for i in range(len(frontier.lower) + len(frontier.upper))
        )
        decoder = map_decoder(lang, GRIDWORLD.channel, GRIDWORLD.distortion)

        # Act
        mixture = CsedMixture.from_frontier(frontier, weights, decoder)
        point = csed_evaluate(mixture, *args(GRIDWORLD))

        # Assert
        self.assertEqual((F(10, 3), F(0)), point.xy)
        self.assertEqual((3, 6), point.encoder)

    def test_invalid_mixture_weights(self):
        """Test that weights must be a distribution."""
        # Arrange
        decoder = map_decoder(
            GRIDWORLD.language, GRIDWORLD.channel, GRIDWORLD.distortion
        )
        encoder = EncodingScheme.deterministic((0, 0), n_messages=14)

        # Act & Assert
        with self.assertRaises(ValueError):
            CsedMixture(weights=(F(1, 2),), encoders=(encoder,), decoder=decoder)

    def test_comparison(self):
        """Test that CSED beats both one-sided strategies."""
        # Act
        comparison = compare_strategies(*args(GRIDWORLD))

        # Assert
        self.assertEqual(F(1, 6), comparison.encoding_min)
        self.assertEqual(F(6, 19), comparison.decoding_min)
        self.assertEqual(F(0), comparison.csed_operating_min)
        self.assertEqual(F(3347, 10260), comparison.baseline.distortion)
        self.assertTrue(comparison.csed_beats_encoding)
        self.assertTrue(comparison.csed_beats_decoding)

    def test_sufficient_conditions(self):
        """Test that unequal priors fail the sufficient conditions."""
        # Arrange
        frontier = build_frontier(*args(GRIDWORLD))

        # Act
        report = check_theorem4(
            GRIDWORLD.language, GRIDWORLD.channel, GRIDWORLD.distortion, frontier
        )

        # Assert
        self.assertTrue(report.error_free)
        self.assertTrue(report.symmetric)
        self.assertFalse(report.priors_equal)
        self.assertFalse(report.verdict)


class TestNodShakeCsed(unittest.TestCase):
    """Test cases for the misaligned nod-shake language."""

    def test_operating_point_loses(self):
        """Test that the operating point is worse than both strategies."""
        # Act
        comparison = compare_strategies(*args(NODSHAKE))

        # Assert
        self.assertEqual(F(0), comparison.encoding_min)
        self.assertEqual(F(0), comparison.decoding_min)
        self.assertEqual(F(1), comparison.csed_operating_min)
        self.assertEqual([(F(1), F(0))], [p.xy for p in comparison.csed_lower])
        self.assertTrue(comparison.csed_loses_to_encoding)
        self.assertFalse(comparison.csed_beats_encoding)
        self.assertFalse(comparison.csed_beats_decoding)

    def test_operating_points(self):
        """Test the single lower-chain encoder decoded with the identity."""
        # Act
        points = csed_operating_points(*args(NODSHAKE))

        # Assert
        self.assertEqual([(F(1), F(1))], [point.xy for point in points])
        self.assertEqual((0, 1), points[0].decoder)

    def test_only_self_consistency_fails(self):
        """Test that the inverted interpretation is the one failed condition."""
        # Arrange
        frontier = build_frontier(*args(NODSHAKE))

        # Act
        report = check_theorem4(
            NODSHAKE.language, NODSHAKE.channel, NODSHAKE.distortion, frontier
        )

        # Assert
        self.assertFalse(report.self_consistent)
        self.assertTrue(report.error_free)
        self.assertTrue(report.symmetric)
        self.assertTrue(report.priors_equal)
        self.assertTrue(report.phi_argmin_disjoint)
        self.assertTrue(report.psi_argmin_disjoint)
        self.assertEqual((0, 1), report.used_messages)


class TestCsedRegionProperties(unittest.TestCase):
    """Property checks on random systems."""

    @settings(deadline=None, max_examples=50)
    @given(systems())
    def test_region_holds_every_redecoded_point(self, system):
        """Test that the hull contains each point it was built from."""
        # Arrange
        frontier = build_frontier(*args(system))

        # Act
        region = csed_region(*args(system), frontier=frontier)

        # Assert
        self.assertEqual(
            len(frontier.lower) + len(frontier.upper), len(region.points)
        )
        for point in region.points:
            self.assertTrue(
                envelope_contains(
                    region.lower, region.upper, point.cost, point.distortion
                ),
                point.label,
            )


class TestSufficientConditions(unittest.TestCase):
    """Checks on systems meeting every sufficient condition."""

    def setUp(self):
        """Set up seeded permutation systems, sorted and shuffled."""
        rng = random.Random(31)
        self.systems = [permutation_system(rng, rng.randint(2, 4)) for _ in range(20)]
        self.shuffled = [
            permutation_system(rng, rng.randint(2, 4), shuffle=True, hamming=False)
            for _ in range(20)
        ]

    def test_verdict_holds_for_shuffled_owners(self):
        """Test the verdict with permuted owners and a non-Hamming distortion."""
        for system in self.shuffled:
            # Act & Assert
            self.assertTrue(verdict(system))

    def test_shuffled_owners_keep_the_guarantees(self):
        """Test CSED bounds that hold whatever message each meaning owns."""
        for system in self.shuffled:
            # Arrange
            lang, channel, distortion, cost = args(system)
            level = expression_cost(lang, cost)
            frontier = build_frontier(lang, channel, distortion, cost)
            optimum = global_optimum(lang, channel, distortion, cost)

            # Act
            region = csed_region(lang, channel, distortion, cost, frontier=frontier)

            # Assert
            self.assertEqual(F(0), csed_distortion_cost_function(region, level))
            for point in region.lower:
                self.assertLessEqual(
                    envelope_value(optimum, point.cost), point.distortion
                )
            for vertex in frontier.lower_points:
                self.assertLessEqual(
                    csed_distortion_cost_function(region, vertex.cost),
                    vertex.distortion,
                )

    def test_csed_exceeds_joint_optimum_only_beyond_expression_cost(self):
        """Test that every gap to the joint optimum lies above L_P."""
        for system in self.systems:
            # Arrange
            level = expression_cost(system.language, system.cost)
            optimum = global_optimum(*args(system))

            # Act
            region = csed_region(*args(system))
            gaps = [
                point.cost
                for point in region.lower
                if point.distortion > envelope_value(optimum, point.cost)
            ]

            # Assert
            for gap_cost in gaps:
                self.assertGreater(gap_cost, level)

    def test_csed_leaves_joint_optimum_above_expression_cost(self):
        """Test a sorted pair that matches the optimum up to L_P and not after."""
        # Arrange
        system = two_meaning_system((0, 1))
        optimum = global_optimum(*args(system))

        # Act
        region = csed_region(*args(system))

        # Assert
        self.assertTrue(verdict(system))
        self.assertEqual(F(1, 3), expression_cost(system.language, system.cost))
        self.assertEqual(
            [(F(0), F(1, 3)), (F(1, 3), F(0)), (F(1), F(2, 3))],
            [point.xy for point in region.lower],
        )
        for level in (F(0), F(1, 6), F(1, 3)):
            self.assertEqual(
                envelope_value(optimum, level),
                csed_distortion_cost_function(region, level),
            )
        self.assertEqual(F(1, 3), envelope_value(optimum, F(1)))
        self.assertEqual(F(2, 3), csed_distortion_cost_function(region, F(1)))

    def test_shuffled_owners_leave_joint_optimum_below_expression_cost(self):
        """Test that costly owners for likely meanings break the match below L_P."""
        # Arrange
        system = two_meaning_system((1, 0))
        optimum = global_optimum(*args(system))

        # Act
        region = csed_region(*args(system))

        # Assert
        self.assertTrue(verdict(system))
        self.assertEqual(F(2, 3), expression_cost(system.language, system.cost))
        self.assertEqual(F(0), csed_distortion_cost_function(region, F(2, 3)))
        self.assertEqual(F(0), envelope_value(optimum, F(1, 3)))
        self.assertEqual(F(1, 3), csed_distortion_cost_function(region, F(1, 3)))

    def test_verdict_holds(self):
        """Test that every condition and hypothesis is met."""
        for system in self.systems:
            # Arrange
            frontier = build_frontier(*args(system))

            # Act
            report = check_theorem4(
                system.language, system.channel, system.distortion, frontier
            )

            # Assert
            self.assertTrue(report.verdict)

    def test_csed_matches_joint_optimum_up_to_expression_cost(self):
        """Test CSED against the jointly optimized pairs."""
        for system in self.systems:
            # Arrange
            lang = system.language
            level = expression_cost(lang, system.cost)
            optimum = global_optimum(*args(system))

            # Act
            region = csed_region(*args(system))

            # Assert
            for point in region.lower:
                best = envelope_value(optimum, point.cost)
                self.assertGreaterEqual(point.distortion, best)
                if point.cost <= level:
                    self.assertEqual(best, point.distortion)

    def test_csed_never_above_encoding(self):
        """Test that re-decoding with V*_q never hurts on the lower chain."""
        for system in self.systems:
            # Arrange
            frontier = build_frontier(*args(system))

            # Act
            region = csed_region(*args(system), frontier=frontier)

            # Assert
            for vertex in frontier.lower_points:
                self.assertLessEqual(
                    csed_distortion_cost_function(region, vertex.cost),
                    vertex.distortion,
                )

    def test_csed_at_expression_cost_matches_decoding(self):
        """Test that CSED at L_P equals D_{P,V*_q}, which is zero here."""
        for system in self.systems:
            # Arrange
            lang, channel, distortion, cost = args(system)
            level = expression_cost(lang, cost)
            decoder = map_decoder(lang, channel, distortion)

            # Act
            region = csed_region(lang, channel, distortion, cost)

            # Assert
            self.assertEqual(F(0), csed_distortion_cost_function(region, level))
            self.assertEqual(
                F(0), decoder_distortion(decoder, lang, channel, distortion)
            )


if __name__ == "__main__":
    unittest.main()
