"""Unit tests for the basic functionals of a semantic language."""

import math
import unittest
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from src.middleware.exceptions import DimensionMismatchError, DomainError
from src.models.domain import (
    CostFunction,
    EncodingScheme,
    SemanticLanguage,
)
from src.semantics import (
    average_cost,
    average_distortion,
    average_distortion_enc,
    bayes_interpretation,
    check_self_consistency,
    expression_encoder,
    interpretation_decoder,
    is_self_consistent,
    phi,
    phi_table,
    semantic_entropy,
    validate_language,
    validate_system,
)
from src.semantics.encoding import encoder_point
from src.services.gridworld import generate_gridworld
from tests.factories import random_encoder, systems

GRIDWORLD = generate_gridworld()


def two_by_two(expression, interpretation, prior=(F(1, 2), F(1, 2))):
    return SemanticLanguage(
        meanings=("a", "b"),
        messages=("x", "y"),
        expression=expression,
        interpretation=interpretation,
        tx_prior=prior,
        rx_prior=prior,
    )


class TestValidation(unittest.TestCase):
    """Test cases for language validation."""

    def test_gridworld_is_valid(self):
        """Test that the generated grid world passes every check."""
        # Act
        report = validate_system(GRIDWORLD)

        # Assert
        self.assertTrue(report.passed)

    def test_row_not_summing_to_one_is_reported(self):
        """Test that a defective expression row is reported with its index."""
        # Arrange
        lang = two_by_two(
            expression=((F(1, 2), F(1, 4)), (F(0), F(1))),
            interpretation=((F(1), F(0)), (F(0), F(1))),
        )

        # Act
        report = validate_language(lang)

        # Assert
        self.assertFalse(report.passed)
        self.assertEqual("expression", report.issues[0].section)
        self.assertEqual(0, report.issues[0].index)

    def test_negative_and_unsorted_costs_are_reported(self):
        """Test that cost sign and order violations are both reported."""
        # Arrange
        lang = two_by_two(
            expression=((F(1), F(0)), (F(0), F(1))),
            interpretation=((F(1), F(0)), (F(0), F(1))),
        )
        cost = CostFunction(costs=(F(2), F(-1)))

        # Act
        report = validate_language(lang, cost=cost)

        # Assert
        self.assertEqual(["cost", "cost"], [issue.section for issue in report.issues])

    def test_shape_mismatch_is_refused_at_construction(self):
        """Test that a language with a missing expression row cannot be built."""
        # Act & Assert
        with self.assertRaises(DimensionMismatchError):
            two_by_two(
                expression=((F(1), F(0)),),
                interpretation=((F(1), F(0)), (F(0), F(1))),
            )


class TestSelfConsistency(unittest.TestCase):
    """Test cases for the Bayes posterior condition."""

    def test_gridworld_counterexample(self):
        """Test that the first violation in the grid world is at (A, ∅)."""
        # Act
        report = check_self_consistency(GRIDWORLD.language)

        # Assert
        self.assertFalse(report.consistent)
        self.assertEqual((0, 0), (report.meaning, report.message))
        self.assertEqual(F(19, 37), report.expected)
        self.assertEqual(F(1, 3), report.actual)

    def test_bayes_interpretation_is_self_consistent(self):
        """Test that the Bayes posterior passes the check, unsent messages included."""
        # Arrange
        expression = ((F(1, 2), F(1, 2), F(0)), (F(1, 4), F(3, 4), F(0)))
        prior = (F(1, 3), F(2, 3))

        # Act
        interpretation = bayes_interpretation(expression, prior)
        lang = SemanticLanguage(
            meanings=("a", "b"),
            messages=("x", "y", "z"),
            expression=expression,
            interpretation=interpretation,
            tx_prior=prior,
            rx_prior=prior,
        )

        # Assert
        self.assertEqual((F(1, 2), F(1, 2)), interpretation[0])
        self.assertEqual(prior, interpretation[2])
        self.assertTrue(is_self_consistent(lang))
        self.assertEqual((2,), check_self_consistency(lang).vacuous)


class TestFunctionals(unittest.TestCase):
    """Test cases for phi, average cost and average distortion."""

    def test_phi_is_one_minus_interpretation_under_hamming(self):
        """Test phi(A, U) = 1 - q(A|U) on the error-free grid world."""
        # Arrange
        lang = GRIDWORLD.language

        # Act
        value = phi(0, 1, lang, GRIDWORLD.channel, GRIDWORLD.distortion)

        # Assert
        self.assertEqual(F(3, 5), value)

    def test_language_used_as_is(self):
        """Test L_P and D_P,Q of the grid world."""
        # Arrange
        lang = GRIDWORLD.language
        encoder = expression_encoder(lang)

        # Act
        cost = average_cost(encoder, lang, GRIDWORLD.cost)
        distortion = average_distortion(
            encoder,
            interpretation_decoder(lang),
            lang,
            GRIDWORLD.channel,
            GRIDWORLD.distortion,
        )

        # Assert
        self.assertEqual(F(1841, 513), cost)
        self.assertEqual(F(3347, 10260), distortion)

    @given(st.tuples(st.integers(0, 13), st.integers(0, 13)))
    def test_deterministic_encoder_evaluations_agree(self, indices):
        """Test the phi shortcut, the full sum and encoder_point give one value."""
        # Arrange
        lang, channel, distortion = (
            GRIDWORLD.language,
            GRIDWORLD.channel,
            GRIDWORLD.distortion,
        )
        encoder = EncodingScheme.deterministic(indices, n_messages=lang.n_messages)
        table = phi_table(lang, channel, distortion)

        # Act
        shortcut = average_distortion_enc(encoder, lang, channel, distortion)
        full = average_distortion(
            encoder, interpretation_decoder(lang), lang, channel, distortion
        )
        point = encoder_point(indices, lang, GRIDWORLD.cost, table)

        # Assert
        self.assertEqual(shortcut, full)
        self.assertEqual(full, point.distortion)

    @settings(deadline=None, max_examples=50)
    @given(systems(), st.randoms(use_true_random=False))
    def test_stochastic_encoder_evaluations_agree(self, system, rng):
        """Test the phi shortcut matches the full sum for stochastic encoders."""
        # Arrange
        lang, channel, distortion = (
            system.language,
            system.channel,
            system.distortion,
        )
        encoder = random_encoder(rng, lang.n_meanings, lang.n_messages)

        # Act
        shortcut = average_distortion_enc(encoder, lang, channel, distortion)
        full = average_distortion(
            encoder, interpretation_decoder(lang), lang, channel, distortion
        )

        # Assert
        self.assertEqual(full, shortcut)

    @settings(deadline=None, max_examples=50)
    @given(systems(), st.randoms(use_true_random=False))
    def test_average_cost_within_message_cost_range(self, system, rng):
        """Test L_min <= L_U <= L_max for any stochastic encoder."""
        # Arrange
        lang = system.language
        encoder = random_encoder(rng, lang.n_meanings, lang.n_messages)

        # Act
        cost = average_cost(encoder, lang, system.cost)

        # Assert
        self.assertLessEqual(system.cost.l_min, cost)
        self.assertLessEqual(cost, system.cost.l_max)


class TestSemanticEntropy(unittest.TestCase):
    """Test cases for semantic entropy."""

    def test_entropy_of_satisfying_mass(self):
        """Test -log2 of the prior mass of the satisfying worlds."""
        # Act
        value = semantic_entropy((F(1, 4), F(1, 4), F(1, 2)), (True, False, True))

        # Assert
        self.assertAlmostEqual(-math.log2(0.75), value)

    def test_no_satisfying_mass(self):
        """Test that a message no world with mass satisfies is refused."""
        # Act & Assert
        with self.assertRaises(DomainError):
            semantic_entropy((F(0), F(1)), (True, False))

    def test_length_mismatch(self):
        """Test that prior and satisfaction table must align."""
        # Act & Assert
        with self.assertRaises(DimensionMismatchError):
            semantic_entropy((F(1),), (True, False))


if __name__ == "__main__":
    unittest.main()
