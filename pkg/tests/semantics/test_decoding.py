"""Unit tests for semantic decoding."""

import random
import unittest
from fractions import Fraction as F

from hypothesis import given, settings

from src.middleware.exceptions import DomainError, NonHammingDistortionError
from src.models.domain import (
    CostFunction,
    DecodingScheme,
    DistortionMeasure,
    PriorChoice,
    Refinement,
    SemanticChannel,
    SemanticLanguage,
)
from src.semantics import (
    average_distortion,
    baseline_distortion,
    decoder_distortion,
    decoding_gap,
    decoding_region,
    expression_cost,
    expression_encoder,
    hamming_map_distortion,
    hamming_optimality_check,
    map_decoder,
    psi_table,
    received_likelihood,
    refine_interpretation,
    refinement_plan,
    simplex_embed,
)
from src.services.gridworld import generate_gridworld
from src.services.nodshake import generate_nodshake
from tests.factories import random_system, systems

GRIDWORLD = generate_gridworld()
HALF = (F(1, 2), F(1, 2))


def removal_language():
    third = F(1, 3)
    return SemanticLanguage(
        meanings=("a", "b", "c"),
        messages=("s0", "s1"),
        expression=((F(1), F(0)), (F(1), F(0)), (F(0), F(1))),
        interpretation=((F(1, 2), F(1, 4), F(1, 4)), (F(0), F(0), F(1))),
        tx_prior=(third, third, third),
        rx_prior=(third, third, third),
    )


REMOVAL_DISTORTION = DistortionMeasure(
    matrix=((F(0), F(1), F(3)), (F(1), F(0), F(3)), (F(3), F(3), F(0)))
)


class TestGridWorldDecoding(unittest.TestCase):
    """Test cases for decoding the grid world."""

    def setUp(self):
        """Set up test fixtures."""
        self.lang = GRIDWORLD.language
        self.channel = GRIDWORLD.channel
        self.distortion = GRIDWORLD.distortion

    def test_expression_cost(self):
        """Test L_P of the grid-world language."""
        # Act
        level = expression_cost(self.lang, GRIDWORLD.cost)

        # Assert
        self.assertEqual(F(1841, 513), level)

    def test_decoding_region(self):
        """Test both ends of the decoding segment."""
        # Act
        region = decoding_region(
            self.lang, self.channel, self.distortion, GRIDWORLD.cost
        )

        # Assert
        self.assertEqual(F(1841, 513), region.cost)
        self.assertEqual(F(6, 19), region.lower.distortion)
        self.assertEqual(F(13, 19), region.upper.distortion)
        self.assertEqual(region.lower.decoder, region.lower_decoder.indices)

    def test_baseline_and_gap(self):
        """Test D_{P,Q} and how much the receiver-prior MAP decoder saves."""
        # Act
        baseline = baseline_distortion(self.lang, self.channel, self.distortion)
        gap = decoding_gap(self.lang, self.channel, self.distortion)

        # Assert
        self.assertEqual(F(3347, 10260), baseline)
        self.assertEqual(F(107, 10260), gap)

    def test_receiver_map_decoder(self):
        """Test the indices and distortion of V*_q."""
        # Act
        decoder = map_decoder(self.lang, self.channel, self.distortion)

        # Assert
        self.assertEqual((0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1), decoder.indices)
        self.assertEqual(
            F(6, 19),
            decoder_distortion(decoder, self.lang, self.channel, self.distortion),
        )
        self.assertEqual(
            F(6, 19), hamming_map_distortion(self.lang, self.channel, self.distortion)
        )

    def test_receiver_prior_is_hamming_optimal(self):
        """Test that decoding with q loses nothing on any grid-world message."""
        # Act
        report = hamming_optimality_check(self.lang, self.channel, self.distortion)

        # Assert
        self.assertTrue(report.optimal)
        self.assertEqual((), report.violations)

    def test_simplex_embedding_of_empty_message(self):
        """Test the normalized posterior of ∅ under the receiver prior."""
        # Act
        point = simplex_embed(0, self.lang, self.channel)

        # Assert
        self.assertEqual((F(19, 28), F(9, 28)), point.alpha)
        self.assertEqual(0, point.region)
        self.assertEqual((0,), point.regions)

    def test_no_refinement_applies(self):
        """Test that every grid-world message keeps its interpretation."""
        # Act
        plan = refinement_plan(self.lang, self.channel, self.distortion)
        refined = refine_interpretation(self.lang, self.channel, self.distortion)

        # Assert
        self.assertEqual(14, len(plan))
        self.assertTrue(all(kind == Refinement.NONE for kind, _ in plan))
        self.assertEqual(self.lang.interpretation, refined.matrix)


class TestDecodingEdgeCases(unittest.TestCase):
    """Test cases for small hand-built languages."""

    def test_psi_table_needs_transmitter_prior_for_distortion(self):
        """Test that a receiver-prior psi table is refused."""
        # Arrange
        lang, channel, distortion = (
            GRIDWORLD.language,
            GRIDWORLD.channel,
            GRIDWORLD.distortion,
        )
        table = psi_table(lang, channel, distortion, prior=PriorChoice.RX)
        decoder = map_decoder(lang, channel, distortion)

        # Act & Assert
        with self.assertRaises(DomainError):
            decoder_distortion(decoder, lang, channel, distortion, table)

    def test_hamming_optimality_violation(self):
        """Test a receiver whose prior flips the MAP decision."""
        # Arrange
        lang = SemanticLanguage(
            meanings=("a", "b"),
            messages=("x", "y"),
            expression=((F(1), F(0)), (F(1), F(0))),
            interpretation=(HALF, HALF),
            tx_prior=(F(2, 3), F(1, 3)),
            rx_prior=(F(1, 3), F(2, 3)),
        )

        # Act
        report = hamming_optimality_check(
            lang, SemanticChannel.error_free(2), DistortionMeasure.hamming(2)
        )

        # Assert
        self.assertFalse(report.optimal)
        self.assertEqual(1, len(report.messages))
        self.assertEqual((1,), report.violations[0].rx_argmax)
        self.assertEqual((0,), report.violations[0].tx_argmax)

    def test_shared_prior_is_hamming_optimal(self):
        """Test that the nod-shake receiver decodes optimally."""
        # Arrange
        system = generate_nodshake()

        # Act
        report = hamming_optimality_check(
            system.language, system.channel, system.distortion
        )

        # Assert
        self.assertTrue(report.optimal)

    def test_hamming_only_operations(self):
        """Test that Hamming-only operations refuse another distortion."""
        # Arrange
        lang = removal_language()
        channel = SemanticChannel.error_free(2)

        # Act & Assert
        with self.assertRaises(NonHammingDistortionError):
            hamming_optimality_check(lang, channel, REMOVAL_DISTORTION)
        with self.assertRaises(NonHammingDistortionError):
            decoding_gap(lang, channel, REMOVAL_DISTORTION)

    def test_unreachable_message_has_no_simplex_point(self):
        """Test that embedding a never-received message is a domain error."""
        # Arrange
        lang = removal_language()
        expression = ((F(1), F(0)),) * 3
        lang = lang.model_copy(update={"expression": expression})

        # Act & Assert
        with self.assertRaises(DomainError):
            simplex_embed(1, lang, SemanticChannel.error_free(2))

    def test_collapse_onto_only_sender(self):
        """Test that a message sent by one meaning collapses onto it."""
        # Arrange
        lang = SemanticLanguage(
            meanings=("a", "b"),
            messages=("x", "y"),
            expression=((F(1), F(0)), (F(0), F(1))),
            interpretation=(HALF, (F(0), F(1))),
            tx_prior=HALF,
            rx_prior=HALF,
        )
        channel = SemanticChannel.error_free(2)
        hamming = DistortionMeasure.hamming(2)

        # Act
        plan = refinement_plan(lang, channel, hamming)
        refined = refine_interpretation(lang, channel, hamming)

        # Assert
        self.assertEqual((Refinement.COLLAPSE_BEST, 0), plan[0])
        self.assertEqual((Refinement.NONE, None), plan[1])
        self.assertEqual((F(1), F(0)), refined.matrix[0])

    def test_remove_farthest_meaning(self):
        """Test that the meaning far from every sender is removed."""
        # Arrange
        lang = removal_language()
        channel = SemanticChannel.error_free(2)

        # Act
        plan = refinement_plan(lang, channel, REMOVAL_DISTORTION)
        refined = refine_interpretation(lang, channel, REMOVAL_DISTORTION)
        before = baseline_distortion(lang, channel, REMOVAL_DISTORTION)
        after = decoder_distortion(refined, lang, channel, REMOVAL_DISTORTION)

        # Assert
        self.assertEqual((Refinement.REMOVE_WORST, 2), plan[0])
        self.assertEqual((F(2, 3), F(1, 3), F(0)), refined.matrix[0])
        self.assertEqual(F(3, 4), before)
        self.assertEqual(F(1, 3), after)


class TestDecodingProperties(unittest.TestCase):
    """Property checks over seeded random systems."""

    def test_every_decoder_lies_on_the_segment(self):
        """Test that D_lo <= D_{P,V} <= D_hi for Q and random decoders."""
        rng = random.Random(21)
        for _ in range(100):
            # Arrange
            system = random_system(rng, rng.randint(1, 3), rng.randint(1, 4))
            lang, channel, distortion = (
                system.language,
                system.channel,
                system.distortion,
            )
            decoder = DecodingScheme.deterministic(
                tuple(rng.randrange(lang.n_meanings) for _ in range(lang.n_messages)),
                n_meanings=lang.n_meanings,
            )

            # Act
            region = decoding_region(lang, channel, distortion, system.cost)
            values = (
                decoder_distortion(decoder, lang, channel, distortion),
                baseline_distortion(lang, channel, distortion),
            )

            # Assert
            for value in values:
                self.assertLessEqual(region.lower.distortion, value)
                self.assertLessEqual(value, region.upper.distortion)

    def test_gap_is_nonnegative_with_shared_prior(self):
        """Test that V*_q never loses to Q when p = q."""
        rng = random.Random(22)
        for _ in range(100):
            # Arrange
            system = random_system(
                rng, rng.randint(1, 3), rng.randint(1, 4), hamming=True
            )
            lang = system.language.model_copy(
                update={"rx_prior": system.language.tx_prior}
            )

            # Act
            gap = decoding_gap(lang, system.channel, system.distortion)

            # Assert
            self.assertGreaterEqual(gap, 0)

    def test_refinement_never_raises_distortion(self):
        """Test that the refined interpretation is at least as good as Q."""
        rng = random.Random(23)
        for _ in range(100):
            # Arrange
            system = random_system(rng, rng.randint(2, 3), rng.randint(1, 4))
            args = (system.language, system.channel, system.distortion)

            # Act
            refined = refine_interpretation(*args)

            # Assert
            self.assertLessEqual(
                decoder_distortion(refined, *args), baseline_distortion(*args)
            )

    @settings(deadline=None, max_examples=50)
    @given(systems(hamming=True))
    def test_optimality_matches_simplex_regions(self, system):
        """Test Hamming optimality holds iff every received point keeps its region."""
        # Arrange
        lang, channel = system.language, system.channel
        likelihood = received_likelihood(lang, channel)
        received = [
            r
            for r in range(lang.n_messages)
            if any(lang.tx_prior[n] * likelihood[n][r] for n in range(lang.n_meanings))
        ]

        # Act
        report = hamming_optimality_check(lang, channel, system.distortion)
        shared = all(
            simplex_embed(r, lang, channel, PriorChoice.RX).shares_region(
                simplex_embed(r, lang, channel, PriorChoice.TX)
            )
            for r in received
        )

        # Assert
        self.assertEqual(shared, report.optimal)

    @settings(deadline=None, max_examples=50)
    @given(systems(hamming=True))
    def test_hamming_shortcut_matches_full_sum(self, system):
        """Test one minus the success mass equals D of P and V*_q."""
        # Arrange
        lang, channel, distortion = (
            system.language,
            system.channel,
            system.distortion,
        )
        decoder = map_decoder(lang, channel, distortion)

        # Act
        shortcut = hamming_map_distortion(lang, channel, distortion)
        full = average_distortion(
            expression_encoder(lang), decoder, lang, channel, distortion
        )

        # Assert
        self.assertEqual(full, shortcut)

    def test_cost_is_unaffected_by_decoding(self):
        """Test that L_P depends only on P and the costs."""
        # Arrange
        lang = removal_language()

        # Act
        level = expression_cost(lang, CostFunction(costs=(F(1), F(3))))

        # Assert
        self.assertEqual(F(5, 3), level)


if __name__ == "__main__":
    unittest.main()
