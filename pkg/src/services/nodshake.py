"""The nod/shake language, where expression and interpretation disagree."""

from fractions import Fraction

from ..models.domain import (
    CostFunction,
    DistortionMeasure,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
)


def generate_nodshake() -> SemanticSystem:
    """Two meanings, two equally cheap gestures, inverted at the receiver.

    The transmitter nods for yes and shakes for no while the receiver reads
    a nod as no and a shake as yes. Both parties know the uniform prior.
    """
    one, zero, half = Fraction(1), Fraction(0), Fraction(1, 2)
    return SemanticSystem(
        language=SemanticLanguage(
            meanings=("yes", "no"),
            messages=("nod", "shake"),
            expression=((one, zero), (zero, one)),
            interpretation=((zero, one), (one, zero)),
            tx_prior=(half, half),
            rx_prior=(half, half),
        ),
        channel=SemanticChannel.error_free(2),
        distortion=DistortionMeasure.hamming(2),
        cost=CostFunction(costs=(one, one)),
    )
