"""A language together with its channel, distortion and cost."""

from pydantic import Field, model_validator

from ...middleware.exceptions import DimensionMismatchError
from .channel import SemanticChannel
from .language import SemanticLanguage
from .measures import CostFunction, DistortionMeasure
from .rational import DomainModel


class SemanticSystem(DomainModel):
    """Everything needed to evaluate schemes for one language.

    Attributes:
        language: The semantic language
        channel: Message transition kernel
        distortion: Distortion between meanings
        cost: Message costs
    """

    language: SemanticLanguage = Field(..., description="Semantic language")
    channel: SemanticChannel = Field(..., description="Semantic channel")
    distortion: DistortionMeasure = Field(..., description="Distortion measure")
    cost: CostFunction = Field(..., description="Message costs")

    @model_validator(mode="after")
    def _check_dimensions(self) -> "SemanticSystem":
        n, m = self.language.n_meanings, self.language.n_messages
        if self.channel.size != m or self.cost.size != m or self.distortion.size != n:
            raise DimensionMismatchError(
                "Channel, cost and distortion must match the language",
                details={
                    "meanings": n,
                    "messages": m,
                    "channel": self.channel.size,
                    "cost": self.cost.size,
                    "distortion": self.distortion.size,
                },
            )
        return self

    def sorted_by_cost(self) -> "SemanticSystem":
        """Reorder messages by nondecreasing cost, stable on current order."""
        order = sorted(
            range(self.language.n_messages), key=lambda m: self.cost.costs[m]
        )
        lang = self.language
        language = lang.model_copy(
            update={
                "messages": tuple(lang.messages[m] for m in order),
                "expression": tuple(
                    tuple(row[m] for m in order) for row in lang.expression
                ),
                "interpretation": tuple(lang.interpretation[m] for m in order),
            }
        )
        kernel = self.channel.kernel
        return SemanticSystem(
            language=language,
            channel=SemanticChannel(
                kernel=tuple(tuple(kernel[a][b] for b in order) for a in order)
            ),
            distortion=self.distortion,
            cost=CostFunction(costs=tuple(self.cost.costs[m] for m in order)),
        )
