"""Service resolving named encoder/decoder pairs for simulation."""

import re
from typing import Optional

from ..middleware.exceptions import InvalidSchemeError
from ..models.domain import (
    DecodingScheme,
    EncodingScheme,
    PriorChoice,
    RegionFrontier,
    SemanticSystem,
    TieBreakPolicy,
)
from ..semantics import (
    build_frontier,
    expression_encoder,
    interpretation_decoder,
    map_decoder,
    refine_interpretation,
)

_FRONTIER_ENCODER = re.compile(r"^(lower|upper):(\d+)$")


class SchemeResolver:
    """Turns scheme names such as `lower:1/Q` into scheme matrices.

    A name is `<encoder>/<decoder>`, the decoder defaulting to `Q`. Encoders
    are `P` (the expression) or `lower:<i>` / `upper:<i>`, the i-th vertex of
    a frontier chain. Decoders are `Q` (the interpretation), `Vq` and `Vp`
    (MAP decoders under the receiver and transmitter priors) and `refined`.
    """

    def __init__(
        self, system: SemanticSystem, tie_break: Optional[TieBreakPolicy] = None
    ) -> None:
        """Initialize the resolver.

        Args:
            system: Language, channel, distortion and cost the schemes act on
            tie_break: Policy of the frontier the chain encoders come from
        """
        self.system = system
        self.tie_break = tie_break
        self._frontier: Optional[RegionFrontier] = None

    @property
    def frontier(self) -> RegionFrontier:
        if self._frontier is None:
            system = self.system
            self._frontier = build_frontier(
                system.language,
                system.channel,
                system.distortion,
                system.cost,
                self.tie_break,
            )
        return self._frontier

    def resolve(self, name: str) -> tuple[EncodingScheme, DecodingScheme]:
        """Resolve a scheme pair name.

        Raises:
            InvalidSchemeError: If either part names no known scheme.
        """
        encoder_name, _, decoder_name = name.partition("/")
        return self.encoder(encoder_name), self.decoder(decoder_name or "Q")

    def encoder(self, name: str) -> EncodingScheme:
        lang = self.system.language
        if name == "P":
            return expression_encoder(lang)
        match = _FRONTIER_ENCODER.match(name)
        if not match:
            raise InvalidSchemeError(
                f"Unknown encoder {name!r}",
                details={"encoder": name, "known": ["P", "lower:<i>", "upper:<i>"]},
            )
        chain = getattr(self.frontier, match.group(1))
        index = int(match.group(2))
        if index >= len(chain):
            raise InvalidSchemeError(
                f"Frontier chain {match.group(1)} has no vertex {index}",
                details={"encoder": name, "vertices": len(chain)},
            )
        return EncodingScheme.deterministic(
            chain[index].encoder, n_messages=lang.n_messages
        )

    def decoder(self, name: str) -> DecodingScheme:
        system = self.system
        lang, channel, distortion = system.language, system.channel, system.distortion
        if name == "Q":
            return interpretation_decoder(lang)
        if name == "Vq":
            return map_decoder(lang, channel, distortion, use_prior=PriorChoice.RX)
        if name == "Vp":
            return map_decoder(lang, channel, distortion, use_prior=PriorChoice.TX)
        if name == "refined":
            return refine_interpretation(lang, channel, distortion)
        raise InvalidSchemeError(
            f"Unknown decoder {name!r}",
            details={"decoder": name, "known": ["Q", "Vq", "Vp", "refined"]},
        )
