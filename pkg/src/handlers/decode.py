"""Handler for `decode <spec> [--prior tx|rx] [--refine]`."""

from ..config.app import AppConfig
from ..middleware.logging import logger
from ..models.cli import CommandOutput, DecodeRequest
from ..models.domain import Refinement
from ..repositories.language import LanguageRepository
from ..semantics import (
    baseline_distortion,
    decoder_distortion,
    map_decoder,
    received_likelihood,
    refine_interpretation,
    refinement_plan,
    simplex_embed,
)
from ..utils.formatting import decoder_map, exact, render_table


def handle_decode(
    request: DecodeRequest, config: AppConfig, repository: LanguageRepository
) -> CommandOutput:
    """Handle `decode` requests.

    Without --refine, prints the MAP decoder under the chosen prior and its
    true distortion D_{P,V}. Under Hamming distortion each received message
    is also placed on the probability simplex. With --refine, prints the
    per-message refinement of Q and the distortion before and after.

    Args:
        request: Parsed arguments
        config: Application configuration
        repository: Source of semantic systems

    Returns:
        CommandOutput with the decoder and its distortion
    """
    system = repository.load(request.spec)
    lang, channel, distortion = system.language, system.channel, system.distortion
    places = config.decimal_places
    baseline = baseline_distortion(lang, channel, distortion)

    if request.refine:
        plan = refinement_plan(lang, channel, distortion)
        refined = refine_interpretation(lang, channel, distortion)
        rows = [
            [
                message,
                refinement.value,
                lang.meanings[target] if target is not None else "-",
                " ".join(exact(value, places) for value in refined.matrix[r]),
            ]
            for r, (message, (refinement, target)) in enumerate(
                zip(lang.messages, plan)
            )
        ]
        changed = sum(refinement != Refinement.NONE for refinement, _ in plan)
        logger.info("Interpretation refined", extra={"changed_messages": changed})
        lines = [
            render_table(["message", "refinement", "meaning", "refined q(.|s)"], rows),
            f"D_P,Q: {exact(baseline, places)}",
            "D_P,Q refined: "
            + exact(decoder_distortion(refined, lang, channel, distortion), places),
        ]
        return CommandOutput(text="\n".join(lines))

    decoder = map_decoder(lang, channel, distortion, use_prior=request.prior)
    value = decoder_distortion(decoder, lang, channel, distortion)
    lines = [
        f"prior: {request.prior.value}",
        f"decoder: {decoder_map(lang, decoder.indices)}",
        f"D_P,V: {exact(value, places)}",
        f"D_P,Q: {exact(baseline, places)}",
    ]
    if distortion.is_hamming:
        prior = lang.prior(request.prior)
        likelihood = received_likelihood(lang, channel)
        rows = []
        for r, message in enumerate(lang.messages):
            if not any(p * row[r] for p, row in zip(prior, likelihood)):
                continue
            point = simplex_embed(r, lang, channel, use_prior=request.prior)
            rows.append(
                [
                    message,
                    " ".join(exact(a, places) for a in point.alpha),
                    ",".join(lang.meanings[n] for n in point.regions),
                ]
            )
        lines += ["simplex", render_table(["message", "alpha", "regions"], rows)]
    logger.info("Decoder built", extra={"prior": request.prior.value})
    return CommandOutput(text="\n".join(lines))
