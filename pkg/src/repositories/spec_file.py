"""Plain-text spec file implementation of the language repository.

A spec file is a sequence of bracketed sections. `#` starts a comment and
blank lines are ignored. All numbers are exact rationals ("a/b" or "a").

    [meanings]          label p [q]        one line per meaning
    [messages]          label cost         one line per message, cost order
    [expression]        M entries p(s|w)   one line per meaning
    [interpretation]    N entries q(w|s)   one line per message
    [channel]           error-free, or M entries c(s_hat|s) per message
    [distortion]        hamming, or N entries d(w, w_hat) per meaning

The q column is optional; when absent on every line the receiver shares the
transmitter's prior. The channel section is optional and defaults to
error-free.
"""

import re
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from ..middleware.exceptions import (
    ExportError,
    InvalidLanguageError,
    SpecParseError,
)
from ..middleware.logging import logger
from ..models.domain import (
    CostFunction,
    DistortionMeasure,
    SemanticChannel,
    SemanticLanguage,
    SemanticSystem,
    format_rational,
    parse_rational,
)
from ..models.domain.rational import Matrix
from ..semantics.core import validate_system

SECTIONS = (
    "meanings",
    "messages",
    "expression",
    "interpretation",
    "channel",
    "distortion",
)
REQUIRED = ("meanings", "messages", "expression", "interpretation", "distortion")
ERROR_FREE = "error-free"
HAMMING = "hamming"

_HEADER = re.compile(r"^\[([A-Za-z-]+)\]$")
_TOKEN = re.compile(r"\S+")

Token = tuple[str, int]
Line = tuple[int, list[Token]]


class SpecFileLanguageRepository:
    """Reads and writes semantic systems as spec files."""

    def __init__(self, encoding: str = "utf-8") -> None:
        """Initialize the repository.

        Args:
            encoding: Text encoding of spec files
        """
        self.encoding = encoding

    def load(self, path: Path) -> SemanticSystem:
        try:
            text = Path(path).read_text(encoding=self.encoding)
        except OSError as e:
            raise SpecParseError(
                f"Cannot read spec file: {e.strerror or e}", details={"path": str(path)}
            ) from e
        logger.debug("Spec file read", extra={"path": str(path), "bytes": len(text)})
        return self.loads(text)

    def loads(self, text: str, validate: bool = True) -> SemanticSystem:
        sections, headers = self._split_sections(text)
        missing = [name for name in REQUIRED if name not in sections]
        if missing:
            raise SpecParseError(
                f"Missing section [{missing[0]}]", details={"missing": missing}
            )

        meanings, tx_prior, rx_prior = self._parse_meanings(sections["meanings"])
        messages, costs = self._parse_messages(sections["messages"])
        n, m = len(meanings), len(messages)
        expression = self._parse_matrix(
            sections["expression"], headers["expression"], n, m, "expression"
        )
        interpretation = self._parse_matrix(
            sections["interpretation"],
            headers["interpretation"],
            m,
            n,
            "interpretation",
        )
        channel = self._parse_keyword_matrix(
            sections.get("channel", []), headers.get("channel", 0), m, ERROR_FREE
        )
        distortion = self._parse_keyword_matrix(
            sections["distortion"], headers["distortion"], n, HAMMING
        )

        try:
            system = SemanticSystem(
                language=SemanticLanguage(
                    meanings=meanings,
                    messages=messages,
                    expression=expression,
                    interpretation=interpretation,
                    tx_prior=tx_prior,
                    rx_prior=rx_prior,
                ),
                channel=SemanticChannel(
                    kernel=channel
                    if channel is not None
                    else SemanticChannel.error_free(m).kernel
                ),
                distortion=DistortionMeasure(
                    matrix=distortion
                    if distortion is not None
                    else DistortionMeasure.hamming(n).matrix
                ),
                cost=CostFunction(costs=costs),
            )
        except ValidationError as e:
            raise SpecParseError(
                "Spec file does not describe a valid system",
                details={"errors": [error["msg"] for error in e.errors()]},
            ) from e

        if validate:
            report = validate_system(system)
            if not report.passed:
                raise InvalidLanguageError(
                    details={"issues": [issue.message for issue in report.issues]}
                )
        return system

    def dumps(self, system: SemanticSystem) -> str:
        lang = system.language

        def row(values) -> str:
            return " ".join(format_rational(value) for value in values)

        shared_prior = lang.tx_prior == lang.rx_prior
        blocks = [
            [
                f"{label} {format_rational(p)}"
                + ("" if shared_prior else f" {format_rational(q)}")
                for label, p, q in zip(lang.meanings, lang.tx_prior, lang.rx_prior)
            ],
            [
                f"{label} {format_rational(cost)}"
                for label, cost in zip(lang.messages, system.cost.costs)
            ],
            [row(values) for values in lang.expression],
            [row(values) for values in lang.interpretation],
            [ERROR_FREE]
            if system.channel.is_error_free
            else [row(values) for values in system.channel.kernel],
            [HAMMING]
            if system.distortion.is_hamming
            else [row(values) for values in system.distortion.matrix],
        ]
        sections = [
            "\n".join([f"[{name}]", *lines]) for name, lines in zip(SECTIONS, blocks)
        ]
        return "\n\n".join(sections) + "\n"

    def save(self, system: SemanticSystem, path: Path) -> None:
        try:
            Path(path).write_text(self.dumps(system), encoding=self.encoding)
        except OSError as e:
            raise ExportError(
                f"Cannot write spec file: {e.strerror or e}",
                details={"path": str(path)},
            ) from e
        logger.debug("Spec file written", extra={"path": str(path)})

    @staticmethod
    def _split_sections(text: str) -> tuple[dict[str, list[Line]], dict[str, int]]:
        sections: dict[str, list[Line]] = {}
        headers: dict[str, int] = {}
        current: Optional[str] = None
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0]
            if not content.strip():
                continue
            header = _HEADER.match(content.strip())
            if header:
                name = header.group(1)
                column = content.index("[") + 1
                if name not in SECTIONS:
                    raise SpecParseError(f"Unknown section [{name}]", number, column)
                if name in sections:
                    raise SpecParseError(f"Duplicate section [{name}]", number, column)
                sections[name] = []
                headers[name] = number
                current = name
                continue
            tokens = [
                (match.group(), match.start() + 1)
                for match in _TOKEN.finditer(content)
            ]
            if current is None:
                raise SpecParseError(
                    "Content before the first section", number, tokens[0][1]
                )
            sections[current].append((number, tokens))
        return sections, headers

    @staticmethod
    def _rational(token: Token, line: int):
        text, column = token
        try:
            return parse_rational(text)
        except ValueError as e:
            raise SpecParseError(str(e), line, column) from e

    def _parse_meanings(self, lines: list[Line]):
        if not lines:
            raise SpecParseError("Section [meanings] is empty")
        width = len(lines[0][1])
        labels, tx_prior, rx_prior = [], [], []
        for number, tokens in lines:
            if len(tokens) not in (2, 3) or len(tokens) != width:
                raise SpecParseError(
                    "Meaning lines need 'label p' or 'label p q' on every line",
                    number,
                    tokens[0][1],
                )
            labels.append(tokens[0][0])
            tx_prior.append(self._rational(tokens[1], number))
            rx_prior.append(self._rational(tokens[-1], number))
        return tuple(labels), tuple(tx_prior), tuple(rx_prior)

    def _parse_messages(self, lines: list[Line]):
        if not lines:
            raise SpecParseError("Section [messages] is empty")
        labels, costs = [], []
        for number, tokens in lines:
            if len(tokens) != 2:
                raise SpecParseError(
                    "Message lines need 'label cost'", number, tokens[0][1]
                )
            labels.append(tokens[0][0])
            costs.append(self._rational(tokens[1], number))
        return tuple(labels), tuple(costs)

    def _parse_matrix(
        self, lines: list[Line], header: int, rows: int, columns: int, name: str
    ) -> Matrix:
        if len(lines) != rows:
            raise SpecParseError(
                f"Section [{name}] needs {rows} rows, found {len(lines)}", header, 1
            )
        matrix = []
        for number, tokens in lines:
            if len(tokens) != columns:
                raise SpecParseError(
                    f"Section [{name}] rows need {columns} entries,"
                    f" found {len(tokens)}",
                    number,
                    tokens[0][1],
                )
            matrix.append(tuple(self._rational(token, number) for token in tokens))
        return tuple(matrix)

    def _parse_keyword_matrix(
        self, lines: list[Line], header: int, size: int, keyword: str
    ) -> Optional[Matrix]:
        """A square matrix, or None when the section is absent or holds the keyword."""
        if not lines:
            return None
        first_line, first_tokens = lines[0]
        if first_tokens[0][0] == keyword:
            if len(lines) > 1 or len(first_tokens) > 1:
                raise SpecParseError(
                    f"Nothing may follow '{keyword}'", first_line, first_tokens[0][1]
                )
            return None
        name = "channel" if keyword == ERROR_FREE else "distortion"
        return self._parse_matrix(lines, header, size, size, name)
