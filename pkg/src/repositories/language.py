"""Repository interface for semantic system storage."""

from pathlib import Path
from typing import Protocol

from ..models.domain import SemanticSystem


class LanguageRepository(Protocol):
    """Interface for loading and saving semantic systems."""

    def load(self, path: Path) -> SemanticSystem:
        """Read a system from storage.

        Args:
            path: Location of the stored system.
        Returns:
            The validated SemanticSystem.
        Raises:
            SpecParseError: If the stored text is malformed.
            InvalidLanguageError: If the system violates its invariants.
        """
        ...

    def loads(self, text: str, validate: bool = True) -> SemanticSystem:
        """Parse a system from its text form.

        Args:
            text: Serialized system.
            validate: Whether to reject systems failing validate_system.
        Returns:
            The parsed SemanticSystem.
        """
        ...

    def dumps(self, system: SemanticSystem) -> str:
        """Serialize a system to its canonical text form."""
        ...

    def save(self, system: SemanticSystem, path: Path) -> None:
        """Write a system to storage.

        Raises:
            ExportError: If writing fails.
        """
        ...
