"""Repository tests package."""
