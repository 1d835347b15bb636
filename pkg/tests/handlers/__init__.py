"""Handler tests package."""
