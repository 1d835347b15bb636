"""Utility modules for the semantic communication toolkit."""
