"""Semantics tests package."""
