"""Persistence of semantic systems and region exports."""
