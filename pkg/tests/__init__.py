"""Tests package for the semantic communication toolkit."""
