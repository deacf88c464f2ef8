"""Tests for InvPow utilities."""
