"""Tests for InvPow."""
