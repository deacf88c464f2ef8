"""Tests for InvPow models."""
