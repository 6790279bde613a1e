"""Tests for the perfect_forests package."""
