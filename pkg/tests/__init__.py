"""Test suite for maze-mappers."""
