"""Integration tests initialization."""
