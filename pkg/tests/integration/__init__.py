"""Integration tests for cnspa."""
