"""Command-line interface for cnspa."""
