"""Parsers and input-file readers."""
