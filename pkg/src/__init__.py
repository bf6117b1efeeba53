"""Covert quorum simulator - covert fraction estimation under link-tapping surveillance."""

__version__ = "0.1.0"
