"""Tests for the covert quorum simulator."""
