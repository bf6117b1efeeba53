"""Helpers shared by result models."""

from datetime import UTC, datetime


def _utc_now() -> datetime:
    """Timestamp for created_at and started_at fields (timezone-aware UTC)."""
    return datetime.now(UTC)
