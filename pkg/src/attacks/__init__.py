"""Undercover attack strategies."""

from src.attacks.undercover import compose_messages, qs_break_demo, undercover_message

__all__ = ["compose_messages", "qs_break_demo", "undercover_message"]
