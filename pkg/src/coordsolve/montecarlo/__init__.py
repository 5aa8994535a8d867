"""Seeded Monte Carlo corroboration of coordination times."""

from .simulation import SimReport, simulate

__all__ = ["SimReport", "simulate"]
