"""coordsolve - exact and simulated analysis of two-player coordination games."""

__version__ = "0.1.0"
