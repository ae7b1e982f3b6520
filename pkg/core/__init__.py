"""Core package for settings, errors and logging."""
