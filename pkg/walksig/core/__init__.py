"""Core configuration and setup."""
