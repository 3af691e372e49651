"""walksig - quantum-walk matrix signatures for distinguishing cospectral graphs."""

__version__ = "0.1.0"
