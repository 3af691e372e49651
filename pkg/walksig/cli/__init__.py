"""Subcommands of the ``walksig`` command line."""
