"""Combinatorial models of bigon families on tori and the surfaces they
assemble into."""

__version__ = "0.1.0"
