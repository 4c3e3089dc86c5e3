"""Reduce YANG data models to compact UML object models and map them back."""

__version__ = "0.1.0"
