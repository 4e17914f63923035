"""Exact computations with nilCoxeter algebras and their Ext rings."""

__version__ = "0.1.0"
