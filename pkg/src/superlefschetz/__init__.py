"""Exact verification of super hard Lefschetz identities on flat model spaces."""

__version__ = "0.1.0"
