"""Discriminant matrices, Saito's criterion and the simple elliptic singularity of type A4~."""

__version__ = "0.1.0"
