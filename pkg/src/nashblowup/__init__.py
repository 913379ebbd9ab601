"""Exact combinatorics of the order-n Nash blowup of the A_n surface singularity."""

__version__ = "0.1.0"
