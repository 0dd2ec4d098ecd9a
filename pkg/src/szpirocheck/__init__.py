"""Arithmetic and Arakelov invariants of low-genus curves over Q, with
machine checks of the explicit discriminant inequalities they satisfy."""

__version__ = "0.1.0"
