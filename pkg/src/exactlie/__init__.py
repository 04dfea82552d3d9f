"""Exact algebra kernel: scalars, Lie algebras, polynomials, matrices,
vector fields, exponentials and norms, with a verification CLI."""

__version__ = "0.1.0"
