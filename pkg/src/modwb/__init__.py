"""Exact computations around modular forms, Siegel modular forms and the
L-functions of elliptic curves and abelian surfaces, plus a harness that
checks modularity statements up to explicit prime bounds."""

__version__ = "0.1.0"
