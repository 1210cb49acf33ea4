"""Exact constructions of Drinfeld and Heisenberg doubles of finite-dimensional
Hopf algebras, quantum moment maps and their Hamiltonian reduction, with
machine checks of the identities relating them."""

__version__ = "0.1.0"
