"""Exact-arithmetic workbench for sl2 weight modules and related algebra.

Modules:

- ``exactla``    exact scalars and sparse linear algebra (the oracle layer)
- ``sl2mod``     truncated sl2-modules with exact action matrices
- ``enright``    index sets, highest weight vectors, projective generators,
                 decomposition and Casimir audits, decategorification maps
- ``hecke``      affine Hecke relations in faithful finite representations
- ``heisenberg`` integral Heisenberg algebra normal forms and Fock action
- ``adelman``    abelianization of the category of rational matrix objects
- ``cli``        batch verification front end
"""

__version__ = "0.1.0"
