"""Exact-arithmetic verification toolkit for simple Grassmannian flops.

Subpackages by area:

- weights: partitions, GL weights, Littlewood-Richardson, Weyl dimensions
- bundles: homogeneous bundle algebra on Gr(r,n)
- bwb: Borel-Weil-Bott cohomology and the H^1-vanishing sweep
- schubert: Schubert-basis cohomology ring, Chern characters, Riemann-Roch,
  dimension and crepancy arithmetic
- localmodel: projective local model presentations, Betti numbers, Kirwan map
- quantum: rim-hook quantum products and semisimplicity certificates
- gamma: the formal Gamma-class transform and Chern-character extraction
- cli: the `grflop` command-line frontend
"""

__version__ = "0.1.0"
