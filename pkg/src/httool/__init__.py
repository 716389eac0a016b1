"""httool: exact-arithmetic verification and construction of transcendental
L-factors of K3 surfaces over finite fields.

Submodules:
  exactpoly  rational/polynomial arithmetic, factorization, Sturm counts
  padicpoly  p-adic valuations, Newton polygons, slope verdicts
  weilcheck  the five admissibility checks, base extension, enumerator
  qform      rational quadratic forms, Hilbert symbols, the K3 lattice
  cmfield    CM fields, trace forms, extensions, the K3 complement step
  pipeline   end-to-end orchestration into JSON certificates
  cli        the `httool` command
"""

__version__ = "0.1.0"
