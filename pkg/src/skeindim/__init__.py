"""skeindim: exact skein-module dimensions of Dehn fillings.

Layers, bottom to top:

* :mod:`skeindim.exactalg`: exact polynomials and certified balls,
* :mod:`skeindim.qtorus`: the quantum torus and curve embeddings,
* :mod:`skeindim.knots`: boundary polynomials of the covered knot
  families and their slope specializations,
* :mod:`skeindim.charvar`: character counting, enumeration, trace bases,
  and certified basis verification,
* :mod:`skeindim.rt`: exact cyclotomic Reshetikhin-Turaev engine for
  surgeries on the unknot,
* :mod:`skeindim.cli`: the ``skeindim`` command-line front end.
"""

__version__ = "0.1.0"
