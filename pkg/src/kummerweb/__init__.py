"""Exact and numerical verification of Kummer's trilogarithm web.

Submodules:

* :mod:`kummerweb.ratfunc` - exact bivariate rational functions over Q
* :mod:`kummerweb.polylog` - Li2, Li3 and their single-valued cousins on a fixed sheet
* :mod:`kummerweb.web` - the nine first integrals, genericity, Blaschke curvature
* :mod:`kummerweb.relations` - the 36 abelian relations and sub-web ranks
* :mod:`kummerweb.identities` - checkers for the functional equations
* :mod:`kummerweb.cli` - command-line front end and JSON reports
"""

__version__ = "1.0.0"
