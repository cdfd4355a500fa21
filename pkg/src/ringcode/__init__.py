"""Linear codes over the non-unital ring E from simplicial complexes."""

__version__ = "0.1.0"
