"""Unit classes in the p-adic cyclotomic ring Z_p[zeta_p]."""
from .classify import ClassificationReport, classify
from .cyclo import CycloElem, RingContext, make_context
from .parser import parse_element

__all__ = ["ClassificationReport", "CycloElem", "RingContext", "classify", "make_context", "parse_element"]
__version__ = "0.1.0"
