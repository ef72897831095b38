"""Exact generic character table of the Sylow p-subgroup U(q) of D4(q)."""

from .characters import (CharLabel, ShapeError, char_value, degree,
                         enumerate_chars, format_label, parse_label,
                         transport_char)
from .classes import ClassRep, enumerate_class_reps, transport_class
from .cyclotomic import (CycInt, CycRational, gauss_quadratic, kloosterman,
                         quad_linear_sum)
from .ffield import FieldCtx, FieldError, Fq, field_make
from .group import (AUTOMORPHISMS, UElement, apply_auto, commutator, conj,
                    format_element, identity, inv, mul, parse_element,
                    root_elem)
from .table import (CharTable, build_table, export, parse_table_json,
                    verify_counts, verify_orthogonality,
                    verify_tau_equivariance)

__version__ = "0.1.0"

__all__ = [
    "AUTOMORPHISMS", "CharLabel", "CharTable", "ClassRep", "CycInt",
    "CycRational", "FieldCtx", "FieldError", "Fq", "ShapeError", "UElement",
    "apply_auto", "build_table", "char_value", "commutator", "conj", "degree",
    "enumerate_chars", "enumerate_class_reps", "export", "field_make",
    "format_element", "format_label", "gauss_quadratic", "identity", "inv",
    "kloosterman", "mul", "parse_element", "parse_label", "parse_table_json",
    "quad_linear_sum", "root_elem", "transport_char", "transport_class",
    "verify_counts", "verify_orthogonality", "verify_tau_equivariance",
]
