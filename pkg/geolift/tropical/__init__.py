"""Subtraction-free expressions and their min-plus tropicalization"""

from .expressions import (
    Add,
    Const,
    Div,
    Mul,
    Pow,
    SFExpr,
    Var,
    arity,
    certify_rational,
    format_sf,
    parse_sf,
    sf_compose,
    sf_eval,
    sf_eval_map,
    sf_from_polynomials,
    sf_normalize,
    sf_symbols,
    to_sympy,
    var,
)
from .piecewise import (
    PLComponent,
    PLMap,
    affine_component,
    affine_pl_map,
    as_affine_map,
    constant_component,
    identity_map,
    is_affine,
    normal_form_tropical,
    pl_compose,
    pl_eval,
    pl_map_from_json,
    tropicalize,
    tropicalize_map,
    variable_component,
)

__all__ = [
    "Add",
    "Const",
    "Div",
    "Mul",
    "Pow",
    "SFExpr",
    "Var",
    "arity",
    "certify_rational",
    "format_sf",
    "parse_sf",
    "sf_compose",
    "sf_eval",
    "sf_eval_map",
    "sf_from_polynomials",
    "sf_normalize",
    "sf_symbols",
    "to_sympy",
    "var",
    "PLComponent",
    "PLMap",
    "affine_component",
    "affine_pl_map",
    "as_affine_map",
    "constant_component",
    "identity_map",
    "is_affine",
    "normal_form_tropical",
    "pl_compose",
    "pl_eval",
    "pl_map_from_json",
    "tropicalize",
    "tropicalize_map",
    "variable_component",
]
