"""
geolift - exact geometric lifting of canonical-basis parametrizations

Lusztig and string data of a reduced word of w0, the transition maps between
them, the tropicalized twist zeta and the map Phi_lambda whose restriction to
i = i' gives the affine Schuetzenberger formula. Type A tableau crystals serve
as ground truth.
"""

from .cartan import (
    braid_path,
    build_cartan,
    langlands_dual,
    longest_word,
    positive_roots,
    reduced_words,
    star,
    star_word,
    weyl_dimension,
    weyl_length,
)
from .exceptions import (
    CartanError,
    GeoLiftError,
    LiftingError,
    OracleError,
    ParametrizeError,
    TropicalError,
    UnsupportedType,
)
from .file_handlers import FileHandler
from .lifting import GroupMatrix, gauss_decompose, solve_rank2_move, zeta, zeta_formula
from .models import (
    AffineMap,
    BraidMove,
    CartanDatum,
    LusztigParam,
    RunConfig,
    StringParam,
    VerificationReport,
)
from .parametrize import (
    anchor_constants,
    phi_map,
    schutz_affine,
    schutz_apply,
    transition_lusztig,
    transition_string,
    zeta_trop,
)

__version__ = "0.1.0"
__all__ = [
    "AffineMap",
    "BraidMove",
    "CartanDatum",
    "CartanError",
    "FileHandler",
    "GeoLiftError",
    "GroupMatrix",
    "LiftingError",
    "LusztigParam",
    "OracleError",
    "ParametrizeError",
    "RunConfig",
    "StringParam",
    "TropicalError",
    "UnsupportedType",
    "VerificationReport",
    "anchor_constants",
    "braid_path",
    "build_cartan",
    "gauss_decompose",
    "langlands_dual",
    "longest_word",
    "phi_map",
    "positive_roots",
    "reduced_words",
    "schutz_affine",
    "schutz_apply",
    "solve_rank2_move",
    "star",
    "star_word",
    "transition_lusztig",
    "transition_string",
    "weyl_dimension",
    "weyl_length",
    "zeta",
    "zeta_formula",
    "zeta_trop",
]
