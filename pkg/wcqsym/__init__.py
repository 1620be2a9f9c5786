"""Renormalized monomial quasisymmetric functions of weak compositions."""

# isort: skip_file

# Ordered for the documentation
from .combinatorics import (
    WeakComposition,
    Composition,
    enumerate_compositions,
    enumerate_weak_compositions,
    format_composition,
    parse_composition,
)
from .quasi_shuffle import (
    LinComb,
    DirectedWeakComposition,
    qsh_product,
    shuffle_product,
    deconcat_coproduct,
    antipode_recursive,
    convolve,
)
from .series import TPoly, LaurentBlock, TruncationError, polar_projection, eval_at_zero
from .qsym import QSymElement, StirlingIndex, TruncatedSeries, stirling_to_M, expand_qsym
from .regularization import RegularizedSeries, BoundViolation, phi, phi_factorized
from .birkhoff import (
    FactorizationResult,
    abf,
    abf_closed_form,
    Z,
    Z_symmetrized,
    renormalized_M,
)
from .renqsym import (
    RenElement,
    RBElement,
    ren_product,
    to_t_polynomial,
    from_t_polynomial,
    ren_coproduct,
    ren_counit,
    ren_antipode,
    rb_operator,
    rb_product,
)


__all__ = [
    "WeakComposition",
    "Composition",
    "enumerate_compositions",
    "enumerate_weak_compositions",
    "format_composition",
    "parse_composition",
    "LinComb",
    "DirectedWeakComposition",
    "qsh_product",
    "shuffle_product",
    "deconcat_coproduct",
    "antipode_recursive",
    "convolve",
    "TPoly",
    "LaurentBlock",
    "TruncationError",
    "polar_projection",
    "eval_at_zero",
    "QSymElement",
    "StirlingIndex",
    "TruncatedSeries",
    "stirling_to_M",
    "expand_qsym",
    "RegularizedSeries",
    "BoundViolation",
    "phi",
    "phi_factorized",
    "FactorizationResult",
    "abf",
    "abf_closed_form",
    "Z",
    "Z_symmetrized",
    "renormalized_M",
    "RenElement",
    "RBElement",
    "ren_product",
    "to_t_polynomial",
    "from_t_polynomial",
    "ren_coproduct",
    "ren_counit",
    "ren_antipode",
    "rb_operator",
    "rb_product",
    "__version__",
]


def _get_version() -> str:
    from importlib.metadata import version

    return version(__name__)


__version__ = _get_version()
