"""Exact discrete Fourier transforms of functions of the greatest common
divisor, via prime-factor closed forms cross-checked against brute force."""

from .errors import (
    DomainError,
    InconsistencyError,
    OracleScaleError,
    UndefinedValueError,
)
from .functions import (
    ID,
    LIOUVILLE,
    MU,
    ONE,
    PHI,
    SIGMA,
    TAU,
    ArithmeticFunction,
    Kind,
    catalog_names,
    dirichlet_convolve,
    evaluate,
    get_function,
    id_power,
    jordan_function,
    moebius_invert,
    sum_function,
    sum_function_of,
    sum_function_product,
)
from .numtheory import (
    Factorization,
    as_factorization,
    divisors,
    factorize,
    gcd,
    is_prime,
    jordan,
    moebius,
    totient,
)
from .ramanujan import (
    ramanujan_definition,
    ramanujan_kluyver,
    ramanujan_von_sterneck,
)
from .transform import (
    DftReport,
    OrderDecomposition,
    decompose_order,
    dft_brute_float,
    dft_brute_spectrum,
    dft_closed_form_completely_mult,
    dft_closed_form_gcd,
    dft_closed_form_multiplicative,
    dft_dispatch,
    dft_exact_convolution,
    gcd_power_sum,
    reduce_order,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticFunction",
    "DftReport",
    "DomainError",
    "Factorization",
    "ID",
    "InconsistencyError",
    "Kind",
    "LIOUVILLE",
    "MU",
    "ONE",
    "OracleScaleError",
    "OrderDecomposition",
    "PHI",
    "SIGMA",
    "TAU",
    "UndefinedValueError",
    "as_factorization",
    "catalog_names",
    "decompose_order",
    "dft_brute_float",
    "dft_brute_spectrum",
    "dft_closed_form_completely_mult",
    "dft_closed_form_gcd",
    "dft_closed_form_multiplicative",
    "dft_dispatch",
    "dft_exact_convolution",
    "dirichlet_convolve",
    "divisors",
    "evaluate",
    "factorize",
    "gcd",
    "gcd_power_sum",
    "get_function",
    "id_power",
    "is_prime",
    "jordan",
    "jordan_function",
    "moebius",
    "moebius_invert",
    "ramanujan_definition",
    "ramanujan_kluyver",
    "ramanujan_von_sterneck",
    "reduce_order",
    "sum_function",
    "sum_function_of",
    "sum_function_product",
    "totient",
]
