"""qweyl: exact-arithmetic engine for dynamical Weyl group operators of
quantized enveloping algebras.

Everything is computed over exact rationals or rational functions of the
quantum parameter; there is no floating point anywhere and every check in the
verification suites is an exact identity.
"""

from .scalars import (
    PoleError,
    QField,
    ScalarFn,
    evaluate,
    laurent,
    monomial,
    qbinomial,
    qfactorial,
    qint,
    rational,
)

__all__ = [
    "PoleError",
    "QField",
    "ScalarFn",
    "evaluate",
    "laurent",
    "monomial",
    "qbinomial",
    "qfactorial",
    "qint",
    "rational",
]

__version__ = "0.1.0"
