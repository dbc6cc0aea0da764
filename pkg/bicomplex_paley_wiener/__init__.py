"""Bicomplex Fourier transforms, Paley-Wiener extensions and Cauchy
integrals by direct quadrature."""

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "unknown"

version = __version__
