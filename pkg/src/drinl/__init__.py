"""Exact arithmetic for Drinfeld modules, their convolution t-modules, and
the attached Goss / Pellarin / convolution L-series."""

__version__ = "0.1.0"

from drinl._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION  # noqa: F401
