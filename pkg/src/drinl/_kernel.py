"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DRINL_PURE=1 to force the Python fallback (used by the benchmark and by
CI runs that want to exercise both paths).
"""

import os

if os.environ.get("DRINL_PURE") == "1":
    from drinl import _kernel_py as _impl
else:
    try:
        from drinl import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from drinl import _kernel_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

pnorm = _impl.pnorm
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pmul = _impl.pmul
pscale = _impl.pscale
pdivmod = _impl.pdivmod
pgcd = _impl.pgcd
pegcd = _impl.pegcd
pinvmod = _impl.pinvmod
pmulmod = _impl.pmulmod
ppowmod = _impl.ppowmod
fqmul = _impl.fqmul
series_mul = _impl.series_mul
series_inv = _impl.series_inv
