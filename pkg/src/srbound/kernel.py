"""Backend selection for the simplex tableau kernel.

The compiled int64 kernel is used when importable; it hands over to the
arbitrary-precision Python kernel on the first pivot that would overflow,
so results never depend on the backend.
"""
from __future__ import annotations

from ._pykernel import PyTableau

try:
    from ._ckernel import CTableau
except ImportError:  # pragma: no cover - depends on the build
    CTableau = None

HAVE_COMPILED = CTableau is not None
_backend = "compiled" if HAVE_COMPILED else "python"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Force ``"python"`` or ``"compiled"`` (the latter only if built)."""
    global _backend
    if name not in ("python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernel is not available")
    _backend = name


class Tableau:
    """Integer tableau facade over whichever kernel is active."""

    __slots__ = ("_impl",)

    def __init__(self, rows: list[list[int]], denom: int = 1):
        impl = None
        if _backend == "compiled":
            try:
                impl = CTableau(rows, denom)
            except OverflowError:
                impl = None
        self._impl = impl if impl is not None else PyTableau(rows, denom)

    @property
    def compiled(self) -> bool:
        return not isinstance(self._impl, PyTableau)

    @property
    def denom(self) -> int:
        return self._impl.denom

    @property
    def nrows(self) -> int:
        return self._impl.nrows

    @property
    def ncols(self) -> int:
        return self._impl.ncols

    def get(self, i: int, j: int) -> int:
        return self._impl.get(i, j)

    def row(self, i: int) -> list[int]:
        return self._impl.row(i)

    def column(self, j: int) -> list[int]:
        return self._impl.column(j)

    def tolists(self) -> list[list[int]]:
        return self._impl.tolists()

    def pivot(self, r: int, s: int) -> None:
        if not self._impl.pivot(r, s):
            self._impl = PyTableau(self._impl.tolists(), self._impl.denom)
            self._impl.pivot(r, s)
