"""Newton polyhedra, B1-facet cuts, multi-weighted blow-ups and candidate poles."""

try:
    from ._newtcut import (
        InputError,
        InternalError,
        analyze,
        b1,
        bcut,
        blowup,
        poles,
        verify,
        ztop,
        __version__,
    )
except ImportError:  # in-tree builds keep the extension next to the package
    from _newtcut import (
        InputError,
        InternalError,
        analyze,
        b1,
        bcut,
        blowup,
        poles,
        verify,
        ztop,
        __version__,
    )

__all__ = [
    "InputError",
    "InternalError",
    "analyze",
    "b1",
    "bcut",
    "blowup",
    "poles",
    "verify",
    "ztop",
    "__version__",
]
