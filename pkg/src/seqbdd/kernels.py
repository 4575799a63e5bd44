"""Backend selection for the graph kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is used. Set ``SEQBDD_PURE_PYTHON=1`` to force the fallback.
"""
import importlib
import os

BACKENDS = ("cython", "python")
_MODULES = {"cython": "seqbdd._ckernels", "python": "seqbdd._pykernels"}


def load(name):
    if name not in _MODULES:
        raise ValueError(f"unknown kernel backend {name!r}; expected one of {BACKENDS}")
    return importlib.import_module(_MODULES[name])


def available():
    names = []
    for name in BACKENDS:
        try:
            load(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _default():
    if os.environ.get("SEQBDD_PURE_PYTHON", "") not in ("", "0"):
        return "python"
    try:
        load("cython")
    except ImportError:
        return "python"
    return "cython"


DEFAULT_BACKEND = _default()
