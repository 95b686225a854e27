"""Exact linear algebra for instanton monads, from Python.

Documents are plain dicts in the same schemas the CLI reads and writes
(net/v1, octuple/v1, gamma/v1, sigma/v1).
"""

import json

from . import _core
from ._core import DEFAULT_PRIME, Error

__all__ = ["DEFAULT_PRIME", "Error", "verify", "cohomology", "dims", "generate", "search", "rank"]


def verify(kind, doc, mode="", prime=0):
    """Verification report for `doc`; kind is net, plane, octuple or gamma."""
    return json.loads(_core.verify(kind, json.dumps(doc), mode, prime))


def cohomology(doc, tmin, tmax):
    """Cohomology table of the monad presented by `doc` over twists tmin..tmax."""
    return json.loads(_core.cohomology(json.dumps(doc), tmin, tmax))


def dims(n_max):
    return json.loads(_core.dims(n_max))


def generate(n, seed, trial=0, ansatz="dense"):
    """An octuple satisfying the closed conditions, as an octuple/v1 dict."""
    return json.loads(_core.generate(n, seed, trial, ansatz))


def search(n, seed, trials, ansatz="dense", mode="", prime=0, threads=1, points=False):
    return json.loads(_core.search(n, seed, trials, ansatz, mode, prime, threads, points))


def rank(rows):
    """Exact rank over Q; entries are ints or strings such as "-3/7"."""
    return _core.rank([[str(x) for x in row] for row in rows])
