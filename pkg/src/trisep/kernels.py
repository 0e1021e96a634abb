"""Kernel backend selection.

The compiled extension is preferred when importable; set ``TRISEP_PURE=1`` to
force the pure-Python fallback.  Both backends expose the same functions over
bitmask adjacency (see ``_kernels_py`` for the reference semantics); vertex
counts above 64 are routed to the pure backend, which has no word-size limit.
"""

import os

from . import _kernels_py as _py

if os.environ.get("TRISEP_PURE"):
    _impl = _py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _py

BACKEND = _impl.BACKEND
_LIMIT = 64

le_pair = _py.le_pair
nested_pair = _py.nested_pair


def components(adj, active):
    if len(adj) > _LIMIT:
        return _py.components(adj, active)
    return _impl.components(adj, active)


def component_count(adj, active):
    if len(adj) > _LIMIT:
        return _py.component_count(adj, active)
    return _impl.component_count(adj, active)


def is_connected(adj, active):
    if len(adj) > _LIMIT:
        return _py.is_connected(adj, active)
    return _impl.is_connected(adj, active)


def has_cycle(adj, active):
    if len(adj) > _LIMIT:
        return _py.has_cycle(adj, active)
    return _impl.has_cycle(adj, active)


def max_disjoint_paths(adj, n, s, t, forbidden):
    if n > _LIMIT:
        return _py.max_disjoint_paths(adj, n, s, t, forbidden)
    return _impl.max_disjoint_paths(adj, n, s, t, forbidden)


def enumerate_mixed(adj, n, k, budget):
    if n > _LIMIT:
        return _py.enumerate_mixed(adj, n, k, budget)
    return _impl.enumerate_mixed(adj, n, k, budget)


def nested_with_all(ca, cb, ctx_a, ctx_b):
    if any(a.bit_length() > _LIMIT for a in ctx_a):
        return _py.nested_with_all(ca, cb, ctx_a, ctx_b)
    return _impl.nested_with_all(ca, cb, ctx_a, ctx_b)
