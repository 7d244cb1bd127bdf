"""Cyclic presentation analysis: redundancy, star graphs, special structure.

The heavy lifting lives in the compiled ``_core`` extension; this package
decodes its JSON payloads into plain dicts and re-exports the native helpers.
"""

import json as _json

from ._core import (
    __version__,
    analyze_text,
    canonical_representative,
    crossvalidate,
    enumerate_words,
    find_special,
    fixtures,
    is_canonical,
    star_graph_dot,
    worker_count,
)
from . import _core


def analyze(n, word):
    """Redundancy/orientability classification of P_n(word) as a dict."""
    return _json.loads(_core.analyze_json(n, word))


def refine(n, word):
    """Concise truncation of P_n(word): n, t, deficiency, and relator list."""
    return _json.loads(_core.refine_json(n, word))


def star_graph(n, word):
    """Star graph of P_n(word) with labeled edges and metrics."""
    return _json.loads(_core.star_graph_json(n, word))


def special(n, word):
    """Direct special certificate, theorem-checker verdict, and group flags."""
    return _json.loads(_core.special_json(n, word))


__all__ = [
    "__version__",
    "analyze",
    "analyze_text",
    "canonical_representative",
    "crossvalidate",
    "enumerate_words",
    "find_special",
    "fixtures",
    "is_canonical",
    "refine",
    "special",
    "star_graph",
    "star_graph_dot",
    "worker_count",
]
