"""Lines in graph metrics.

Thin wrapper over the C++ core: graphs, graph6, line counts, structural
predicates, verification helpers and the exhaustive search.
"""

from ._core import *  # noqa: F401,F403
from ._core import Graph, Graph6Error, CapabilityError  # noqa: F401

__version__ = "0.1.0"
