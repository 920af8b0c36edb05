"""Two-page book embeddings of planar graphs with maximum degree four.

The main entry points are re-exported here; submodules hold the rest.
"""

from .embedder import embed_two_page
from .graph import Graph, GraphError
from .kernels import BACKEND
from .planar import NonPlanarError, planar_embed
from .subham import subham_triconnected
from .verify import BookEmbedding, SubhamCycle, verify_book_embedding, verify_subhamiltonian

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BookEmbedding",
    "Graph",
    "GraphError",
    "NonPlanarError",
    "SubhamCycle",
    "embed_two_page",
    "planar_embed",
    "subham_triconnected",
    "verify_book_embedding",
    "verify_subhamiltonian",
]
