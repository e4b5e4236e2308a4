"""
Sphere Embed - embeddability of simplicial complexes on few vertices
"""

__version__ = "0.1.0"
__author__ = "Sphere Embed Team"

# Submodules are imported on demand; verify pulls in numpy and scipy.
# from .combinatorics import decide_embeddability
# from .geometry import construct_embedding, linearize
# from .verify import verify_geodesic_embedding, verify_linear_embedding

__all__ = []
