"""Structure-constant Lie algebra analysis and truncated-Fock ladder models."""

from . import bridge, catalog, fock, lie_core, schur
from .errors import LiefockError

__all__ = ["bridge", "catalog", "fock", "lie_core", "schur", "LiefockError"]

__version__ = "0.1.0"
