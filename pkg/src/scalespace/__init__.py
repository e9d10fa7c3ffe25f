"""Semi-vector spaces, positive spaces and scales with exact rational exponents."""

from . import exactla, posspace, scales, semivec, tensor
from .errors import ScaleSpaceError
from .scales import DimVector, Registry, Scale, SignedScale, default_registry

__version__ = "0.1.0"

__all__ = [
    "exactla", "posspace", "scales", "semivec", "tensor",
    "ScaleSpaceError", "DimVector", "Registry", "Scale", "SignedScale", "default_registry",
]
