"""Exact certificates for deformations of a union of two cones in P^3.

``polycore`` holds the sparse rational forms, ``elimination`` the resultant
machinery, ``certify`` the checks and certificate format, and ``forge`` the
generators, file formats and command line.
"""

from .certify import Certificate, ConePair, DeformationFamily, assemble_certificate
from .kernels import BACKEND
from .polycore import HomForm

__version__ = "0.1.0"

__all__ = ["BACKEND", "Certificate", "ConePair", "DeformationFamily", "HomForm", "assemble_certificate", "__version__"]
