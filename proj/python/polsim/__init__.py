"""Polarization entanglement from birefringent dephasing and frequency erasure.

States are 4x4 complex numpy arrays in the basis (HH, HV, VH, VV).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
