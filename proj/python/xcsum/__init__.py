"""Sum-capacity bounds for the two-user Gaussian X channel.

Closed-form MAC sum rates, the three per-side upper bounds with validity
predicates and delta thresholds, plane sweeps for figure reproduction, and a
covariance-level oracle that cross-checks the genie-aided gap formulas.
"""

from ._xcsum import *  # noqa: F401,F403
from ._xcsum import __version__  # noqa: F401
