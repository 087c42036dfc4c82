"""habitat.
~~~~~~~

From a species identification to plain-language causal explanations of
its habitat: occurrence retrieval, pseudo-absence sampling, bioclimatic
feature extraction, structure learning among climate variables and
backdoor-adjusted treatment effects on species presence.
"""

from .consts import author
from .consts import homepage
from .consts import version

__version__ = version
__homepage__ = homepage
__author__ = author
__license__ = "BSD-3-Clause"
