"""Exact structure-constant computations for Hom-Malcev, Hom-pre-Malcev and
Hom-alternative algebras, their representations and operators."""

from .algebra import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .corpus import *  # noqa: F401,F403
from .deformations import *  # noqa: F401,F403
from .engine import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .identities import *  # noqa: F401,F403
from .io import *  # noqa: F401,F403
from .matrix import *  # noqa: F401,F403
from .operators import *  # noqa: F401,F403
from .representations import *  # noqa: F401,F403
from .scalars import *  # noqa: F401,F403

__version__ = "0.1.0"
