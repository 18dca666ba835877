# ruff hates wildcard imports it seems
from .aggregations import *  # noqa: F403,F401
from .bounds import *  # noqa: F403,F401
from .collapse import *  # noqa: F403,F401
from .data import *  # noqa: F403,F401
from .edge_list import *  # noqa: F403,F401
from .enumeration import *  # noqa: F403,F401
from .ensemble import *  # noqa: F403,F401
from .errors import *  # noqa: F403,F401
from .export import *  # noqa: F403,F401
from .filters import *  # noqa: F403,F401
from .graph import *  # noqa: F403,F401
from .grids import *  # noqa: F403,F401
from .indices import *  # noqa: F403,F401
from .random_graphs import *  # noqa: F403,F401
from .utils import *  # noqa: F403,F401
