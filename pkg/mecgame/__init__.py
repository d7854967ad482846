from .utils import *

from .application import *

# Components.
from .components.component import Component

from .components.optimizers import *

from .components.solutions import *

# Rest.
from .configuration import *
from .core import *
from .data_types import *

# Workers.
from .workers import *
