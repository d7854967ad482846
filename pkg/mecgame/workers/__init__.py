from .worker import Worker
from .sweeper import Sweeper

__all__ = [
    'Sweeper',
    'Worker',
    ]
