from .app_state import AppState
from .singleton import SingletonMetaClass
from .statistics_aggregator import StatisticsAggregator
from .statistics_collector import StatisticsCollector


__all__ = [
    'AppState',
    'SingletonMetaClass',
    'StatisticsAggregator',
    'StatisticsCollector',
    ]
