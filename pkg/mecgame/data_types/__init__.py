from .allocation_result import AllocationResult
from .channel_params import ChannelParams, db_to_linear
from .demand_profile import DemandProfile
from .experiment_config import ExperimentConfig
from .game_evaluation import GameEvaluation
from .network_scenario import NetworkScenario
from .power_profile import PowerProfile
from .pso_config import PsoConfig
from .pso_result import PsoResult
from .pso_state import PsoState
from .scenario_params import ScenarioParams
from .solution_outcome import SolutionOutcome
from .sweep_record import SweepRecord

__all__ = [
    'AllocationResult',
    'ChannelParams',
    'db_to_linear',
    'DemandProfile',
    'ExperimentConfig',
    'GameEvaluation',
    'NetworkScenario',
    'PowerProfile',
    'PsoConfig',
    'PsoResult',
    'PsoState',
    'ScenarioParams',
    'SolutionOutcome',
    'SweepRecord',
    ]
