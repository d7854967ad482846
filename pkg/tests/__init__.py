from .allocation_tests import TestAllocationCoefficient, TestEqualSplits, TestLinearProgram
from .app_state_tests import TestAppState
from .component_tests import TestComponent, TestParticleSwarmOptimizer, TestSolutions
from .config_registry_tests import TestConfigInterface, TestConfigRegistry
from .data_types_tests import TestDataTypes
from .demand_tests import TestDemandDelta, TestKernelIntegral, TestRequiredCompute
from .game_tests import TestExactPotential, TestPotential, TestUtility
from .netmodel_tests import TestInterference, TestRadiusDistribution, TestSinrAndRadius
from .pso_tests import TestPsoConfig, TestSwarm, TestSwarmQuality
from .scenario_factory_tests import TestGridScenario, TestNetworkScenario
from .statistics_tests import TestStatistics
from .sweep_tests import TestFigureTrends, TestSweep, TestSweepHelpers
from .sweeper_tests import TestSweeper

__all__ = [
    'TestAllocationCoefficient',
    'TestAppState',
    'TestComponent',
    'TestConfigInterface',
    'TestConfigRegistry',
    'TestDataTypes',
    'TestDemandDelta',
    'TestEqualSplits',
    'TestExactPotential',
    'TestFigureTrends',
    'TestGridScenario',
    'TestInterference',
    'TestKernelIntegral',
    'TestLinearProgram',
    'TestNetworkScenario',
    'TestParticleSwarmOptimizer',
    'TestPotential',
    'TestPsoConfig',
    'TestRadiusDistribution',
    'TestRequiredCompute',
    'TestSinrAndRadius',
    'TestSolutions',
    'TestStatistics',
    'TestSweep',
    'TestSweepHelpers',
    'TestSweeper',
    'TestSwarm',
    'TestSwarmQuality',
    'TestUtility',
    ]
