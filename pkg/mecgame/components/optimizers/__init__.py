from .particle_swarm_optimizer import ParticleSwarmOptimizer

__all__ = ['ParticleSwarmOptimizer']
