# apollonian-networks: Random and Evolving Apollonian Network generator, code-based distances, and limit-theorem experiments
__version__ = "0.1.0"
