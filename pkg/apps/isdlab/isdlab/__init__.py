"""Command line for topological index bounds and random-graph sweeps."""
