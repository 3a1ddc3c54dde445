"""LP-based 3/2-approximation for the graphic s-t path TSP.

Typical use::

    from stpath import parse_graph, run_pipeline
    report = run_pipeline(parse_graph(open("g.txt").read()), verify=True)
"""

from .graph import Graph, GraphError, parse_graph
from .pipeline import InvariantViolation, PipelineError, SolutionReport, run_pipeline

__all__ = [
    "Graph",
    "GraphError",
    "InvariantViolation",
    "PipelineError",
    "SolutionReport",
    "parse_graph",
    "run_pipeline",
]
__version__ = "0.1.0"
