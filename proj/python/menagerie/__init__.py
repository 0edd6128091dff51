"""Component-based collection of nature-inspired optimizers.

Thin wrapper over the compiled _core module: seeded runs on the bundled
benchmarks, the random-search baseline, and the concept/feature taxonomy.
"""

from ._core import (
    __version__,
    algorithms_with,
    default_params,
    evaluate_benchmark,
    list_algorithms,
    list_benchmarks,
    manifest,
    metadata,
    random_search,
    run,
    similarity,
)

__all__ = [
    "__version__",
    "algorithms_with",
    "default_params",
    "evaluate_benchmark",
    "list_algorithms",
    "list_benchmarks",
    "manifest",
    "metadata",
    "random_search",
    "run",
    "similarity",
]
