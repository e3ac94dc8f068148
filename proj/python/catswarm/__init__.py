"""Cat swarm optimization: engines, benchmark suite and comparison statistics.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    CsoParams,
    __version__,
    derive_seed,
    evaluate,
    evaluate_noiseless,
    friedman_statistic,
    inertia_at,
    list_functions,
    rank_row,
    run,
    summarize,
    wilcoxon_signed_rank,
)

__all__ = [
    "CsoParams",
    "__version__",
    "derive_seed",
    "evaluate",
    "evaluate_noiseless",
    "friedman_statistic",
    "inertia_at",
    "list_functions",
    "rank_row",
    "run",
    "summarize",
    "wilcoxon_signed_rank",
]
