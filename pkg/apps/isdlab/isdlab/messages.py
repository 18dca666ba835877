"""Centralized repository for user-facing help strings."""

from isd_indices import AVERAGED_INEQUALITIES, INDEX_FAMILIES

__all__ = ["HELP"]


class HELP:
    DESCRIPTION = (
        "Compute degree-based topological indices, check the inequalities bounding "
        "the variable inverse sum deg index, and average indices over G(n, p)."
    )
    EPILOG = "Exit codes: 0 success, 1 inequality violation detected, 2 usage or input error."

    class COMMON:
        VERBOSE = "Log debug messages."
        QUIET = "Only log warnings and errors."
        FORMAT = "Output format for tables (default: %(default)s)."
        OUT = "Write the table to this file instead of standard output."
        PERMISSIVE = "Drop self-loops and duplicate edges instead of rejecting the input."
        GRAPH_FILE = "Edge-list file: an 'n m' header followed by m lines 'u v' (0-based)."
        GRAPH_NAME = "Use a named graph instead of a file: P<k>, C<k>, K<k>, K<a>,<b> or S<k>."

    class INDEX:
        SUMMARY = "Evaluate indices on one graph."
        SPEC = (
            "Comma-separated index specs family[:exponent]; families: "
            + ", ".join(INDEX_FAMILIES)
            + " (e.g. isd:-1,ga)."
        )

    class VERIFY:
        SUMMARY = "Check every bound on one graph over a grid of exponents."
        A_GRID = "Exponent grid: start:stop:step (inclusive) or a comma list, e.g. -2:2:0.5."

    class SWEEP:
        SUMMARY = "Average an index over G(n, p) random graphs."
        N = "Number of vertices."
        P_GRID = (
            "Edge probabilities: start:stop:step, start:stop:logN (N log-spaced points, "
            "stop excluded) or a comma list; every p must lie in (0, 1)."
        )
        A_GRID = "Exponent grid (ignored by ga and ag)."
        SPEC = "Index family to average (default: %(default)s)."
        REPLICAS = "Graphs per p, or 'auto' for ceil(10^7 / n) capped by --replica-budget."
        REPLICA_BUDGET = "Cap on --replicas auto (default: %(default)s)."
        SEED = "Seed of the random streams; the same seed reproduces every output byte."
        CHECK = (
            "Also check an averaged inequality; repeatable. One of: "
            + ", ".join(AVERAGED_INEQUALITIES)
            + "."
        )
        CHECK_A = "Exponent grid for every --check (default: each inequality's own grid)."
        STRICT_SAMPLES = (
            "Fail when a replica keeps drawing graphs with isolated vertices "
            "(default: drop the replica and flag the cell untrusted)."
        )
        OUT_DIR = "Directory for the output files (default: %(default)s)."
        ZIP = "Bundle all outputs into a single zip archive."
        PROGRESS = "Show a progress bar."

    class COLLAPSE:
        SUMMARY = "Compare index / n across graph sizes at matched mean degree."
        FILES = "Sweep files written by 'isdlab sweep'."
        MIN_DEGREE = "Lowest mean degree to compare (default: %(default)s)."
        MAX_DEGREE = "Highest mean degree to compare (default: no limit)."
        FAMILY = "Only use rows of this index family."
        A_GRID = "Only use rows with these exponents."
        TRUSTED_ONLY = "Skip cells flagged untrusted."
