"""Resource bounds shared by the enumeration and expansion engines.

All enumerations here are factorially large; the bounds below keep
accidental huge inputs from hanging a session.  Every entry point that
enforces a bound also accepts an override.
"""

# Maximum total vertex degree (= number of half-edges) for a twisted
# ribbon graph census.
WIGNER_DEGREE_BOUND = 12

# Maximum number of edges n for a bipartite census ((2n-1)!! matchings).
BIPARTITE_EDGE_BOUND = 6

# Maximum number of Gaussian factor positions for the brute-force
# component expansion (4^positions terms before merging).
EXPANSION_POSITION_BOUND = 12

# Rough work ceiling for Monte Carlo runs: samples * N^2 * total degree.
MC_WORK_BOUND = 4_000_000_000


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds a configured resource bound."""
