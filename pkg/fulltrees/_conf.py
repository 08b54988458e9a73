"""Package configuration parameters."""

# pow2 doubling ceiling, balance_naive refuses inputs at or above it
POW2_CEILING = 2**62

# largest shape size the brute force enumeration accepts
ENUMERATION_LIMIT = 15

# supported balancing tiers
ALGORITHM_PARAMS = {
    "naive": {
        "description": "dynamically checked alternating lists",
        "total": False,  # may raise on broken invariants
        "carrier": "list",  # intermediate structure
    },
    "typed": {
        "description": "alternating power lists padded through the parity view",
        "total": True,
        "carrier": "power list",
    },
    "structural": {
        "description": "alternating power lists padded through 1-2 binary lists",
        "total": True,
        "carrier": "binary list",
    },
}

DEFAULT_ALGORITHM = "structural"

# CLI formats
RENDER_FORMATS = ("sexpr", "json", "dot")
INPUT_FORMATS = ("lines", "csv-row")

# benchmark defaults
BENCH_SIZES = tuple(2**i for i in range(10, 19))
BENCH_TRIALS = 3

# linearity tolerances for clause counts
RATIO_BAND = (1.8, 2.2)
SLOPE_BAND = (0.9, 1.1)
