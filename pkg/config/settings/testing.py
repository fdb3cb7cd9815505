from .base import *

# Tests always run single-threaded with the fixed default seed.
SQUEEZING = {
    **SQUEEZING,
    'DEFAULT_SEED': 7,
    'WORKERS': 1,
}
