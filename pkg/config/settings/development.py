from .base import *

# Development-specific settings can be added here.
LOGGING['loggers']['apps']['level'] = os.environ.get('SQUEEZING_LOG_LEVEL', 'INFO')
