"""Report documents, sweeps, verification runs and the management commands."""
