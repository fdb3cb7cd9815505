# This file marks the settings directory as a Python package.
