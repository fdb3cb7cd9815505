"""N-qubit states, named state families and the JSON state file format."""
