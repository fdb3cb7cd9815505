"""Per-qubit Bloch frames, pairwise correlation matrices and dense collective operators."""
