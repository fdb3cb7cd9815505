"""Two-qubit Schmidt analysis, concurrence and the ξ̃₂ < 1 entanglement witness."""
