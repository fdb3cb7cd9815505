"""Transverse variance minimization and the ξ̃₁, ξ̃₂, ξ₁, ξ₂ squeezing parameters."""
