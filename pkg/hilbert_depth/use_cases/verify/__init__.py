"""Brute-force oracles and desk-scale re-certification of the shadow and beta inequalities."""
