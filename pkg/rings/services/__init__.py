"""Service layer for the rings app: construction, counting, bounds and verification."""
