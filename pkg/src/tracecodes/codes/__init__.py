"""Cyclic-code objects, distance computation and bounds."""
