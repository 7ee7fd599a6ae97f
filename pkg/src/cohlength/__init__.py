"""Cohomological length functions on perfect complexes."""
