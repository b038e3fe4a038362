"""Exact inertia of weighted unicyclic graphs."""
