"""Graphs, Laplacians, random generators and Kron reduction."""
