"""
posetforge
==========

Available subpackages
---------------------
base
    Graph and weighted poset types, interfaces, errors and settings.
graphs
    Canonical labeling, graph6 and edge-list formats, the graph catalog.
counting
    Subgraph counts and connected partitions.
posets
    Edge-subgraph posets, induced subgraph posets and bond lattices.
families
    The exceptional families and the table of named exceptional graphs.
reconstruct
    Reconstruction from the abstract edge-subgraph poset.
harness
    Command-line interface and verification suites.

"""

__all__ = ["base", "counting", "families", "graphs", "harness", "posets",
           "reconstruct", "utils"]
