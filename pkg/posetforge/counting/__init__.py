"""
Exact counters for the weights q, p, omega and k, and connected partitions.
"""
from __future__ import absolute_import

from .subgraphs import (count_components_isomorphic, count_edge_subgraphs,
                        count_edge_subgraphs_oracle, count_induced_subgraphs,
                        edge_subgraph_classes, edge_subgraph_profile,
                        induced_subgraph_classes, induced_subgraph_profile)
from .partitions import (PartialConnectedPartition, PartitionImage,
                         block_families, connected_sets, count_omega,
                         count_omega_spanning, enumerate_connected_partitions,
                         enumerate_connected_partitions_rgs, omega_classes,
                         omega_profile, partition_image)

__all__ = [
    'PartialConnectedPartition',
    'PartitionImage',
    'block_families',
    'connected_sets',
    'count_components_isomorphic',
    'count_edge_subgraphs',
    'count_edge_subgraphs_oracle',
    'count_induced_subgraphs',
    'count_omega',
    'count_omega_spanning',
    'edge_subgraph_classes',
    'edge_subgraph_profile',
    'enumerate_connected_partitions',
    'enumerate_connected_partitions_rgs',
    'induced_subgraph_classes',
    'induced_subgraph_profile',
    'omega_classes',
    'omega_profile',
    'partition_image',
]
