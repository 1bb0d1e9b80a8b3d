"""Label-preserving graph augmentation with null models.

Strategies: 0k/1k/2k null-model rewiring, leaf node augmentation (LNA) and
centrality-guided approximate augmentation (ADA-C/Bc/Cc/Ec).
"""

from .approx import NodeFeature, ada_augment, ada_rewire_step, propose_ada_rewire
from .attributes import (
    AttributeVector,
    JointDegreeDistribution,
    attribute_vector,
    average_degree,
    avg_betweenness,
    avg_closeness,
    avg_clustering,
    avg_eigenvector,
    betweenness_values,
    closeness_values,
    clustering_values,
    degree_distribution,
    eigenvector_values,
    joint_degree_distribution,
    leaf_count,
    leaf_proportion,
)
from .augment import augment, augment_dataset, graph_rng
from .config import AugmentationConfig, AugmentResult, CandidateLog, Strategy
from .dataset import GraphDataset, LabeledGraph, read_tudataset, write_tudataset
from .evaluation import (
    EvalReport,
    SplitSpec,
    evaluate,
    filter_hook,
    knn_baseline_accuracy,
    merge_train,
    relative_gain,
    split_dataset,
    success_rate,
)
from .graph import Graph, RewireOp, apply_rewire, degree, is_connected
from .leaf import eligible_leaf_edges, lna_augment
from .null_models import rewire_0k_step, rewire_1k_step, rewire_2k_step, run_null_model

__version__ = "0.1.0"

__all__ = [
    "NodeFeature",
    "ada_augment",
    "ada_rewire_step",
    "propose_ada_rewire",
    "AttributeVector",
    "JointDegreeDistribution",
    "attribute_vector",
    "average_degree",
    "avg_betweenness",
    "avg_closeness",
    "avg_clustering",
    "avg_eigenvector",
    "betweenness_values",
    "closeness_values",
    "clustering_values",
    "degree_distribution",
    "eigenvector_values",
    "joint_degree_distribution",
    "leaf_count",
    "leaf_proportion",
    "augment",
    "augment_dataset",
    "graph_rng",
    "AugmentationConfig",
    "AugmentResult",
    "CandidateLog",
    "Strategy",
    "GraphDataset",
    "LabeledGraph",
    "read_tudataset",
    "write_tudataset",
    "EvalReport",
    "SplitSpec",
    "evaluate",
    "filter_hook",
    "knn_baseline_accuracy",
    "merge_train",
    "relative_gain",
    "split_dataset",
    "success_rate",
    "Graph",
    "RewireOp",
    "apply_rewire",
    "degree",
    "is_connected",
    "eligible_leaf_edges",
    "lna_augment",
    "rewire_0k_step",
    "rewire_1k_step",
    "rewire_2k_step",
    "run_null_model",
]
