from .canonical import IsoClass, IsoClassPartition, canonical_form, canonical_key, partition_classes
from .certificate import CertificateReport, Embedding, certify, verify_certificate
from .config import PipelineConfig
from .counting import (
    automorphism_count,
    copies_through,
    count_labeled_embeddings,
    count_trend,
    embeddings_through,
    embeddings_through_pair,
)
from .forest import SampleForest, build_sample_forest, effective_sample_size, forest_bounds, supply_check
from .greedy import greedy_capacity, greedy_embed
from .packing import PackingResult, check_packing, pack_forest
from .pipeline import FAILURE, SUCCESS, EmbedResult, check_preconditions, embed
from .placement import Placement, attach_stars, realize_P
