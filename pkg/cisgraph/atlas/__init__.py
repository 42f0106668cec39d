"""
Canonical forms and isomorphism free catalogs of small graphs by class.
"""
from cisgraph.atlas.canonical import (
    CANONICAL_CAP,
    CanonicalCode,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
)
from cisgraph.atlas.catalog import CatalogCheck, check_catalog, compare_catalog
from cisgraph.atlas.classes import (
    ALL,
    CLASS_CAPS,
    CONNECTED,
    ClassTag,
    GraphClass,
    SERIES_REDUCED,
    TREE,
    UNICYCLIC,
    cyclomatic,
    r_components,
)
from cisgraph.atlas.generation import (
    catalog,
    catalog_size,
    generate,
    generate_with_codes,
)

__all__ = [
    "ALL",
    "CANONICAL_CAP",
    "CLASS_CAPS",
    "CONNECTED",
    "CanonicalCode",
    "CatalogCheck",
    "ClassTag",
    "GraphClass",
    "SERIES_REDUCED",
    "TREE",
    "UNICYCLIC",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "catalog",
    "catalog_size",
    "check_catalog",
    "compare_catalog",
    "cyclomatic",
    "generate",
    "generate_with_codes",
    "is_isomorphic",
    "r_components",
]
