"""Construction, validation and analysis of symmetric configurations v_3."""

from .census import (
    FragmentCensus,
    census_from_formulas,
    count_fragments_direct,
    count_triangles,
    verify_census,
)
from .construct import (
    ExtensionTrace,
    cremona_richmond,
    extend_plus_five,
    find_ten_cycle,
    heawood_chain,
    seed_triangle_free,
    triangle_free,
)
from .core import (
    CanonicalForm,
    Configuration,
    ValidationReport,
    are_isomorphic,
    canonical_form,
    format_compact,
    format_json,
    is_connected,
    parse_compact,
    parse_json,
    read_configuration,
    validate,
)
from .cyclic import (
    CyclicTriple,
    classify_cyclic,
    cyclic_configuration,
    enumerate_cyclic,
    predict_cyclic_triangles,
)
from .enumeration import TriangleDistribution, enumerate_all, triangle_distribution
from .graphs import (
    INFINITE,
    LeviGraph,
    SimpleGraph,
    configuration_from_levi,
    count_six_cycles,
    girth,
    incidence_graph,
    levi_graph,
)

__version__ = "0.1.0"
