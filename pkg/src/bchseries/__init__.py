"""Exact Baker-Campbell-Hausdorff-type series and their coefficient census."""

from .algebra import (
    EMPTY_WORD,
    FreePoly,
    Letter,
    RunWord,
    Word,
    WordParseError,
    X,
    Y,
    all_words,
    cyclic_shift,
    interchange,
    reverse,
    word_format,
    word_parse,
)
from .census import (
    BoundReport,
    CensusRecord,
    OccurrenceProfile,
    PropertyReport,
    bound_checks,
    census,
    census_sweep,
    census_to_csv,
    census_to_json,
    letter_occurrence_profile,
    property_report_to_json,
    property_suite,
)
from .engine import (
    ExpFactor,
    PRESET_NAMES,
    PRESETS,
    SeriesTerm,
    UTMatrix,
    VariantPreset,
    build_generator,
    engine_coefficient,
    generator_combination,
    nilpotent_exp,
    nilpotent_log,
    preset,
    series_term,
    series_terms,
)
from .forms import CLAIMED_FORMS, check_form, check_forms
from .lie import (
    CommPoly,
    comm_parse,
    commutator_form_diff,
    dynkin_series,
    expand_comm_poly,
    expand_nested,
    is_lie_element,
    lie_content_check,
    rewrite_identity_check,
    verify_commutator_form,
)
from .oracle import (
    BlockSeq,
    GoldbergValue,
    bernoulli,
    block_count,
    block_normal_form,
    collapse,
    goldberg_direct,
    goldberg_direct_naive,
    goldberg_value,
    goldberg_xy,
    goldberg_xy_images,
)

__all__ = [name for name in dir() if not name.startswith("_")]
