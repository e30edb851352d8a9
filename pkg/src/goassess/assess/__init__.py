from .features import (
    TMR_PROFILES,
    MoveFeatures,
    TmrProfile,
    TmrState,
    compute_tmr,
    extract_features,
    tmr_triple,
)
from .knowledge import (
    CGS_LABELS,
    DEFAULT_STATS,
    FML_1,
    FML_2,
    INPUT_NAMES,
    VariableStats,
    build_default_kb,
    build_system,
)
from .rulegen import (
    REFERENCE_ROWS,
    MirrorReport,
    RuleGenError,
    RuleGenScheme,
    default_scheme,
    fit_scheme,
    generate_rulebase,
    mirror_report,
    save_scheme,
    verify_scheme,
)
from .situation import (
    ASSESSMENT_START_MOVE,
    FAVORABLE_BLACK,
    FAVORABLE_WHITE,
    UNCERTAIN,
    UNDECIDED,
    CgsRecord,
    OgsVerdict,
    assess_move,
    decide_ogs_method1,
    decide_ogs_method2,
    label_side,
    winner_from_result,
)
from .systems import load_shipped_system

__all__ = [
    "ASSESSMENT_START_MOVE",
    "CGS_LABELS",
    "CgsRecord",
    "DEFAULT_STATS",
    "FAVORABLE_BLACK",
    "FAVORABLE_WHITE",
    "FML_1",
    "FML_2",
    "INPUT_NAMES",
    "MirrorReport",
    "MoveFeatures",
    "OgsVerdict",
    "REFERENCE_ROWS",
    "RuleGenError",
    "RuleGenScheme",
    "TMR_PROFILES",
    "TmrProfile",
    "TmrState",
    "UNCERTAIN",
    "UNDECIDED",
    "VariableStats",
    "assess_move",
    "build_default_kb",
    "build_system",
    "compute_tmr",
    "decide_ogs_method1",
    "decide_ogs_method2",
    "default_scheme",
    "extract_features",
    "fit_scheme",
    "generate_rulebase",
    "label_side",
    "load_shipped_system",
    "mirror_report",
    "save_scheme",
    "tmr_triple",
    "verify_scheme",
    "winner_from_result",
]
