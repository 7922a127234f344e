"""Channel-polarized multilevel coding with iterative decoding.

Thin python surface over the C++ core: eBCH component codes, ordered
statistics decoding, the three coding schemes, and the Monte Carlo
harness (BER points, threshold search, NCG).
"""

from cpfec._core import (  # noqa: F401
    KP4_RATE,
    KP4_THRESHOLD_BER,
    LLR_MAX,
    RNG_ALGORITHM,
    ComponentCode,
    SchemeConfig,
    boxplus,
    boxplus_reduce,
    bsc_erasure_probabilities,
    build_ebch,
    build_ebch_field,
    build_interleaver,
    code_by_name,
    flipping_set_size,
    info_bit_count,
    make_scheme,
    message_schedule,
    ncg,
    osd_decode,
    outer_success,
    q_func,
    q_func_inv,
    required_snr,
    run_point,
    scheme_decode,
    scheme_encode,
    scheme_overhead,
    sdd_count_per3,
    snr_to_sigma,
    total_rate,
    uncoded_snr_db_at,
)

__all__ = [
    "KP4_RATE",
    "KP4_THRESHOLD_BER",
    "LLR_MAX",
    "RNG_ALGORITHM",
    "ComponentCode",
    "SchemeConfig",
    "boxplus",
    "boxplus_reduce",
    "bsc_erasure_probabilities",
    "build_ebch",
    "build_ebch_field",
    "build_interleaver",
    "code_by_name",
    "flipping_set_size",
    "info_bit_count",
    "make_scheme",
    "message_schedule",
    "ncg",
    "osd_decode",
    "outer_success",
    "q_func",
    "q_func_inv",
    "required_snr",
    "run_point",
    "scheme_decode",
    "scheme_encode",
    "scheme_overhead",
    "sdd_count_per3",
    "snr_to_sigma",
    "total_rate",
    "uncoded_snr_db_at",
]

__version__ = "0.1.0"
