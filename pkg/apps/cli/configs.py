from apps.common.configs import StableConfigs


class SweepConfigs(StableConfigs):
    SECTION = "SWEEP"
    DEFAULT_CONFIG = {
        "THREADS": 1,
        "FLOAT_DIGITS": 12,
        "CSV_COLUMNS": [
            "d",
            "q",
            "kind",
            "bound",
            "value",
            "n_x",
            "n_z",
            "n_min",
            "n_lc_mean",
            "n_samples",
            "seed",
        ],
    }
