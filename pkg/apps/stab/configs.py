from apps.common.configs import StableConfigs


class StabConfigs(StableConfigs):
    SECTION = "STAB"
    DEFAULT_CONFIG = {
        "FORCED_PAIR_ATTEMPTS": 64,
    }
