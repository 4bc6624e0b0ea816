from apps.common.configs import StableConfigs


class LeConfigs(StableConfigs):
    SECTION = "LE"
    DEFAULT_CONFIG = {
        "DENSE_MAX_QUBITS": 14,
        "DENSITY_MAX_QUBITS": 12,
        "RLE_MAX_QUBITS": 9,
        "EIGEN_TOLERANCE": 1e-12,
        "STATE_TOLERANCE": 1e-10,
        "THREADS": 1,
    }
