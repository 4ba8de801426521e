import os

# -----------------------------------------------------------------------------
# Numerics
# -----------------------------------------------------------------------------
ENV_TOL = "EQUIPARTITION_TOL"
ENV_NORM_TOL = "EQUIPARTITION_NORM_TOL"
ENV_FLOAT_DIGITS = "EQUIPARTITION_FLOAT_DIGITS"

DEFAULT_TOL = 1e-9
DEFAULT_NORM_TOL = 1e-6  # typed amplitudes on the command line
DEFAULT_FLOAT_DIGITS = 12

# -----------------------------------------------------------------------------
# Size caps (read at runtime so tests can monkeypatch the environment)
# -----------------------------------------------------------------------------
ENV_MAX_QUBITS = "EQUIPARTITION_MAX_QUBITS"
ENV_MAX_OPERATOR_QUBITS = "EQUIPARTITION_MAX_OPERATOR_QUBITS"
ENV_MAX_FUNCTION_BITS = "EQUIPARTITION_MAX_FUNCTION_BITS"
ENV_MAX_ANCILLA_BITS = "EQUIPARTITION_MAX_ANCILLA_BITS"
ENV_MAX_ANCILLAS = "EQUIPARTITION_MAX_ANCILLAS"
ENV_MAX_PRINT_QUBITS = "EQUIPARTITION_MAX_PRINT_QUBITS"

DEFAULT_MAX_QUBITS = 20  # 2^20 amplitudes
DEFAULT_MAX_OPERATOR_QUBITS = 12  # 4096 x 4096 complex matrix
DEFAULT_MAX_FUNCTION_BITS = 4  # 65536 functions
DEFAULT_MAX_ANCILLA_BITS = 3
DEFAULT_MAX_ANCILLAS = 2
DEFAULT_MAX_PRINT_QUBITS = 10

# -----------------------------------------------------------------------------
# Logging / tracing / definitions
# -----------------------------------------------------------------------------
ENV_LOG_LEVEL = "EQUIPARTITION_LOG_LEVEL"
ENV_TRACE_PATH = "EQUIPARTITION_TRACE"  # JSONL trace path; unset disables tracing
ENV_TRACE_LEVEL = "EQUIPARTITION_TRACE_LEVEL"  # pipeline|verbose|debug
ENV_EXTENSIONS_DIR = "EQUIPARTITION_EXTENSIONS_DIR"

DEFAULT_LOG_LEVEL = os.getenv(ENV_LOG_LEVEL, "WARNING")
DEFAULT_TRACE_LEVEL = os.getenv(ENV_TRACE_LEVEL, "pipeline")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def get_tolerance() -> float:
    """Return the amplitude-level tolerance (env-aware)."""
    return _env_float(ENV_TOL, DEFAULT_TOL)


def get_norm_tolerance() -> float:
    """Return the normalization tolerance for typed amplitudes (env-aware)."""
    return _env_float(ENV_NORM_TOL, DEFAULT_NORM_TOL)


def get_float_digits() -> int:
    return _env_int(ENV_FLOAT_DIGITS, DEFAULT_FLOAT_DIGITS)


def get_max_qubits() -> int:
    """Return the dense state-vector cap in qubits (env-aware)."""
    return _env_int(ENV_MAX_QUBITS, DEFAULT_MAX_QUBITS)


def get_max_operator_qubits() -> int:
    """Return the dense operator cap in qubits (env-aware)."""
    return min(_env_int(ENV_MAX_OPERATOR_QUBITS, DEFAULT_MAX_OPERATOR_QUBITS), get_max_qubits())


def get_max_function_bits() -> int:
    return _env_int(ENV_MAX_FUNCTION_BITS, DEFAULT_MAX_FUNCTION_BITS)


def get_max_ancilla_bits() -> int:
    return _env_int(ENV_MAX_ANCILLA_BITS, DEFAULT_MAX_ANCILLA_BITS)


def get_max_ancillas() -> int:
    return _env_int(ENV_MAX_ANCILLAS, DEFAULT_MAX_ANCILLAS)


def get_max_print_qubits() -> int:
    return _env_int(ENV_MAX_PRINT_QUBITS, DEFAULT_MAX_PRINT_QUBITS)


def get_trace_path() -> str:
    """Return the trace path from the environment ("" when tracing is off)."""
    return os.getenv(ENV_TRACE_PATH, "").strip()


def get_extensions_dir() -> str:
    """Return an override directory for extension scheme definitions ("" = bundled)."""
    return os.getenv(ENV_EXTENSIONS_DIR, "").strip()
