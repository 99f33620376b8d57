from ._shoalg import (
    ConfigError,
    ParityError,
    ReconstructionError,
    SamplingError,
    Workbench,
    import_check,
)

__all__ = [
    "ConfigError",
    "ParityError",
    "ReconstructionError",
    "SamplingError",
    "Workbench",
    "import_check",
]
