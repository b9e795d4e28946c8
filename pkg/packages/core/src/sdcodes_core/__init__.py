"""sdcodes Core - Shared errors, interchange documents, and configuration.

This package provides the foundation for sdcodes:
- Error hierarchy used by every layer
- CodeDocument, the JSON-lines / CSV interchange format
- Configuration parsing (~/.config/sdcodes/config.yaml)
"""

from sdcodes_core.config import (
    CONFIG_TEMPLATE,
    EnumerateSettings,
    FieldSettings,
    LoggingSettings,
    OracleSettings,
    SdcodesConfig,
    get_config_dir,
    parse_bits,
)
from sdcodes_core.errors import (
    BudgetExceededError,
    ConfigError,
    DimensionError,
    DivisionByZeroError,
    DocumentError,
    FieldError,
    InconsistencyError,
    NotInvertibleError,
    ParameterError,
    SdcodesError,
    UndefinedDegreeError,
    ValidationError,
)
from sdcodes_core.types import (
    CSV_HEADER,
    SCHEMA_VERSION,
    CodeDocument,
    CodeMetadata,
    Family,
    GeneratorRecord,
    read_documents,
)

__all__ = [
    "CONFIG_TEMPLATE",
    "CSV_HEADER",
    "SCHEMA_VERSION",
    "BudgetExceededError",
    "CodeDocument",
    "CodeMetadata",
    "ConfigError",
    "DimensionError",
    "DivisionByZeroError",
    "DocumentError",
    "EnumerateSettings",
    "Family",
    "FieldError",
    "FieldSettings",
    "GeneratorRecord",
    "InconsistencyError",
    "LoggingSettings",
    "NotInvertibleError",
    "OracleSettings",
    "ParameterError",
    "SdcodesConfig",
    "SdcodesError",
    "UndefinedDegreeError",
    "ValidationError",
    "get_config_dir",
    "parse_bits",
    "read_documents",
]
