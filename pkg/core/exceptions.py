"""
Exception hierarchy shared by every app.

Each exception carries a human message, a machine code and a details dict,
plus the exit code the management commands return for it.
"""

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_INVARIANT_VIOLATION = 3


class SqueezingError(Exception):
    """Base exception for the squeezing toolkit."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message=None, code=None, details=None):
        self.message = message or "An error occurred"
        self.code = code or "UNKNOWN_ERROR"
        self.details = details or {}
        super().__init__(self.message)

    def as_dict(self):
        return {
            'error': {
                'code': self.code,
                'message': self.message,
                'details': self.details,
            }
        }


class InputError(SqueezingError):
    """Raised when input is malformed or refers to something that does not exist."""

    def __init__(self, message=None, code=None, details=None):
        super().__init__(message=message or "Invalid input", code=code or "INVALID_INPUT", details=details)


class QubitIndexError(InputError):
    """Raised when a qubit index is out of range."""

    def __init__(self, index=None, n_qubits=None):
        message = "Qubit index out of range"
        if index is not None and n_qubits is not None:
            message = f"Qubit index {index} out of range for {n_qubits} qubits"
        super().__init__(message=message, code="QUBIT_INDEX_OUT_OF_RANGE",
                         details={'index': index, 'n_qubits': n_qubits})


class ArityError(InputError):
    """Raised when an operation receives the wrong number of qubits or angles."""

    def __init__(self, expected=None, received=None, what="qubits"):
        message = f"Expected {expected} {what}, got {received}"
        super().__init__(message=message, code="ARITY_MISMATCH",
                         details={'expected': expected, 'received': received, 'what': what})


class StateFileError(InputError):
    """Raised when a state file cannot be read or does not match the schema."""

    def __init__(self, path=None, field_errors=None):
        message = "Malformed state file"
        if path:
            message = f"Malformed state file {path}"
        super().__init__(message=message, code="MALFORMED_STATE_FILE", details=field_errors)


class FamilyError(InputError):
    """Raised for an unknown state family or an invalid family parameter."""

    def __init__(self, family=None, parameter=None, reason=None):
        message = "Invalid state family"
        if family and parameter:
            message = f"Invalid parameter {parameter} for family {family}"
        elif family:
            message = f"Unknown or invalid state family {family}"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message=message, code="INVALID_FAMILY",
                         details={'family': family, 'parameter': parameter})


class NonUnitaryError(InputError):
    """Raised when a matrix that must be unitary is not."""

    def __init__(self, deviation=None):
        message = "Matrix is not unitary"
        if deviation is not None:
            message = f"Matrix is not unitary (deviation {deviation:.3e})"
        super().__init__(message=message, code="NON_UNITARY", details={'deviation': deviation})


class ConfigurationError(SqueezingError):
    """Raised when there's a configuration error."""

    def __init__(self, component=None, setting=None):
        message = "Configuration error"
        if component and setting:
            message = f"Configuration error in {component}: {setting}"
        elif component:
            message = f"Configuration error in {component}"

        super().__init__(message=message, code="CONFIGURATION_ERROR")


class StateInvariantError(SqueezingError):
    """Raised when a state violates a construction invariant."""

    exit_code = EXIT_INVARIANT_VIOLATION

    def __init__(self, invariant=None, value=None):
        message = "State invariant violated"
        if invariant:
            message = f"State invariant violated: {invariant}"
        super().__init__(message=message, code="STATE_INVARIANT_VIOLATION",
                         details={'invariant': invariant, 'value': value})


class MinimizerError(SqueezingError):
    """Raised when coordinate descent increases its objective."""

    exit_code = EXIT_INVARIANT_VIOLATION

    def __init__(self, sweep=None, increase=None):
        message = "Coordinate descent objective increased"
        if sweep is not None:
            message = f"Coordinate descent objective increased by {increase:.3e} in sweep {sweep}"
        super().__init__(message=message, code="NON_MONOTONE_DESCENT",
                         details={'sweep': sweep, 'increase': increase})


def exit_code_for(exc):
    """Map an exception to the documented command exit code."""
    if isinstance(exc, SqueezingError):
        return exc.exit_code
    return EXIT_INPUT_ERROR
