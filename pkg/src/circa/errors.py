"""Exception hierarchy shared by the library and the CLI."""


class CircaError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CircaError):
    """Invalid user input: malformed rows, composite numbers where primes are
    required, out-of-range parameters.  The CLI maps this to exit code 1."""


class InternalInconsistencyError(CircaError):
    """Two independent exact computations disagreed.  This indicates a bug in
    the implementation, never bad input.  The CLI maps this to exit code 2."""
