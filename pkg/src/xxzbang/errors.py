"""Exception types shared across the package."""


class XxzBangError(Exception):
    """Base class for all package-specific errors."""


class StatesCoincideError(XxzBangError):
    """Initial and target states are (nearly) identical, so normalized
    distances are undefined. Carries the offending overlap."""

    def __init__(self, overlap: float):
        self.overlap = overlap
        super().__init__(
            f"initial and target states coincide (overlap = {overlap:.12g}); "
            "normalized distances are undefined"
        )


class DegenerateGroundStateError(XxzBangError):
    """Ground state is degenerate within tolerance. Carries both candidate
    eigenvectors so the caller can inspect the subspace."""

    def __init__(self, gap: float, tolerance: float, vectors):
        self.gap = gap
        self.tolerance = tolerance
        self.vectors = vectors
        super().__init__(
            f"near-degenerate ground state: gap {gap:.3e} below tolerance {tolerance:.3e}"
        )


class ProtocolError(XxzBangError):
    """Invalid protocol: out-of-range values, unsorted jump times, or a
    forbidden both-controls-off segment."""


class AxesMismatchError(XxzBangError):
    """Two sweep grids were combined but their axes differ."""


class FitConvergenceError(XxzBangError):
    """Nonlinear fit failed to converge; `best_attempt` holds the least-bad fit."""

    def __init__(self, message: str, best_attempt=None):
        self.best_attempt = best_attempt
        super().__init__(message)


class PipelineError(XxzBangError):
    """Critical-time search failed; `history` holds the (tau, distance) probes."""

    def __init__(self, message: str, history=None):
        self.history = list(history) if history else []
        super().__init__(message)


class RecordFormatError(XxzBangError):
    """A persisted document could not be parsed."""


class MissingSectionError(RecordFormatError):
    """A required section is absent (truncated or corrupted file)."""

    def __init__(self, section: str, path=None):
        self.section = section
        where = f" in {path}" if path else ""
        super().__init__(f"missing section [{section}]{where}")


class FormatVersionError(RecordFormatError):
    """Document declares an unsupported format version."""

    def __init__(self, found, supported):
        self.found = found
        self.supported = supported
        super().__init__(f"unsupported format version {found!r} (supported: {supported})")
