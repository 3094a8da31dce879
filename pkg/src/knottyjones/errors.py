"""Exception hierarchy shared across the package.

Every error raised by this package derives from KnotError so callers can
catch the whole family at API boundaries (CLI exit codes, HTTP status
mapping) without enumerating leaf classes.
"""


class KnotError(Exception):
    """Base class for all knotty-jones errors."""


class PdSyntaxError(KnotError):
    """Malformed PD-code text or JSON (tokenizer/shape level)."""


class ValidationError(KnotError):
    """Structurally invalid PD code or diagram.

    Raised for arc-count violations, non-contiguous arc ids,
    multi-component or disconnected inputs, inconsistent strand
    orientation, and non-planar pairings (Euler check failure).
    """


class InapplicableMove(KnotError):
    """A move's site predicate does not hold on the target diagram."""


class CrossingCapExceeded(KnotError):
    """Applying the move would push the diagram over the crossing cap."""


class VariableMismatch(KnotError):
    """Arithmetic between Laurent polynomials in different variables."""


class BudgetExceeded(KnotError):
    """State-sum evaluation refused: too many crossings or timed out."""


class NonKnotExponent(KnotError):
    """A bracket exponent not divisible by 4 surfaced during the t-substitution.

    For single-component diagrams every exponent of (-A)^(-3w) * <D> is a
    multiple of 4, so hitting this signals a multi-component bug upstream.
    """


class TransportError(KnotError):
    """Remote oracle endpoint unreachable or connection-level failure."""


class ProtocolError(KnotError):
    """Remote oracle replied with something other than the wire protocol."""


class GenerationExhausted(KnotError):
    """Opponent generation hit maxAttempts without an accepted candidate."""


class BudgetViolation(KnotError):
    """A turn submission exceeds the per-turn move or inversion budget."""


class CorruptSession(KnotError):
    """A persisted session record failed to load or verify by replay."""


class TurnConflict(KnotError):
    """Another turn is being applied to the same session right now."""
