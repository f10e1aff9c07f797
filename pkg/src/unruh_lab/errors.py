"""Exception and warning types shared across the library."""


class UnruhLabError(Exception):
    """Base class for all library errors."""


class DomainError(UnruhLabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularFrequencyError(UnruhLabError, ValueError):
    """Evaluation requested at (or across) a non-removable frequency singularity."""


class UnsupportedScenarioError(UnruhLabError, ValueError):
    """The requested operation is not defined for this scenario (e.g. non-KMS)."""


class QuadratureError(UnruhLabError, RuntimeError):
    """Adaptive quadrature failed to converge within its refinement budget."""


class DerivativeError(UnruhLabError, RuntimeError):
    """A numerical derivative could not be stabilised to the required digits."""


class SeriesConvergenceError(UnruhLabError, ValueError):
    """Series evaluation requested outside its proven convergence region."""


class EDRUndefinedError(UnruhLabError, ZeroDivisionError):
    """Excitation-to-deexcitation ratio undefined (denominator below floor)."""


class PrecisionLossWarning(UserWarning):
    """Result returned, but the evaluation regime degrades attainable accuracy."""


class ValidityWarning(UserWarning):
    """Result returned outside the stated validity region of an approximation."""


class PerturbativityWarning(UserWarning):
    """Transition probability large enough to strain leading-order perturbation theory."""
