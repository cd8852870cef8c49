"""Shared exception types."""


class NumericalFailure(RuntimeError):
    """Raised when a numerical procedure breaks down (NaN loss, non-convergence,
    covariance that is not positive semi-definite beyond regularization).

    Carries enough context for the caller to recover: ``step`` is the step
    index at which the failure was detected, ``last_good`` an optional
    checkpoint-like payload captured before the failure.
    """

    def __init__(self, message, step=None, last_good=None, final_loss=None):
        super().__init__(message)
        self.step = step
        self.last_good = last_good
        self.final_loss = final_loss
