from dataclasses import dataclass, field

__all__ = ["Verdict"]


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of a check that can legitimately fail.

    Parameters
    ----------
    passed : `bool`
        Whether the check holds.
    name : `str`
        Short name of the check.
    witnesses : `dict`
        Supporting data: offending objects on failure, certificates on success.
    truncation_dependent : `bool`
        `True` when the answer could change with a larger window.
    detail : `str`
        Human readable summary.
    """

    passed: bool
    name: str = ""
    witnesses: dict = field(default_factory=dict)
    truncation_dependent: bool = False
    detail: str = ""

    def __bool__(self):
        return self.passed

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        extra = " (truncation dependent)" if self.truncation_dependent else ""
        text = f"{self.name}: {status}{extra}"
        return f"{text} {self.detail}".rstrip()
