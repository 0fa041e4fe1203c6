"""Exception types shared across the package."""


class VerificationFailure(Exception):
    """A conclusion that must hold for every valid input failed.

    Raised only when a structural guarantee is violated at runtime (two
    reduced distributions that must coincide differ, a mandatory shift does
    not exist, the two routes of a dual-route predicate disagree).  Such a
    failure is a reportable finding about the machinery, not a usage error;
    bad inputs raise ValueError instead.
    """
