'''Errors raised by sigma7.

Every error is a ``ValueError`` so callers may catch the broad class; the CLI maps
them to exit codes (1 for validation, 2 for ``NeedsDoubleSuspension``).
'''
import warnings

class TwoTorsionDropped(UserWarning):
    '''Issued whenever 2-primary torsion is discarded while localizing away from 2.'''
    pass

class Sigma7Error(ValueError):
    pass

class MalformedInput(Sigma7Error):
    '''Raw input of the wrong type or shape (e.g. a float where a group order is expected).'''
    pass

class MissingSummand(Sigma7Error):
    pass

class UnsuspendableAtom(Sigma7Error):
    pass

class OutOfTable(Sigma7Error):
    '''A homotopy group was asked for outside the closed table of known entries.'''
    pass

class WuLengthMismatch(Sigma7Error):
    pass

class NegativeRank(Sigma7Error):
    pass

class IllegalDirection(Sigma7Error):
    pass

class BadRange(Sigma7Error):
    pass

class NeedsDoubleSuspension(Sigma7Error):
    '''The single suspension theorems need H = 0 or T = 0.

    ``reason`` is a short machine readable token, e.g. ``'H-and-T-nonzero'``.'''
    def __init__(self, message, reason='H-and-T-nonzero'):
        super(NeedsDoubleSuspension, self).__init__(message)
        self.reason = reason

def warn_two_torsion(dropped):
    if dropped:
        warnings.warn(f'dropped 2-primary torsion {dropped} (localized away from 2)', TwoTorsionDropped, stacklevel=3)
