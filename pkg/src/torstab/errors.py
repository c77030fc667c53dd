"""Exception hierarchy.  Everything derives from :class:`ToricError`."""


class ToricError(ValueError):
    pass


class ZeroVector(ToricError):
    pass


class RankMismatch(ToricError):
    pass


class EmptyFamily(ToricError):
    pass


class NotUnimodular(ToricError):
    pass


class NotComplete(ToricError):
    pass


class ParallelRays(ToricError):
    pass


class TooFewRays(ToricError):
    pass


class NotSmooth(ToricError):
    pass


class SingularCone(NotSmooth):
    pass


class BadNormalization(ToricError):
    pass


class TooManyWeights(ToricError):
    pass


class InvalidSplitting(ToricError):
    pass


class EmptyIndexSet(ToricError):
    pass


class TooFewBlowups(ToricError):
    pass


class NotARefinement(ToricError):
    pass


class BadParameter(ToricError):
    pass
