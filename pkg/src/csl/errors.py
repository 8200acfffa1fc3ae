"""Exception types shared across the ring families."""


class CslError(Exception):
    pass


class RankDeficient(CslError):
    pass


class DimensionMismatch(CslError):
    pass


class ZeroDivisor(CslError):
    pass


class BadTower(CslError):
    pass


class NotAssociative(CslError):
    def __init__(self, triple):
        self.witness = triple
        super().__init__(f"(xy)z != x(yz) at {triple}")


class NotCommutative(CslError):
    def __init__(self, pair):
        self.witness = pair
        super().__init__(f"xy != yx at {pair}")


class BadDiscriminant(CslError):
    pass


class RealQuadraticUnsupported(CslError):
    pass


class ZeroIdeal(CslError):
    pass


class WrongMultiplier(CslError):
    pass


class BoundTooSmall(CslError):
    pass


class InternalInvariant(CslError):
    pass


class NotSubalgebra(CslError):
    pass


class UnsupportedDegree(CslError):
    pass


class EmptyBattery(CslError):
    pass


class UnknownExample(CslError):
    pass
