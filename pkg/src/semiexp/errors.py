class SemigroupError(Exception):
    pass


class ShapeError(SemigroupError, ValueError):
    pass


class NonAssociative(SemigroupError, ValueError):
    def __init__(self, witness):
        self.witness = tuple(int(x) for x in witness)
        i, j, k = self.witness
        super().__init__(f"table is not associative at (i, j, k) = {self.witness}: "
                         f"({i}*{j})*{k} != {i}*({j}*{k})")


class NotIdempotent(SemigroupError, ValueError):
    pass


class DegreeMismatch(SemigroupError, ValueError):
    pass


class EmptyGeneratorSet(SemigroupError, ValueError):
    pass


class NotGenerating(SemigroupError, ValueError):
    pass


class UnknownLetter(SemigroupError, KeyError):
    def __str__(self):
        return f"letter {self.args[0]!r} is not in the alphabet"


class EmptyWord(SemigroupError, ValueError):
    pass


class AlphabetMismatch(SemigroupError, ValueError):
    pass


class NotMultiplicative(SemigroupError, ValueError):
    def __init__(self, x, y):
        self.witness = (x, y)
        super().__init__(f"f({x}*{y}) != f({x})*f({y})")


class GeneratorMismatch(SemigroupError, ValueError):
    def __init__(self, letter):
        self.witness = letter
        super().__init__(f"f(phi({letter!r})) != psi({letter!r})")


class ExpansionTooLarge(SemigroupError, RuntimeError):
    pass


class NotWellDefined(SemigroupError, ValueError):
    def __init__(self, u, v):
        self.witness = (u, v)
        super().__init__(f"words {u!r} and {v!r} are identified in the source but not the target")


class ImageNotOnto(SemigroupError, ValueError):
    pass


class GeneratorIncompatible(SemigroupError, ValueError):
    pass


class TermSyntaxError(SemigroupError, ValueError):
    def __init__(self, msg, pos):
        self.pos = pos
        super().__init__(f"{msg} at offset {pos}")


class UnsupportedExponent(SemigroupError, ValueError):
    pass


class UnboundVariable(SemigroupError, KeyError):
    pass


class BudgetExceeded(SemigroupError, RuntimeError):
    pass


class UnknownBasis(SemigroupError, KeyError):
    pass


class OrderTooLarge(SemigroupError, ValueError):
    pass


class UnknownSuite(SemigroupError, KeyError):
    pass
