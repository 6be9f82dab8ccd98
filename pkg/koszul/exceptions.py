class ComplexError(ArithmeticError):
    def __init__(self, position: int, generator: str):
        error = f"d_{position - 1} o d_{position} != 0 на образующей {generator}"
        super().__init__(error)


class ChainMapError(ArithmeticError):
    def __init__(self, name: str, position: int, generator: str):
        error = f"Квадрат отображения `{name}` в позиции {position} не коммутирует на образующей {generator}"
        super().__init__(error)


class CapViolationError(ValueError):
    def __init__(self, element: str, cap: int | None):
        error = f"Элемент {element} нарушает ограничение степени по x_n (не больше {cap})"
        super().__init__(error)


class GradingError(ValueError):
    def __init__(self, what: str):
        error = f"Нарушение градуировки: {what}"
        super().__init__(error)


class CharacteristicObstructionError(ArithmeticError):
    def __init__(self, scalar, field):
        self.scalar = scalar
        self.field = field
        error = (
            f"lambda_n1(g) = {scalar} обращается в ноль в поле {field}: сечение Λ̃ не существует, "
            "здесь требуется характеристика 0 (или не делящая скаляр)"
        )
        super().__init__(error)


class TruncationIndexError(ValueError):
    def __init__(self, name: str, k: int, low: int):
        error = f"Отображение `{name}` определено при k >= {low}, передано k={k}"
        super().__init__(error)
